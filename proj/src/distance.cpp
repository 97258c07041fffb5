#include "assoc/distance.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace assoc {

namespace {

int count_and_not(const CanonicalKey& x, const CanonicalKey& y) {
    int c = 0;
    for (std::size_t w = 0; w < kKeyWords; ++w) c += std::popcount(x.words()[w] & ~y.words()[w]);
    return c;
}

std::vector<Edge> route_to_fan(Triangulation t, int x) {
    const int n = t.size();
    std::vector<Edge> flips;
    while (t.interior_degree(x) < n - 3) {
        bool moved = false;
        for (const Edge& e : t.interior()) {
            if (e.has(x)) continue;
            const Quad q = t.quadrilateral(e);
            if (q.inner == x || q.outer == x) {
                flips.push_back(e);
                t = t.flip(e).first;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("fan route stalled");
    }
    return flips;
}

int best_fan_vertex(const Triangulation& u, const Triangulation& v, int* bound) {
    const int n = u.size();
    int best = 0;
    int best_cost = -1;
    for (int x = 0; x < n; ++x) {
        const int cost = (n - 3 - u.interior_degree(x)) + (n - 3 - v.interior_degree(x));
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = x;
        }
    }
    if (bound) *bound = best_cost;
    return best;
}

std::vector<Edge> fan_route_edges(const Triangulation& u, const Triangulation& v) {
    const int x = best_fan_vertex(u, v, nullptr);
    std::vector<Edge> edges = route_to_fan(u, x);
    // Walk V -> fan, then undo it backwards by flipping each introduced edge.
    const FlipPath back = apply_flips(v, route_to_fan(v, x));
    for (auto it = back.flips().rbegin(); it != back.flips().rend(); ++it) {
        edges.push_back(it->introduced);
    }
    return edges;
}

// --- Bidirectional layered search --------------------------------------------

struct NodeInfo {
    std::uint8_t depth;
    std::int16_t removed;     // diagonal flipped out of the parent, -1 at the root
    std::int16_t introduced;  // diagonal that replaced it
};

using NodeMap = std::unordered_map<CanonicalKey, NodeInfo, CanonicalKeyHash>;

struct KernelResult {
    std::vector<Edge> flips;
    std::size_t expanded = 0;
};

CanonicalKey parent_of(const CanonicalKey& key, const NodeInfo& info) {
    CanonicalKey p = key;
    p.reset(info.introduced);
    p.set(info.removed);
    return p;
}

KernelResult search(const Triangulation& u, const Triangulation& v, const SearchOptions& options) {
    KernelResult result;
    if (u == v) return result;
    const int n = u.size();

    int upper = 0;
    best_fan_vertex(u, v, &upper);
    const int lower = interior_difference(u, v);
    if (lower == upper) {
        result.flips = fan_route_edges(u, v);
        return result;
    }

    CanonicalKey frozen;
    if (options.restrict_common) {
        for (std::size_t w = 0; w < kKeyWords; ++w) {
            for (std::uint64_t b = u.key().words()[w] & v.key().words()[w]; b; b &= b - 1) {
                frozen.set(static_cast<int>(w * 64) + std::countr_zero(b));
            }
        }
    }

    NodeMap fwd, bwd;
    fwd.emplace(u.key(), NodeInfo{0, -1, -1});
    bwd.emplace(v.key(), NodeInfo{0, -1, -1});
    std::vector<CanonicalKey> front_f{u.key()}, front_b{v.key()};
    int df = 0, db = 0;
    std::optional<CanonicalKey> meet;

    while (!meet) {
        if (df + db + 1 >= upper || front_f.empty() || front_b.empty()) break;
        const bool forward = front_f.size() <= front_b.size();
        NodeMap& mine = forward ? fwd : bwd;
        const NodeMap& other = forward ? bwd : fwd;
        std::vector<CanonicalKey>& frontier = forward ? front_f : front_b;
        const CanonicalKey& target = forward ? v.key() : u.key();
        const int g = (forward ? df : db) + 1;

        std::sort(frontier.begin(), frontier.end());
        std::vector<CanonicalKey> next;
        for (const CanonicalKey& key : frontier) {
            ++result.expanded;
            const Triangulation t = Triangulation::from_key_unchecked(n, key);
            t.for_each_flip([&](Edge removed, Edge introduced) {
                if (meet) return;
                const int ri = diagonal_index(n, removed);
                if (frozen.test(ri)) return;
                CanonicalKey child = key;
                child.reset(ri);
                const int ii = diagonal_index(n, introduced);
                child.set(ii);
                if (g + count_and_not(child, target) > upper - 1) return;
                if (mine.contains(child)) return;
                const NodeInfo info{static_cast<std::uint8_t>(g), static_cast<std::int16_t>(ri),
                                    static_cast<std::int16_t>(ii)};
                mine.emplace(child, info);
                if (other.contains(child)) {
                    meet = child;
                    return;
                }
                next.push_back(child);
            });
            if (meet) break;
            if (fwd.size() + bwd.size() > options.budget.max_nodes) {
                throw ResourceError("search exceeded the node budget of " +
                                        std::to_string(options.budget.max_nodes),
                                    std::max(lower, df + db + 1), upper);
            }
        }
        frontier = std::move(next);
        (forward ? df : db) = g;
    }

    if (!meet) {
        result.flips = fan_route_edges(u, v);
        return result;
    }

    std::vector<Edge> head;
    for (CanonicalKey key = *meet; key != u.key();) {
        const NodeInfo& info = fwd.at(key);
        head.push_back(diagonal_at(n, info.removed));
        key = parent_of(key, info);
    }
    std::reverse(head.begin(), head.end());
    for (CanonicalKey key = *meet; key != v.key();) {
        const NodeInfo& info = bwd.at(key);
        head.push_back(diagonal_at(n, info.introduced));
        key = parent_of(key, info);
    }
    result.flips = std::move(head);
    return result;
}

// --- Pipeline ------------------------------------------------------------------

struct Accumulator {
    std::vector<Edge> flips;  // original labels
    std::vector<Reduction> reductions;
    std::size_t expanded = 0;
};

Edge lift(Edge e, const std::vector<int>& labels) { return Edge(labels[e.a], labels[e.b]); }

void solve(const Triangulation& u, const Triangulation& v, const std::vector<int>& labels,
           const SearchOptions& options, Accumulator& acc) {
    if (u == v) return;
    if (options.decompose) {
        const std::vector<Edge> common = common_interior(u, v);
        if (!common.empty()) {
            for (const Edge& e : common) acc.reductions.push_back({ReductionKind::split, lift(e, labels)});
            for (const Component& c : decompose(u, v)) {
                std::vector<int> composed;
                composed.reserve(c.vertices.size());
                for (int x : c.vertices) composed.push_back(labels[x]);
                solve(c.pair.first, c.pair.second, composed, options, acc);
            }
            return;
        }
    }
    if (options.reduce) {
        const ForcedReduction fr = reduce_forced(u, v);
        if (fr.applied() > 0) {
            for (const Flip& f : fr.flips) {
                acc.flips.push_back(lift(f.removed, labels));
                acc.reductions.push_back({ReductionKind::forced_flip, lift(f.removed, labels)});
            }
            solve(fr.reduced, v, labels, options, acc);
            return;
        }
    }
    const KernelResult k = search(u, v, options);
    acc.expanded += k.expanded;
    for (const Edge& e : k.flips) acc.flips.push_back(lift(e, labels));
}

}  // namespace

std::vector<Component> decompose(const Triangulation& u, const Triangulation& v) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    const int n = u.size();
    std::vector<std::vector<int>> cells(1);
    for (int i = 0; i < n; ++i) cells[0].push_back(i);
    for (const Edge& e : common_interior(u, v)) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto& cell = cells[c];
            const auto ia = std::find(cell.begin(), cell.end(), e.a);
            const auto ib = std::find(cell.begin(), cell.end(), e.b);
            if (ia == cell.end() || ib == cell.end()) continue;
            std::vector<int> inside(ia, ib + 1);
            std::vector<int> outside(cell.begin(), ia + 1);
            outside.insert(outside.end(), ib, cell.end());
            cell = std::move(inside);
            cells.push_back(std::move(outside));
            break;
        }
    }

    std::vector<Component> out;
    for (const auto& cell : cells) {
        const int m = static_cast<int>(cell.size());
        std::vector<int> local(n, -1);
        for (int i = 0; i < m; ++i) local[cell[i]] = i;
        auto induce = [&](const Triangulation& t) {
            std::vector<Edge> edges;
            for (const Edge& e : t.interior()) {
                if (local[e.a] < 0 || local[e.b] < 0) continue;
                const Edge f(local[e.a], local[e.b]);
                if (is_diagonal(m, f)) edges.push_back(f);
            }
            return Triangulation::from_interior(m, edges);
        };
        out.push_back(Component{TriangulationPair(induce(u), induce(v)), cell});
    }
    return out;
}

ForcedReduction reduce_forced(const Triangulation& u, const Triangulation& v) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    ForcedReduction out{u, {}};
    for (;;) {
        std::optional<Flip> forced;
        out.reduced.for_each_flip([&](Edge removed, Edge introduced) {
            if (!forced && v.has_interior(introduced)) forced = Flip{removed, introduced};
        });
        if (!forced) return out;
        out.reduced = out.reduced.flip(forced->removed).first;
        out.flips.push_back(*forced);
    }
}

int fan_upper_bound(const Triangulation& u, const Triangulation& v) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    int bound = 0;
    best_fan_vertex(u, v, &bound);
    return bound;
}

FlipPath fan_route(const Triangulation& u, const Triangulation& v) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    const std::vector<Edge> edges = fan_route_edges(u, v);
    FlipPath path = apply_flips(u, edges);
    if (path.back() != v) throw std::logic_error("fan route does not reach the target");
    return path;
}

SearchReport flip_distance(const Triangulation& u, const Triangulation& v,
                           const SearchOptions& options) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    std::vector<int> labels(u.size());
    for (int i = 0; i < u.size(); ++i) labels[i] = i;
    Accumulator acc;
    try {
        solve(u, v, labels, options, acc);
    } catch (const ResourceError& e) {
        const int solved = static_cast<int>(acc.flips.size());
        const int lower = std::max(interior_difference(u, v), solved + e.lower_bound().value_or(0));
        throw ResourceError(e.what(), lower, fan_upper_bound(u, v));
    }
    FlipPath witness = apply_flips(u, acc.flips);
    if (witness.back() != v) throw std::logic_error("search witness does not reach the target");
    const int d = static_cast<int>(witness.length());
    return SearchReport{d, acc.expanded, std::move(witness), std::move(acc.reductions)};
}

std::string to_text(const SearchReport& report) {
    std::ostringstream out;
    out << "distance " << report.distance << '\n';
    out << "expanded " << report.expanded << '\n';
    out << "witness";
    for (const Flip& f : report.witness.flips()) {
        out << ' ' << to_string(f.removed) << '>' << to_string(f.introduced);
    }
    out << '\n';
    out << "reductions " << report.reductions.size() << '\n';
    return out.str();
}

std::string to_json(const SearchReport& report) {
    nlohmann::ordered_json j;
    j["distance"] = report.distance;
    j["expanded"] = report.expanded;
    j["witness"] = nlohmann::json::array();
    for (const Flip& f : report.witness.flips()) {
        j["witness"].push_back({{"removed", {f.removed.a, f.removed.b}},
                                {"introduced", {f.introduced.a, f.introduced.b}}});
    }
    j["reductions"] = nlohmann::json::array();
    for (const Reduction& r : report.reductions) {
        j["reductions"].push_back({{"kind", r.kind == ReductionKind::split ? "split" : "forced_flip"},
                                   {"edge", {r.edge.a, r.edge.b}}});
    }
    return j.dump();
}

}  // namespace assoc
