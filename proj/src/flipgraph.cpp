#include "assoc/flipgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "assoc/distance.hpp"

namespace assoc {

namespace {

void require_budget(int n, const Budget& budget) {
    if (n < 3 || n > kMaxVertices) throw InvalidInput("polygon size out of range");
    if (n - 2 > 35 || catalan(n - 2) > budget.max_nodes) {
        throw ResourceError("the " + std::to_string(n) + "-gon has more triangulations than the node budget of " +
                            std::to_string(budget.max_nodes));
    }
}

// Depth-first expansion of pending sub-polygons [i, j]; each choice of apex on
// the pending side fixes one triangle.
void enumerate_into(int n, std::vector<std::pair<int, int>>& pending, CanonicalKey& key,
                    std::vector<CanonicalKey>& out) {
    if (pending.empty()) {
        out.push_back(key);
        return;
    }
    const auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) {
        enumerate_into(n, pending, key, out);
    } else {
        for (int k = i + 1; k < j; ++k) {
            const bool left = k - i >= 2;
            const bool right = j - k >= 2;
            if (left) key.set(diagonal_index(n, Edge(i, k)));
            if (right) key.set(diagonal_index(n, Edge(k, j)));
            pending.emplace_back(i, k);
            pending.emplace_back(k, j);
            enumerate_into(n, pending, key, out);
            pending.pop_back();
            pending.pop_back();
            if (left) key.reset(diagonal_index(n, Edge(i, k)));
            if (right) key.reset(diagonal_index(n, Edge(k, j)));
        }
    }
    pending.emplace_back(i, j);
}

std::vector<CanonicalKey> all_keys(int n, const Budget& budget) {
    require_budget(n, budget);
    std::vector<CanonicalKey> keys;
    keys.reserve(catalan(n - 2));
    std::vector<std::pair<int, int>> pending{{0, n - 1}};
    CanonicalKey key;
    enumerate_into(n, pending, key, keys);
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Largest BFS level reached from any of up to 64 sources at once.
int batch_eccentricity(const FlipGraph& g, std::span<const std::size_t> sources) {
    const std::size_t n = g.size();
    std::vector<std::uint64_t> seen(n, 0), front(n, 0), next(n, 0);
    for (std::size_t s = 0; s < sources.size(); ++s) {
        seen[sources[s]] |= std::uint64_t{1} << s;
        front[sources[s]] |= std::uint64_t{1} << s;
    }
    int level = 0;
    for (;;) {
        bool any = false;
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t in = 0;
            for (std::uint32_t w : g.neighbors(v)) in |= front[w];
            in &= ~seen[v];
            next[v] = in;
            any |= in != 0;
        }
        if (!any) return level;
        ++level;
        for (std::size_t v = 0; v < n; ++v) seen[v] |= next[v];
        front.swap(next);
    }
}

}  // namespace

std::vector<Triangulation> enumerate(int n, const Budget& budget) {
    std::vector<Triangulation> out;
    for (const CanonicalKey& k : all_keys(n, budget)) out.push_back(Triangulation::from_key_unchecked(n, k));
    return out;
}

FlipGraph FlipGraph::build(int n, const Budget& budget) {
    FlipGraph g;
    g.n_ = n;
    g.keys_ = all_keys(n, budget);
    const std::size_t d = static_cast<std::size_t>(n - 3);
    g.adjacency_.assign(g.keys_.size() * d, 0);
    for (std::size_t i = 0; i < g.keys_.size(); ++i) {
        std::size_t slot = 0;
        const CanonicalKey& key = g.keys_[i];
        Triangulation::from_key_unchecked(n, key).for_each_flip([&](Edge removed, Edge introduced) {
            CanonicalKey child = key;
            child.reset(diagonal_index(n, removed));
            child.set(diagonal_index(n, introduced));
            const auto it = std::lower_bound(g.keys_.begin(), g.keys_.end(), child);
            g.adjacency_[i * d + slot++] = static_cast<std::uint32_t>(it - g.keys_.begin());
        });
    }
    return g;
}

std::optional<std::size_t> FlipGraph::find(const CanonicalKey& key) const {
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t FlipGraph::index_of(const Triangulation& t) const {
    if (t.size() != n_) throw InvalidInput("triangulation is not on the graph's polygon");
    const auto i = find(t.key());
    if (!i) throw InvalidInput("key is not a triangulation of the graph's polygon");
    return *i;
}

std::vector<std::uint8_t> FlipGraph::distances_from(std::size_t source) const {
    constexpr std::uint8_t unseen = 0xff;
    std::vector<std::uint8_t> dist(size(), unseen);
    std::vector<std::uint32_t> queue;
    queue.reserve(size());
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t x = queue[head];
        for (std::uint32_t y : neighbors(x)) {
            if (dist[y] != unseen) continue;
            dist[y] = static_cast<std::uint8_t>(dist[x] + 1);
            queue.push_back(y);
        }
    }
    return dist;
}

std::vector<std::uint8_t> bfs_distances(const FlipGraph& g, const Triangulation& source) {
    return g.distances_from(g.index_of(source));
}

DiameterRow diameter(int n, const DiameterOptions& options) {
    const FlipGraph g = FlipGraph::build(n, options.budget);
    DiameterRow row;
    row.n = n;
    row.count = g.size();
    row.d = n - 3;
    row.two_d_minus_4 = 2 * row.d - 4;
    if (n <= 3) return row;

    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (dihedral_class(g.at(i)) == g.keys()[i]) reps.push_back(i);
    }

    const std::size_t batches = (reps.size() + 63) / 64;
    std::atomic<std::size_t> cursor{0};
    std::atomic<int> best{0};
    auto worker = [&] {
        for (std::size_t b; (b = cursor.fetch_add(1)) < batches;) {
            const std::size_t lo = b * 64;
            const std::size_t hi = std::min(reps.size(), lo + 64);
            const int e = batch_eccentricity(g, std::span(reps).subspan(lo, hi - lo));
            int cur = best.load();
            while (e > cur && !best.compare_exchange_weak(cur, e)) {
            }
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    row.diameter = best.load();
    return row;
}

// --- AllPairs --------------------------------------------------------------------

AllPairs::AllPairs(int n, const Budget& budget) : graph_(FlipGraph::build(n, budget)) {
    const std::size_t m = graph_.size();
    if (m * m > budget.max_nodes * 8) {
        throw ResourceError("all-pairs table for the " + std::to_string(n) + "-gon exceeds the budget");
    }
    table_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto row = graph_.distances_from(i);
        std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(i * m));
    }
}

int AllPairs::theta(std::size_t i, std::size_t j, int a) const {
    const int n = graph_.polygon_size();
    const int total = distance(i, j);
    // best[x]: most incident flips on a geodesic prefix from i to x.
    std::unordered_map<std::size_t, int> best{{i, 0}};
    std::vector<std::size_t> layer{i};
    for (int k = 0; k < total; ++k) {
        std::vector<std::size_t> next;
        for (std::size_t x : layer) {
            const CanonicalKey& kx = graph_.keys()[x];
            for (std::uint32_t y : graph_.neighbors(x)) {
                if (distance(i, y) != k + 1 || distance(y, j) != total - k - 1) continue;
                const CanonicalKey& ky = graph_.keys()[y];
                Flip f;
                for (int bit = 0; bit < diagonal_count(n); ++bit) {
                    if (kx.test(bit) && !ky.test(bit)) f.removed = diagonal_at(n, bit);
                    if (ky.test(bit) && !kx.test(bit)) f.introduced = diagonal_at(n, bit);
                }
                const int score = best[x] + (flip_incident(n, f, a) ? 1 : 0);
                const auto [it, inserted] = best.emplace(y, score);
                if (inserted) {
                    next.push_back(y);
                } else {
                    it->second = std::max(it->second, score);
                }
            }
        }
        layer = std::move(next);
    }
    return best.at(j);
}

// --- Geodesic DAG ------------------------------------------------------------------

namespace {

using DepthMap = std::unordered_map<CanonicalKey, int, CanonicalKeyHash>;

// Layered BFS from `start` keeping only nodes with depth + |T \ goal| <= limit.
DepthMap pruned_bfs(const Triangulation& start, const Triangulation& goal, int limit,
                    std::size_t& stored, const Budget& budget) {
    const int n = start.size();
    DepthMap depth{{start.key(), 0}};
    std::vector<CanonicalKey> layer{start.key()};
    for (int g = 1; g <= limit && !layer.empty(); ++g) {
        std::vector<CanonicalKey> next;
        for (const CanonicalKey& key : layer) {
            Triangulation::from_key_unchecked(n, key).for_each_flip([&](Edge removed, Edge introduced) {
                CanonicalKey child = key;
                child.reset(diagonal_index(n, removed));
                child.set(diagonal_index(n, introduced));
                const Triangulation t = Triangulation::from_key_unchecked(n, child);
                if (g + interior_difference(t, goal) > limit) return;
                if (depth.emplace(child, g).second) {
                    next.push_back(child);
                    if (++stored > budget.max_nodes) {
                        throw ResourceError("geodesic DAG exceeded the node budget of " +
                                            std::to_string(budget.max_nodes));
                    }
                }
            });
        }
        layer = std::move(next);
    }
    return depth;
}

}  // namespace

std::size_t GeodesicDag::node_count() const {
    std::size_t c = 0;
    for (const auto& l : layers) c += l.size();
    return c;
}

int GeodesicDag::max_incident_flips(int a) const {
    const int n = u.size();
    std::vector<int> best(1, 0);
    for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
        std::vector<int> next(layers[k + 1].size(), -1);
        for (const DagArc& arc : arcs[k]) {
            const int score = best[arc.from] + (flip_incident(n, arc.flip, a) ? 1 : 0);
            next[arc.to] = std::max(next[arc.to], score);
        }
        best = std::move(next);
    }
    return best.empty() ? 0 : best.front();
}

std::string GeodesicDag::to_adjacency_text() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        std::vector<std::vector<int>> succ(layers[k].size());
        if (k < arcs.size()) {
            for (const DagArc& arc : arcs[k]) succ[arc.from].push_back(arc.to);
        }
        for (std::size_t i = 0; i < layers[k].size(); ++i) {
            out << layers[k][i].hex() << ':';
            for (std::size_t s = 0; s < succ[i].size(); ++s) {
                out << (s ? "," : " ") << layers[k + 1][succ[i][s]].hex();
            }
            out << '\n';
        }
    }
    return out.str();
}

GeodesicDag geodesic_dag(const Triangulation& u, const Triangulation& v, const Budget& budget) {
    if (u.size() != v.size()) throw InvalidInput("pair members live on polygons of different sizes");
    const int n = u.size();
    SearchOptions options;
    options.budget = budget;
    const int delta = flip_distance(u, v, options).distance;

    std::size_t stored = 0;
    const DepthMap from_u = pruned_bfs(u, v, delta, stored, budget);
    const DepthMap from_v = pruned_bfs(v, u, delta, stored, budget);

    GeodesicDag dag{u, v, delta, {}, {}};
    dag.layers.resize(static_cast<std::size_t>(delta) + 1);
    for (const auto& [key, du] : from_u) {
        const auto it = from_v.find(key);
        if (it != from_v.end() && du + it->second == delta) dag.layers[du].push_back(key);
    }
    for (auto& layer : dag.layers) std::sort(layer.begin(), layer.end());

    dag.arcs.resize(static_cast<std::size_t>(delta));
    for (int k = 0; k < delta; ++k) {
        const auto& here = dag.layers[k];
        const auto& there = dag.layers[k + 1];
        for (std::size_t i = 0; i < here.size(); ++i) {
            Triangulation::from_key_unchecked(n, here[i]).for_each_flip([&](Edge removed, Edge introduced) {
                CanonicalKey child = here[i];
                child.reset(diagonal_index(n, removed));
                child.set(diagonal_index(n, introduced));
                const auto it = std::lower_bound(there.begin(), there.end(), child);
                if (it == there.end() || *it != child) return;
                dag.arcs[k].push_back(DagArc{static_cast<int>(i), static_cast<int>(it - there.begin()),
                                             Flip{removed, introduced}});
            });
        }
    }
    return dag;
}

PrefixCheck check_prefix_theorem(const Triangulation& u, const Triangulation& v,
                                 const FlipPath& prefix, const Budget& budget) {
    if (prefix.front() != u) throw InvalidInput("prefix does not start at the first triangulation");
    const GeodesicDag dag = geodesic_dag(u, v, budget);
    CanonicalKey introduced;
    const int n = u.size();
    for (const Flip& f : prefix.flips()) introduced.set(diagonal_index(n, f.introduced));

    PrefixCheck out;
    for (const auto& layer : dag.layers) {
        for (const CanonicalKey& key : layer) {
            bool all = true;
            for (std::size_t w = 0; w < kKeyWords && all; ++w) {
                all = (introduced.words()[w] & ~key.words()[w]) == 0;
            }
            if (all) {
                out.hypothesis = true;
                break;
            }
        }
        if (out.hypothesis) break;
    }
    if (out.hypothesis) {
        SearchOptions options;
        options.budget = budget;
        const int rest = flip_distance(prefix.back(), v, options).distance;
        out.holds = rest == dag.distance - static_cast<int>(prefix.length());
    }
    return out;
}

bool flip_incident(int n, const Flip& f, int a) {
    const int b = (a + 1) % n;
    auto corner = [&](int x) { return f.removed.has(x) || f.introduced.has(x); };
    return corner(a) && corner(b);
}

}  // namespace assoc
