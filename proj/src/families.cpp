#include "assoc/families.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "assoc/deletion.hpp"
#include "assoc/error.hpp"

namespace assoc {

namespace {

void require_minimum(Family tag, int n) {
    if (n < minimum_size(tag)) {
        throw SizeError(to_string(FamilyId{tag, n}) + " needs n >= " +
                        std::to_string(minimum_size(tag)));
    }
}

LabeledTriangulation delete_all(LabeledTriangulation t, std::initializer_list<int> labels) {
    for (int v : labels) t = t.deleted(v);
    return t;
}

// Drops vertex 2 (which must sit in triangle 1, 2, 3) and renumbers so that 3
// keeps its label.
Triangulation drop_vertex_two(const Triangulation& t) {
    if (!t.has_interior(Edge(1, 3))) throw std::logic_error("expected the edge 1-3");
    return LabeledTriangulation(t).deleted(2).relabeled(3, 3);
}

Triangulation pre_b(const Triangulation& a_minus) {
    const std::array<Edge, 3> flips{Edge(2, 5), Edge(2, 4), Edge(2, 6)};
    return apply_flips(a_minus, flips).back();
}

}  // namespace

int minimum_size(Family tag) {
    return tag == Family::B || tag == Family::C ? 7 : 3;
}

std::string to_string(FamilyId id) {
    static constexpr std::array<char, 5> names{'Z', 'A', 'B', 'C', 'D'};
    return std::string(1, names[static_cast<int>(id.tag)]) + ":" + std::to_string(id.n);
}

FamilyId parse_family(std::string_view text) {
    if (text.size() < 3 || text[1] != ':') throw InvalidInput("expected a family name like A:12");
    FamilyId id;
    switch (text[0]) {
        case 'Z': id.tag = Family::Z; break;
        case 'A': id.tag = Family::A; break;
        case 'B': id.tag = Family::B; break;
        case 'C': id.tag = Family::C; break;
        case 'D': id.tag = Family::D; break;
        default: throw InvalidInput("unknown family '" + std::string(1, text[0]) + "'");
    }
    const auto digits = text.substr(2);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InvalidInput("malformed polygon size in '" + std::string(text) + "'");
    }
    if (id.n > kMaxVertices) throw SizeError("polygon size above " + std::to_string(kMaxVertices));
    require_minimum(id.tag, id.n);
    return id;
}

Triangulation zigzag(int n) {
    if (n < 3 || n > kMaxVertices) throw SizeError("zigzag needs 3 <= n <= " + std::to_string(kMaxVertices));
    std::vector<int> walk{2, 4, 1, 5, 0};
    for (int up = 6, down = n - 1; static_cast<int>(walk.size()) < n;) {
        walk.push_back(walk.size() % 2 == 1 ? up++ : down--);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; static_cast<int>(edges.size()) < n - 3; ++i) {
        edges.emplace_back(walk[i] % n, walk[i + 1] % n);
    }
    return Triangulation::from_interior(n, edges);
}

TriangulationPair family_A(int n) {
    require_minimum(Family::A, n);
    const int m = n + 4;
    const auto bar = [m](int k) { return (k + m / 2) % m; };
    const LabeledTriangulation z(zigzag(m));
    const Triangulation minus = delete_all(z, {0, 1, bar(0), bar(1)}).relabeled(2, 2);
    const Triangulation plus = delete_all(z, {4, 5, bar(4), bar(5)}).relabeled(2, 1);
    return {minus, plus};
}

TriangulationPair family_B(int n) {
    require_minimum(Family::B, n);
    const TriangulationPair a = family_A(n + 1);
    return {drop_vertex_two(pre_b(a.first)), drop_vertex_two(a.second)};
}

TriangulationPair family_C(int n) {
    const TriangulationPair b = family_B(n);
    return {b.first.flip(Edge(4, 6)).first, b.second};
}

TriangulationPair family_D(int n) {
    require_minimum(Family::D, n);
    const Triangulation minus = delete_all(LabeledTriangulation(zigzag(n + 2)), {0, 1}).relabeled(2, n - 1);
    const Triangulation plus =
        delete_all(LabeledTriangulation(zigzag(n + 1)), {4 % (n + 1)}).relabeled(2, (n - 2) % n);
    return {minus, plus};
}

TriangulationPair family(FamilyId id) {
    switch (id.tag) {
        case Family::Z: {
            const Triangulation z = zigzag(id.n);
            return {z, z};
        }
        case Family::A: return family_A(id.n);
        case Family::B: return family_B(id.n);
        case Family::C: return family_C(id.n);
        case Family::D: return family_D(id.n);
    }
    throw InvalidInput("unknown family");
}

int comb_teeth(const Triangulation& t, int v) {
    if (v < 0 || v >= t.size()) throw InvalidInput("vertex " + std::to_string(v) + " outside the polygon");
    return t.interior_degree(v);
}

bool is_zigzag(const Triangulation& t) {
    const int n = t.size();
    const std::vector<Edge> edges = t.interior();
    if (edges.empty()) return false;

    std::vector<std::vector<int>> nb(n);
    for (const Edge& e : edges) {
        nb[e.a].push_back(e.b);
        nb[e.b].push_back(e.a);
    }
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (nb[v].size() > 2) return false;
        if (nb[v].size() == 1 && start < 0) start = v;
    }
    if (start < 0) return false;  // a cycle

    std::vector<int> path{start};
    for (int prev = -1, cur = start;;) {
        int next = -1;
        for (int w : nb[cur]) {
            if (w != prev) next = w;
        }
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    if (path.size() != edges.size() + 1) return false;  // disconnected

    // x -> y -> z runs clockwise iff y comes before z when walking clockwise from x.
    auto clockwise = [n](int x, int y, int z) { return (y - x + n) % n < (z - x + n) % n; };
    for (std::size_t i = 2; i + 1 < path.size(); ++i) {
        if (clockwise(path[i - 2], path[i - 1], path[i]) == clockwise(path[i - 1], path[i], path[i + 1])) {
            return false;
        }
    }
    return true;
}

}  // namespace assoc
