#include "assoc/polygon.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <random>

#include "assoc/error.hpp"

namespace assoc {

namespace {

void require_size(int n) {
    if (n < 3 || n > kMaxVertices) {
        throw InvalidInput("polygon size " + std::to_string(n) + " outside [3, " +
                           std::to_string(kMaxVertices) + "]");
    }
}

void require_label(int n, int v) {
    if (v < 0 || v >= n) {
        throw InvalidInput("vertex " + std::to_string(v) + " outside [0, " +
                           std::to_string(n) + ")");
    }
}

struct DiagonalTables {
    // by_index[n][i] is the i-th diagonal in lexicographic order.
    std::array<std::vector<Edge>, kMaxVertices + 1> by_index;
    // offset[n][a] is the rank of the first diagonal starting at a.
    std::array<std::vector<int>, kMaxVertices + 1> offset;

    DiagonalTables() {
        for (int n = 3; n <= kMaxVertices; ++n) {
            offset[n].assign(n, 0);
            for (int a = 0; a < n; ++a) {
                offset[n][a] = static_cast<int>(by_index[n].size());
                for (int b = a + 2; b < n; ++b) {
                    if (a == 0 && b == n - 1) continue;
                    by_index[n].emplace_back(a, b);
                }
            }
        }
    }
};

const DiagonalTables& tables() {
    static const DiagonalTables t;
    return t;
}

bool between_open(int a, int b, int v) { return a < v && v < b; }

}  // namespace

std::string to_string(Edge e) { return std::to_string(e.a) + "-" + std::to_string(e.b); }

int CanonicalKey::count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::size_t CanonicalKey::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
        std::uint64_t z = w + h;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

std::string CanonicalKey::hex() const {
    int top = static_cast<int>(kKeyWords) - 1;
    while (top > 0 && words_[top] == 0) --top;
    std::string out;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(words_[top]));
    out += buf;
    for (int w = top - 1; w >= 0; --w) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(words_[w]));
        out += buf;
    }
    return out;
}

int diagonal_count(int n) { return n * (n - 3) / 2; }

bool is_boundary(int n, Edge e) {
    return e.a != e.b && (e.b - e.a == 1 || (e.a == 0 && e.b == n - 1));
}

bool is_diagonal(int n, Edge e) {
    return e.a >= 0 && e.b < n && e.a != e.b && !is_boundary(n, e);
}

int diagonal_index(int n, Edge e) { return tables().offset[n][e.a] + (e.b - e.a - 2); }

Edge diagonal_at(int n, int index) { return tables().by_index[n][index]; }

bool crosses(int n, Edge e, Edge f) {
    for (int v : {e.a, e.b, f.a, f.b}) require_label(n, v);
    if (e.has(f.a) || e.has(f.b)) return false;
    return between_open(e.a, e.b, f.a) != between_open(e.a, e.b, f.b);
}

// --- Triangulation -----------------------------------------------------------

Triangulation Triangulation::from_interior(int n, std::span<const Edge> interior) {
    require_size(n);
    if (static_cast<int>(interior.size()) != n - 3) {
        throw InvalidInput("a triangulation of a " + std::to_string(n) + "-gon has " +
                           std::to_string(n - 3) + " interior edges, got " +
                           std::to_string(interior.size()));
    }
    CanonicalKey bits;
    for (const Edge& e : interior) {
        require_label(n, e.a);
        require_label(n, e.b);
        if (!is_diagonal(n, e)) {
            throw InvalidInput("edge " + to_string(e) + " is not a diagonal of the " +
                               std::to_string(n) + "-gon");
        }
        const int idx = diagonal_index(n, e);
        if (bits.test(idx)) throw InvalidInput("duplicate edge " + to_string(e));
        bits.set(idx);
    }
    for (std::size_t i = 0; i < interior.size(); ++i) {
        for (std::size_t j = i + 1; j < interior.size(); ++j) {
            if (crosses(n, interior[i], interior[j])) {
                throw InvalidInput("edges " + to_string(interior[i]) + " and " +
                                   to_string(interior[j]) + " cross");
            }
        }
    }
    return Triangulation(n, bits);
}

Triangulation Triangulation::from_key(int n, const CanonicalKey& key) {
    require_size(n);
    std::vector<Edge> edges;
    const int m = diagonal_count(n);
    for (int i = 0; i < m; ++i) {
        if (key.test(i)) edges.push_back(diagonal_at(n, i));
    }
    for (int i = m; i < static_cast<int>(kKeyWords) * 64; ++i) {
        if (key.test(i)) throw InvalidInput("key has bits beyond the diagonals of the polygon");
    }
    return from_interior(n, edges);
}

std::vector<Edge> Triangulation::interior() const {
    std::vector<Edge> out;
    out.reserve(n_ > 3 ? n_ - 3 : 0);
    const int m = diagonal_count(n_);
    for (int w = 0; (w << 6) < m; ++w) {
        std::uint64_t bits = bits_.words()[w];
        while (bits) {
            out.push_back(diagonal_at(n_, (w << 6) + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Triangulation::contains(Edge e) const {
    require_label(n_, e.a);
    require_label(n_, e.b);
    if (e.a == e.b) return false;
    if (is_boundary(n_, e)) return true;
    return bits_.test(diagonal_index(n_, e));
}

bool Triangulation::has_interior(Edge e) const {
    if (e.a < 0 || e.b >= n_ || !is_diagonal(n_, e)) return false;
    return bits_.test(diagonal_index(n_, e));
}

int Triangulation::interior_degree(int v) const {
    require_label(n_, v);
    int d = 0;
    for (const Edge& e : interior()) d += e.has(v) ? 1 : 0;
    return d;
}

std::array<std::uint64_t, kMaxVertices> Triangulation::adjacency() const {
    std::array<std::uint64_t, kMaxVertices> adj{};
    for (int v = 0; v < n_; ++v) {
        const int w = (v + 1) % n_;
        adj[v] |= std::uint64_t{1} << w;
        adj[w] |= std::uint64_t{1} << v;
    }
    const int m = diagonal_count(n_);
    for (int w = 0; (w << 6) < m; ++w) {
        std::uint64_t bits = bits_.words()[w];
        while (bits) {
            const Edge e = diagonal_at(n_, (w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
            adj[e.a] |= std::uint64_t{1} << e.b;
            adj[e.b] |= std::uint64_t{1} << e.a;
        }
    }
    return adj;
}

int Triangulation::link(Edge boundary) const {
    require_label(n_, boundary.a);
    require_label(n_, boundary.b);
    if (!is_boundary(n_, boundary)) {
        throw InvalidInput("link needs a boundary edge, got " + to_string(boundary));
    }
    const auto adj = adjacency();
    const std::uint64_t common = adj[boundary.a] & adj[boundary.b];
    // Boundary triangles have exactly one apex.
    return std::countr_zero(common);
}

Quad Triangulation::quadrilateral(Edge e) const {
    if (!has_interior(e)) {
        throw InvalidInput("edge " + to_string(e) + " is not an interior edge of the triangulation");
    }
    const auto adj = adjacency();
    const std::uint64_t common = adj[e.a] & adj[e.b];
    const std::uint64_t between =
        ((std::uint64_t{1} << e.b) - 1) & ~((std::uint64_t{2} << e.a) - 1);
    return Quad{std::countr_zero(common & between), std::countr_zero(common & ~between)};
}

std::pair<Triangulation, Edge> Triangulation::flip(Edge e) const {
    const Quad q = quadrilateral(e);
    const Edge introduced(q.inner, q.outer);
    CanonicalKey bits = bits_;
    bits.reset(diagonal_index(n_, e));
    bits.set(diagonal_index(n_, introduced));
    return {Triangulation(n_, bits), introduced};
}

Triangulation Triangulation::mapped(std::span<const int> map) const {
    if (static_cast<int>(map.size()) != n_) throw InvalidInput("label map has the wrong size");
    std::vector<Edge> edges;
    for (const Edge& e : interior()) edges.emplace_back(map[e.a], map[e.b]);
    return from_interior(n_, edges);
}

std::vector<Edge> common_interior(const Triangulation& u, const Triangulation& v) {
    std::vector<Edge> out;
    for (const Edge& e : u.interior()) {
        if (v.has_interior(e)) out.push_back(e);
    }
    return out;
}

int interior_difference(const Triangulation& u, const Triangulation& v) {
    int d = 0;
    for (std::size_t w = 0; w < kKeyWords; ++w) {
        d += std::popcount(u.key().words()[w] & ~v.key().words()[w]);
    }
    return d;
}

std::vector<Edge> missing_from(const Triangulation& u, const Triangulation& v) {
    std::vector<Edge> out;
    for (const Edge& e : v.interior()) {
        if (!u.has_interior(e)) out.push_back(e);
    }
    return out;
}

TriangulationPair::TriangulationPair(Triangulation f, Triangulation s)
    : first(std::move(f)), second(std::move(s)) {
    if (first.size() != second.size()) {
        throw InvalidInput("pair members live on polygons of different sizes (" +
                           std::to_string(first.size()) + " vs " +
                           std::to_string(second.size()) + ")");
    }
}

// --- FlipPath ----------------------------------------------------------------

FlipPath::FlipPath(Triangulation start) { steps_.push_back(std::move(start)); }

void FlipPath::push(Edge e) {
    auto [next, introduced] = steps_.back().flip(e);
    flips_.push_back(Flip{e, introduced});
    steps_.push_back(std::move(next));
}

std::vector<Edge> FlipPath::removed_edges() const {
    std::vector<Edge> out;
    out.reserve(flips_.size());
    for (const Flip& f : flips_) out.push_back(f.removed);
    return out;
}

bool FlipPath::valid() const {
    if (steps_.size() != flips_.size() + 1) return false;
    for (std::size_t i = 0; i < flips_.size(); ++i) {
        if (!steps_[i].has_interior(flips_[i].removed)) return false;
        const auto [next, introduced] = steps_[i].flip(flips_[i].removed);
        if (introduced != flips_[i].introduced || next != steps_[i + 1]) return false;
    }
    return true;
}

FlipPath apply_flips(const Triangulation& t, std::span<const Edge> edges) {
    FlipPath path(t);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!path.back().has_interior(edges[i])) {
            throw FlipSequenceError(i, "flip " + std::to_string(i) + ": edge " +
                                           to_string(edges[i]) +
                                           " is not an interior edge at its turn");
        }
        path.push(edges[i]);
    }
    return path;
}

// --- Constructions -------------------------------------------------------------

Triangulation fan(int n, int x) {
    require_size(n);
    require_label(n, x);
    std::vector<Edge> edges;
    for (int k = 2; k <= n - 2; ++k) edges.emplace_back(x, (x + k) % n);
    return Triangulation::from_interior(n, edges);
}

std::uint64_t catalan(int k) {
    if (k < 0 || k > 35) throw InvalidInput("catalan index outside [0, 35]");
    std::uint64_t c = 1;
    // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
    for (int i = 0; i < k; ++i) {
        c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
    }
    return c;
}

Triangulation uniform_random(int n, std::uint64_t seed) {
    require_size(n);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // Triangulations of a sub-polygon with m consecutive vertices: catalan(m - 2),
    // and 1 for a single edge.
    auto count = [](int m) { return m <= 2 ? std::uint64_t{1} : catalan(m - 2); };
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2) continue;
        const std::uint64_t total = count(j - i + 1);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        std::uint64_t r = pick(rng);
        int apex = i + 1;
        for (; apex < j; ++apex) {
            const std::uint64_t w = count(apex - i + 1) * count(j - apex + 1);
            if (r < w) break;
            r -= w;
        }
        if (apex - i >= 2) edges.emplace_back(i, apex);
        if (j - apex >= 2) edges.emplace_back(apex, j);
        stack.emplace_back(i, apex);
        stack.emplace_back(apex, j);
    }
    // The root edge {0, n-1} is a boundary edge, never emitted above.
    return Triangulation::from_interior(n, edges);
}

// --- Dihedral symmetry -----------------------------------------------------------

std::vector<int> dihedral_map(int n, int index) {
    require_size(n);
    if (index < 0 || index >= 2 * n) throw InvalidInput("dihedral map index out of range");
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) {
        map[v] = index < n ? (v + index) % n : (((index - n) - v) % n + n) % n;
    }
    return map;
}

Triangulation dihedral_image(const Triangulation& t, int index) {
    const int n = t.size();
    const auto map = dihedral_map(n, index);
    CanonicalKey bits;
    for (const Edge& e : t.interior()) bits.set(diagonal_index(n, Edge(map[e.a], map[e.b])));
    return Triangulation::from_key_unchecked(n, bits);
}

CanonicalKey dihedral_class(const Triangulation& t) {
    CanonicalKey best = t.key();
    for (int i = 1; i < 2 * t.size(); ++i) best = std::min(best, dihedral_image(t, i).key());
    return best;
}

PairClass pair_dihedral_class(const TriangulationPair& p) {
    const int n = p.size();
    PairClass best{p.first.key(), p.second.key(), n};
    for (int i = 0; i < 2 * n; ++i) {
        const CanonicalKey f = dihedral_image(p.first, i).key();
        const CanonicalKey s = dihedral_image(p.second, i).key();
        best = std::min(best, PairClass{f, s, n});
        best = std::min(best, PairClass{s, f, n});
    }
    return best;
}

}  // namespace assoc
