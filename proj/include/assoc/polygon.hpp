#pragma once

// Triangulations of a convex polygon with vertices labeled clockwise 0..n-1.
// Boundary edges are implicit; only the n-3 interior edges (diagonals) are
// stored, as a bitset over all diagonals in lexicographic order.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

inline constexpr int kMaxVertices = 33;
inline constexpr std::size_t kKeyWords = 8;

/// Unordered pair of vertex labels, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    constexpr Edge() = default;
    constexpr Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    constexpr bool has(int v) const noexcept { return a == v || b == v; }
    constexpr int other(int v) const noexcept { return v == a ? b : a; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(Edge e);

/// Fixed-width bitset over the n(n-3)/2 diagonals of an n-gon.
class CanonicalKey {
public:
    bool test(int bit) const noexcept {
        return (words_[bit >> 6] >> (bit & 63)) & 1u;
    }
    void set(int bit) noexcept { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
    void reset(int bit) noexcept { words_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63)); }
    int count() const noexcept;
    std::size_t hash() const noexcept;
    /// Lowercase hex, most significant non-zero word first; "0" when empty.
    std::string hex() const;
    const std::array<std::uint64_t, kKeyWords>& words() const noexcept { return words_; }

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
    std::array<std::uint64_t, kKeyWords> words_{};
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept { return k.hash(); }
};

int diagonal_count(int n);
bool is_boundary(int n, Edge e);
bool is_diagonal(int n, Edge e);
/// Lexicographic rank of a diagonal; precondition is_diagonal(n, e).
int diagonal_index(int n, Edge e);
Edge diagonal_at(int n, int index);

/// True iff e and f share no vertex and exactly one endpoint of f lies
/// strictly between e.a and e.b. Throws InvalidInput on labels outside [0, n).
bool crosses(int n, Edge e, Edge f);

/// The two apexes of the quadrilateral around a diagonal: `inner` lies
/// strictly between a and b, `outer` on the other side.
struct Quad {
    int inner = -1;
    int outer = -1;
};

class Triangulation {
public:
    /// Validates: 3 <= n <= kMaxVertices, exactly n-3 distinct diagonals,
    /// pairwise non-crossing. Throws InvalidInput otherwise.
    static Triangulation from_interior(int n, std::span<const Edge> interior);
    static Triangulation from_key(int n, const CanonicalKey& key);
    /// No validation; for search kernels whose keys come from flips.
    static Triangulation from_key_unchecked(int n, const CanonicalKey& key) {
        return Triangulation(n, key);
    }

    int size() const noexcept { return n_; }
    const CanonicalKey& key() const noexcept { return bits_; }
    std::vector<Edge> interior() const;

    /// Boundary edges are always contained.
    bool contains(Edge e) const;
    bool has_interior(Edge e) const;
    int interior_degree(int v) const;
    /// Neighbours of every vertex (boundary and interior edges) as bitmasks.
    std::array<std::uint64_t, kMaxVertices> adjacency() const;

    /// The unique c with {a,c} and {b,c} in T; e must be a boundary edge.
    int link(Edge boundary) const;
    Quad quadrilateral(Edge diagonal) const;
    /// Returns T/e together with the introduced diagonal.
    std::pair<Triangulation, Edge> flip(Edge e) const;

    /// Calls f(removed, introduced) once per interior edge, in edge order.
    template <class F>
    void for_each_flip(F&& f) const;

    /// Image under v -> map[v]; the map must send the polygon to itself
    /// preserving or reversing cyclic order.
    Triangulation mapped(std::span<const int> map) const;

    friend bool operator==(const Triangulation& x, const Triangulation& y) noexcept {
        return x.n_ == y.n_ && x.bits_ == y.bits_;
    }

private:
    Triangulation(int n, const CanonicalKey& bits) : n_(n), bits_(bits) {}

    int n_ = 3;
    CanonicalKey bits_;
};

/// Interior edges present in both.
std::vector<Edge> common_interior(const Triangulation& u, const Triangulation& v);
/// |interior(u) \ interior(v)|.
int interior_difference(const Triangulation& u, const Triangulation& v);
/// Every edge of `v` (interior) except those of `u`.
std::vector<Edge> missing_from(const Triangulation& u, const Triangulation& v);

struct TriangulationPair {
    Triangulation first;
    Triangulation second;

    TriangulationPair(Triangulation f, Triangulation s);
    int size() const noexcept { return first.size(); }
    TriangulationPair swapped() const { return {second, first}; }
    friend bool operator==(const TriangulationPair&, const TriangulationPair&) = default;
};

struct Flip {
    Edge removed;
    Edge introduced;
    friend bool operator==(const Flip&, const Flip&) = default;
};

/// A walk in the flip graph: steps[i+1] is steps[i] flipped at flips[i].removed.
class FlipPath {
public:
    explicit FlipPath(Triangulation start);

    /// Flips `e` in the last step. Throws InvalidInput if e is not interior.
    void push(Edge e);

    std::size_t length() const noexcept { return flips_.size(); }
    const Triangulation& front() const noexcept { return steps_.front(); }
    const Triangulation& back() const noexcept { return steps_.back(); }
    const std::vector<Triangulation>& steps() const noexcept { return steps_; }
    const std::vector<Flip>& flips() const noexcept { return flips_; }
    std::vector<Edge> removed_edges() const;

    /// Checks the path invariants by replaying every flip.
    bool valid() const;

private:
    std::vector<Triangulation> steps_;
    std::vector<Flip> flips_;
};

/// Replays `edges` from t. Throws FlipSequenceError naming the failing index.
FlipPath apply_flips(const Triangulation& t, std::span<const Edge> edges);

/// Every interior edge contains x.
Triangulation fan(int n, int x);

/// Uniform over all Catalan(n-2) triangulations; pure in (n, seed).
Triangulation uniform_random(int n, std::uint64_t seed);

/// Catalan number C_k (exact for k <= 35).
std::uint64_t catalan(int k);

// Dihedral group acting on labels. Map index i in [0, 2n): i < n is the
// rotation v -> v + i, otherwise the reflection v -> (i - n) - v.
std::vector<int> dihedral_map(int n, int index);
Triangulation dihedral_image(const Triangulation& t, int index);

/// Minimal key over the 2n dihedral images.
CanonicalKey dihedral_class(const Triangulation& t);

struct PairClass {
    CanonicalKey first;
    CanonicalKey second;
    int n = 0;
    friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

/// Canonical representative of a pair under simultaneous relabeling by the
/// dihedral group and swapping of the members (4n combinations).
PairClass pair_dihedral_class(const TriangulationPair& p);

// ---------------------------------------------------------------------------

template <class F>
void Triangulation::for_each_flip(F&& f) const {
    const auto adj = adjacency();
    const int m = diagonal_count(n_);
    for (int w = 0; w < static_cast<int>(kKeyWords) && (w << 6) < m; ++w) {
        std::uint64_t bits = bits_.words()[w];
        while (bits) {
            const int idx = (w << 6) + __builtin_ctzll(bits);
            bits &= bits - 1;
            const Edge e = diagonal_at(n_, idx);
            const std::uint64_t common = adj[e.a] & adj[e.b];
            const std::uint64_t between =
                ((std::uint64_t{1} << e.b) - 1) & ~((std::uint64_t{2} << e.a) - 1);
            const int inner = __builtin_ctzll(common & between);
            const int outer = __builtin_ctzll(common & ~between);
            f(e, Edge(inner, outer));
        }
    }
}

}  // namespace assoc
