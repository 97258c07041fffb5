#pragma once

// Exhaustive flip-graph machinery for small polygons.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/polygon.hpp"

namespace assoc {

/// All triangulations of the n-gon, sorted by canonical key.
/// Throws ResourceError when Catalan(n-2) exceeds the node budget.
std::vector<Triangulation> enumerate(int n, const Budget& budget = {});

/// The flip graph as flat arrays: node i is keys()[i] and its n-3
/// neighbours are neighbors(i).
class FlipGraph {
public:
    static FlipGraph build(int n, const Budget& budget = {});

    int polygon_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return keys_.size(); }
    int degree() const noexcept { return n_ - 3; }
    const std::vector<CanonicalKey>& keys() const noexcept { return keys_; }
    Triangulation at(std::size_t i) const { return Triangulation::from_key_unchecked(n_, keys_[i]); }

    std::optional<std::size_t> find(const CanonicalKey& key) const;
    /// Throws InvalidInput if t is not a triangulation of this polygon.
    std::size_t index_of(const Triangulation& t) const;

    std::span<const std::uint32_t> neighbors(std::size_t i) const {
        const auto d = static_cast<std::size_t>(degree());
        return {adjacency_.data() + i * d, d};
    }

    /// Exact flip distances from `source` to every node (index aligned).
    std::vector<std::uint8_t> distances_from(std::size_t source) const;

private:
    int n_ = 3;
    std::vector<CanonicalKey> keys_;
    std::vector<std::uint32_t> adjacency_;
};

/// Flip distance from `source` to every triangulation, aligned with g.keys().
std::vector<std::uint8_t> bfs_distances(const FlipGraph& g, const Triangulation& source);

struct DiameterRow {
    int n = 0;
    std::uint64_t count = 0;
    int diameter = 0;
    int d = 0;                 // associahedron dimension n-3
    int two_d_minus_4 = 0;
};

struct DiameterOptions {
    Budget budget;
    unsigned threads = 1;
};

/// Max pairwise flip distance; BFS sources are restricted to one
/// representative per dihedral class and run 64 at a time as bit-parallel
/// BFS.
DiameterRow diameter(int n, const DiameterOptions& options = {});

/// All-pairs distance table over a FlipGraph (intended for n <= 10).
class AllPairs {
public:
    explicit AllPairs(int n, const Budget& budget = {});

    const FlipGraph& graph() const noexcept { return graph_; }
    int distance(std::size_t i, std::size_t j) const { return table_[i * graph_.size() + j]; }
    int distance(const Triangulation& u, const Triangulation& v) const {
        return distance(graph_.index_of(u), graph_.index_of(v));
    }
    /// theta by dynamic programming over the distance table: the largest
    /// number of flips incident to {a, a+1} along any geodesic from i to j.
    int theta(std::size_t i, std::size_t j, int a) const;

private:
    FlipGraph graph_;
    std::vector<std::uint8_t> table_;
};

struct DagArc {
    int from = 0;  // index in layer k
    int to = 0;    // index in layer k+1
    Flip flip;
};

/// Every triangulation lying on some geodesic between u and v, layered by
/// distance from u. Built without assuming common edges persist.
struct GeodesicDag {
    Triangulation u;
    Triangulation v;
    int distance = 0;
    std::vector<std::vector<CanonicalKey>> layers;
    std::vector<std::vector<DagArc>> arcs;  // arcs[k]: layer k -> layer k+1

    std::size_t node_count() const;
    /// Longest path where an arc weighs 1 when its flip is incident to
    /// the boundary edge {a, a+1}.
    int max_incident_flips(int a) const;
    /// Adjacency list text, one `node_key: neighbor_key,...` line per node.
    std::string to_adjacency_text() const;
};

GeodesicDag geodesic_dag(const Triangulation& u, const Triangulation& v,
                         const Budget& budget = {});

struct PrefixCheck {
    bool hypothesis = false;  // some geodesic node holds every introduced edge
    bool holds = false;       // d(prefix end, v) == d(u, v) - length
};

/// Prescribed-prefix property: if some triangulation on a geodesic from u to
/// v contains every edge introduced along `prefix`, the prefix end lies at
/// distance d(u,v) - |prefix| from v.
PrefixCheck check_prefix_theorem(const Triangulation& u, const Triangulation& v,
                                 const FlipPath& prefix, const Budget& budget = {});

/// True iff the flip of `f` changes the link of boundary edge {a, a+1}, i.e.
/// both a and a+1 are corners of the flip quadrilateral.
bool flip_incident(int n, const Flip& f, int a);

}  // namespace assoc
