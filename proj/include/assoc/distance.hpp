#pragma once

// Exact single-pair flip distance.
//
// Pipeline: split along common interior edges, apply forced flips (flips of
// U that introduce an edge of V), then run a bidirectional layered search
// with the admissible bound |T \ target| on what remains.

#include <cstddef>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/polygon.hpp"

namespace assoc {

/// A cell of the polygon cut along common interior edges. vertices[i] is
/// the original label of local vertex i (ascending).
struct Component {
    TriangulationPair pair;
    std::vector<int> vertices;
};

/// Cells of U, V cut along U ∩ V. Triangular cells are included, so the
/// result is never empty.
std::vector<Component> decompose(const Triangulation& u, const Triangulation& v);

struct ForcedReduction {
    Triangulation reduced;
    std::vector<Flip> flips;
    int applied() const noexcept { return static_cast<int>(flips.size()); }
};

/// Repeatedly flips the smallest interior edge of U whose flip introduces an
/// edge of V, until none exists.
ForcedReduction reduce_forced(const Triangulation& u, const Triangulation& v);

/// min over x of (n-3-deg_U(x)) + (n-3-deg_V(x)).
int fan_upper_bound(const Triangulation& u, const Triangulation& v);
/// A path U -> fan(n, x) -> V of length fan_upper_bound(U, V).
FlipPath fan_route(const Triangulation& u, const Triangulation& v);

enum class ReductionKind { split, forced_flip };

struct Reduction {
    ReductionKind kind;
    Edge edge;  // the common edge cut along, or the edge removed by a forced flip
};

struct SearchOptions {
    Budget budget;
    bool decompose = true;
    bool reduce = true;
    /// Never flip an edge of U ∩ V inside the search kernel.
    bool restrict_common = true;
};

struct SearchReport {
    int distance = 0;
    std::size_t expanded = 0;
    FlipPath witness;
    std::vector<Reduction> reductions;
};

/// Exact flip distance with a replay-validated witness. Throws ResourceError
/// carrying the (lower, upper) bracket when the node budget runs out.
SearchReport flip_distance(const Triangulation& u, const Triangulation& v,
                           const SearchOptions& options = {});

inline int distance(const Triangulation& u, const Triangulation& v, const Budget& budget = {}) {
    SearchOptions options;
    options.budget = budget;
    return flip_distance(u, v, options).distance;
}

std::string to_text(const SearchReport& report);
std::string to_json(const SearchReport& report);

}  // namespace assoc
