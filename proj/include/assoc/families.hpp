#pragma once

// Named triangulations: the zigzag Z_n and the pairs A_n, B_n, C_n, D_n.
// Members of a pair are returned as (minus, plus).

#include <string>
#include <string_view>

#include "assoc/polygon.hpp"

namespace assoc {

enum class Family { Z, A, B, C, D };

struct FamilyId {
    Family tag = Family::Z;
    int n = 3;
};

/// Parses "Z:n", "A:n", ... Throws InvalidInput on malformed text and
/// SizeError when n is below the family's minimum.
FamilyId parse_family(std::string_view text);
std::string to_string(FamilyId id);
int minimum_size(Family tag);

/// Interior edges walk 2, 4, 1, 5, 0, 6, n-1, 7, n-2, ... (labels mod n),
/// truncated to n-3 edges.
Triangulation zigzag(int n);

TriangulationPair family_A(int n);
/// Throws SizeError for n < 7.
TriangulationPair family_B(int n);
/// (C_n^-, B_n^+). Throws SizeError for n < 7.
TriangulationPair family_C(int n);
TriangulationPair family_D(int n);

/// Z_n is returned as the pair (Z_n, Z_n).
TriangulationPair family(FamilyId id);

/// Interior edges at v; v carries a comb when this is at least 3.
int comb_teeth(const Triangulation& t, int v);

/// Interior edges form one simple path whose consecutive turns alternate.
bool is_zigzag(const Triangulation& t);

}  // namespace assoc
