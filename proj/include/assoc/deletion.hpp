#pragma once

// Vertex deletion and the quantities derived from it: flip incidence, path
// projection, theta and the quotient flip graphs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/polygon.hpp"

namespace assoc {

struct DeletionRecord {
    int deleted = 0;
    int successor = 0;
    int merged_link = 0;
};

/// T with vertex a displaced onto a+1. The result lives on the (n-1)-gon and
/// labels greater than a move down by one. Throws SizeError for n = 3.
std::pair<Triangulation, DeletionRecord> delete_vertex(const Triangulation& t, int a);

/// A triangulation whose positions 0..m-1 carry labels from the polygon it
/// was cut down from. Labels stay ascending, so position order is the
/// clockwise order.
class LabeledTriangulation {
public:
    explicit LabeledTriangulation(Triangulation t);

    const Triangulation& triangulation() const noexcept { return t_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int size() const noexcept { return t_.size(); }

    /// Throws InvalidInput when the label was already deleted.
    int position(int label) const;
    bool has_interior(int la, int lb) const;
    /// Link of the boundary edge between two labels, as a label.
    int link(int la, int lb) const;

    LabeledTriangulation deleted(int label) const;
    /// Renumbers clockwise so that `anchor` becomes `target`.
    Triangulation relabeled(int anchor, int target) const;

private:
    LabeledTriangulation(Triangulation t, std::vector<int> labels)
        : t_(std::move(t)), labels_(std::move(labels)) {}

    Triangulation t_;
    std::vector<int> labels_;
};

/// Memberwise deletion of `vs`, given in the labels of P.
TriangulationPair delete_seq(const TriangulationPair& p, std::span<const int> vs);

/// True iff the flip from prev to next changes the link of boundary edge e.
/// Throws InvalidInput unless the two are exactly one flip apart.
bool is_incident(const Triangulation& prev, const Triangulation& next, Edge e);

/// Deletes a from every step and drops repeated steps.
FlipPath project_path(const FlipPath& p, int a);

/// Most flips incident to {a, a+1} along any geodesic of P.
int theta(const TriangulationPair& p, int a, const Budget& budget = {});

/// Flip graph of the n-gon with the classes of T ~ T' (T ⊖ a = T' ⊖ a)
/// contracted. Node i stands for the (n-1)-gon triangulation nodes[i].
struct QuotientGraph {
    int n = 0;
    int a = 0;
    std::vector<CanonicalKey> nodes;
    std::vector<std::vector<int>> adjacency;  // sorted, no loops

    std::size_t edge_count() const;
    /// One `node_key: neighbor_key,...` line per node.
    std::string to_adjacency_text() const;
};

QuotientGraph quotient_graph(int n, int a, const Budget& budget = {});

}  // namespace assoc
