#include "assoc/deletion.hpp"

#include <algorithm>
#include <sstream>

#include "assoc/flipgraph.hpp"

namespace assoc {

std::pair<Triangulation, DeletionRecord> delete_vertex(const Triangulation& t, int a) {
    const int n = t.size();
    if (n <= 3) throw SizeError("cannot delete a vertex of a triangle");
    if (a < 0 || a >= n) throw InvalidInput("vertex " + std::to_string(a) + " outside the polygon");
    const int b = (a + 1) % n;
    const DeletionRecord record{a, b, t.link(Edge(a, b))};

    auto image = [&](int x) {
        if (x == a) x = b;
        return x > a ? x - 1 : x;
    };
    std::vector<Edge> edges;
    auto keep = [&](Edge e) {
        const Edge f(image(e.a), image(e.b));
        if (is_diagonal(n - 1, f)) edges.push_back(f);
    };
    for (const Edge& e : t.interior()) keep(e);
    for (int x = 0; x < n; ++x) {
        if (x != a) keep(Edge(x, (x + 1) % n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {Triangulation::from_interior(n - 1, edges), record};
}

// --- LabeledTriangulation ------------------------------------------------------

LabeledTriangulation::LabeledTriangulation(Triangulation t) : t_(std::move(t)) {
    labels_.resize(t_.size());
    for (int i = 0; i < t_.size(); ++i) labels_[i] = i;
}

int LabeledTriangulation::position(int label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw InvalidInput("vertex " + std::to_string(label) + " is not present");
    }
    return static_cast<int>(it - labels_.begin());
}

bool LabeledTriangulation::has_interior(int la, int lb) const {
    return t_.has_interior(Edge(position(la), position(lb)));
}

int LabeledTriangulation::link(int la, int lb) const {
    return labels_[t_.link(Edge(position(la), position(lb)))];
}

LabeledTriangulation LabeledTriangulation::deleted(int label) const {
    const int p = position(label);
    auto next = delete_vertex(t_, p).first;
    std::vector<int> labels = labels_;
    labels.erase(labels.begin() + p);
    return LabeledTriangulation(std::move(next), std::move(labels));
}

Triangulation LabeledTriangulation::relabeled(int anchor, int target) const {
    const int m = size();
    const int p = position(anchor);
    std::vector<int> map(m);
    for (int i = 0; i < m; ++i) map[i] = (((target + i - p) % m) + m) % m;
    return t_.mapped(map);
}

TriangulationPair delete_seq(const TriangulationPair& p, std::span<const int> vs) {
    LabeledTriangulation first(p.first), second(p.second);
    for (int v : vs) {
        first = first.deleted(v);
        second = second.deleted(v);
    }
    return {first.triangulation(), second.triangulation()};
}

// --- Incidence and projection ----------------------------------------------------

bool is_incident(const Triangulation& prev, const Triangulation& next, Edge e) {
    if (prev.size() != next.size() || interior_difference(prev, next) != 1) {
        throw InvalidInput("triangulations are not one flip apart");
    }
    return prev.link(e) != next.link(e);
}

FlipPath project_path(const FlipPath& p, int a) {
    FlipPath out(delete_vertex(p.front(), a).first);
    for (std::size_t i = 1; i < p.steps().size(); ++i) {
        const Triangulation next = delete_vertex(p.steps()[i], a).first;
        if (next == out.back()) continue;
        const std::vector<Edge> gone = missing_from(next, out.back());
        out.push(gone.front());
    }
    return out;
}

int theta(const TriangulationPair& p, int a, const Budget& budget) {
    const int n = p.size();
    if (a < 0 || a >= n) throw InvalidInput("vertex " + std::to_string(a) + " outside the polygon");
    return geodesic_dag(p.first, p.second, budget).max_incident_flips(a);
}

// --- Quotient graph ----------------------------------------------------------------

std::size_t QuotientGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& nb : adjacency) c += nb.size();
    return c / 2;
}

std::string QuotientGraph::to_adjacency_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << nodes[i].hex() << ':';
        for (std::size_t k = 0; k < adjacency[i].size(); ++k) {
            out << (k ? "," : " ") << nodes[adjacency[i][k]].hex();
        }
        out << '\n';
    }
    return out.str();
}

QuotientGraph quotient_graph(int n, int a, const Budget& budget) {
    if (n < 4) throw SizeError("quotient graphs need at least four vertices");
    if (a < 0 || a >= n) throw InvalidInput("vertex " + std::to_string(a) + " outside the polygon");
    const FlipGraph g = FlipGraph::build(n, budget);
    std::vector<CanonicalKey> image(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) image[i] = delete_vertex(g.at(i), a).first.key();

    QuotientGraph q;
    q.n = n;
    q.a = a;
    q.nodes = image;
    std::sort(q.nodes.begin(), q.nodes.end());
    q.nodes.erase(std::unique(q.nodes.begin(), q.nodes.end()), q.nodes.end());
    auto index = [&](const CanonicalKey& k) {
        return static_cast<int>(std::lower_bound(q.nodes.begin(), q.nodes.end(), k) - q.nodes.begin());
    };
    q.adjacency.resize(q.nodes.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const int x = index(image[i]);
        for (std::uint32_t j : g.neighbors(i)) {
            const int y = index(image[j]);
            if (x != y) q.adjacency[x].push_back(y);
        }
    }
    for (auto& nb : q.adjacency) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return q;
}

}  // namespace assoc
