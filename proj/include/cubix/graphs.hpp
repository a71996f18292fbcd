#pragma once

// Crossing and contact graphs of a cube complex, diameters, separation
// tests, grading, join detection / product reconstruction, and the iterated
// pseudoproduct layering.

#include "cubix/hyperplanes.hpp"

#include <deque>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

namespace cubix {

struct HypGraph {
    enum class Kind { Crossing, Contact };
    Kind kind;
    std::size_t n = 0;                    // one vertex per wall
    std::vector<std::vector<char>> adj;   // symmetric adjacency matrix
    std::vector<std::string> labels;

    bool edge(std::size_t i, std::size_t j) const { return adj[i][j]; }

    std::vector<std::optional<std::size_t>> bfs(std::size_t src) const {
        std::vector<std::optional<std::size_t>> d(n);
        std::deque<std::size_t> q{src};
        d[src] = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < n; ++v)
                if (adj[u][v] && !d[v]) { d[v] = *d[u] + 1; q.push_back(v); }
        }
        return d;
    }

    bool connected() const {
        if (n == 0) return true;
        auto d = bfs(0);
        for (std::size_t v = 0; v < n; ++v)
            if (!d[v]) return false;
        return true;
    }
};

inline HypGraph crossing_graph(const CubeComplex& X) {
    WallRelations rel(X);
    HypGraph G;
    G.kind = HypGraph::Kind::Crossing;
    G.n = X.wall_count();
    G.adj.assign(G.n, std::vector<char>(G.n, 0));
    for (std::size_t i = 0; i < G.n; ++i) {
        G.labels.push_back(X.wall_name(i));
        for (std::size_t j = 0; j < G.n; ++j)
            if (i != j && rel.crosses(i, j)) G.adj[i][j] = 1;
    }
    return G;
}

inline HypGraph contact_graph(const CubeComplex& X) {
    WallRelations rel(X);
    HypGraph G;
    G.kind = HypGraph::Kind::Contact;
    G.n = X.wall_count();
    G.adj.assign(G.n, std::vector<char>(G.n, 0));
    for (std::size_t i = 0; i < G.n; ++i) {
        G.labels.push_back(X.wall_name(i));
        for (std::size_t j = 0; j < G.n; ++j)
            if (i != j && rel.in_contact(i, j)) G.adj[i][j] = 1;
    }
    return G;
}

// Maximal eccentricity; nullopt encodes infinity (disconnected graph).
inline std::optional<std::size_t> graph_diameter(const HypGraph& G) {
    if (G.n == 0) throw domain_error("diameter of an empty graph");
    std::size_t best = 0;
    for (std::size_t s = 0; s < G.n; ++s) {
        auto d = G.bfs(s);
        for (std::size_t v = 0; v < G.n; ++v) {
            if (!d[v]) return std::nullopt;
            best = std::max(best, *d[v]);
        }
    }
    return best;
}

// True iff the crossing graph with the walls in L removed stays connected
// (vacuously true when at most one vertex remains).
inline bool separator_check(const CubeComplex& X, const std::vector<std::size_t>& L) {
    auto G = crossing_graph(X);
    std::vector<char> removed(G.n, 0);
    for (std::size_t w : L) {
        X.check_wall(w);
        removed[w] = 1;
    }
    std::size_t start = G.n, count = 0;
    for (std::size_t v = 0; v < G.n; ++v)
        if (!removed[v]) { ++count; if (start == G.n) start = v; }
    if (count <= 1) return true;
    std::deque<std::size_t> q{start};
    std::vector<char> seen(G.n, 0);
    seen[start] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v = 0; v < G.n; ++v)
            if (G.adj[u][v] && !removed[v] && !seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push_back(v);
            }
    }
    return reached == count;
}

// Join detection: a bipartition of the walls with every cross-pair crossing
// exists iff the complement of the crossing graph is disconnected.  The
// complement component containing the smallest wall index becomes A1, the
// rest join A2.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
detect_join(const CubeComplex& X) {
    if (X.wall_count() < 2) throw domain_error("join detection needs at least 2 walls");
    auto G = crossing_graph(X);
    std::vector<int> comp(G.n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < G.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < G.n; ++v)
                if (u != v && !G.adj[u][v] && comp[v] < 0) {  // complement edge
                    comp[v] = ncomp;
                    q.push_back(v);
                }
        }
        ++ncomp;
    }
    if (ncomp < 2) return std::nullopt;
    std::vector<std::size_t> A1, A2;
    for (std::size_t v = 0; v < G.n; ++v)
        (comp[v] == comp[0] ? A1 : A2).push_back(v);
    return std::make_pair(std::move(A1), std::move(A2));
}

// Factors as restriction quotients plus the projection-pair embedding
// j(p) = (rho1(p), rho2(p)); the embedding is onto exactly when X is the
// product of the factors.
struct ProductReconstruction {
    CubeComplex Q1, Q2;
    bool iso_verified;
};

inline ProductReconstruction
reconstruct_product(const CubeComplex& X,
                    const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& parts) {
    const auto& [A1, A2] = parts;
    if (A1.empty() || A2.empty()) throw domain_error("product partition has an empty side");
    std::vector<char> seen(X.wall_count(), 0);
    for (std::size_t w : A1) { X.check_wall(w); seen[w] += 1; }
    for (std::size_t w : A2) { X.check_wall(w); seen[w] += 1; }
    for (std::size_t w = 0; w < X.wall_count(); ++w)
        if (seen[w] != 1) throw domain_error("partition must cover every wall exactly once");
    auto [Q1, m1] = restriction_quotient(X, A1);
    auto [Q2, m2] = restriction_quotient(X, A2);
    // j is injective (the parts cover all walls), so it is onto iff the sizes
    // multiply out.
    bool iso = X.size() == Q1.size() * Q2.size();
    return {std::move(Q1), std::move(Q2), iso};
}

// ---------------------------------------------------------------------------
// Grading

struct GradeMap {
    std::size_t base;
    std::vector<std::optional<std::size_t>> grade;  // nullopt = unreachable

    std::optional<std::size_t> max_grade() const {
        std::optional<std::size_t> best = 0;
        for (const auto& g : grade) {
            if (!g) return std::nullopt;  // infinity dominates
            best = std::max(*best, *g);
        }
        return best;
    }
};

inline GradeMap grade_from(const CubeComplex& X, std::size_t h0) {
    X.check_wall(h0);
    auto G = crossing_graph(X);
    return {h0, G.bfs(h0)};
}

// ---------------------------------------------------------------------------
// Iterated pseudoproduct layering (finite analogue)

struct PseudoproductLayer {
    std::vector<std::size_t> V1, V2;  // wall indices in the layer's complex
    std::size_t max_grade = 0;
    bool section_ok = false;          // lift a: Q1 -> X lands in X and is convex
    bool v2_large = false;            // |V2| >= k
    bool product_walls_essential = false;  // hull of e(X) is all of Q1 x Q2
    bool crossings_ok = false;        // each H in V2 crosses >= k walls of V1
};

struct PseudoproductReport {
    std::size_t k = 3;
    std::size_t depth = 0;            // number of peeled layers
    std::vector<PseudoproductLayer> layers;
    bool carrier_terminal = false;    // final quotient is the carrier of h0
    bool all_flags() const {
        for (const auto& l : layers)
            if (!(l.section_ok && l.v2_large && l.product_walls_essential &&
                  l.crossings_ok))
                return false;
        return carrier_terminal;
    }
};

inline PseudoproductReport pseudoproduct_layers(const CubeComplex& X0, std::size_t h0,
                                                std::size_t k) {
    if (k < 1) throw domain_error("pseudoproduct threshold k must be at least 1");
    X0.check_wall(h0);
    PseudoproductReport rep;
    rep.k = k;
    CubeComplex X = X0;
    std::size_t base = h0;
    while (true) {
        GradeMap gm = grade_from(X, base);
        auto mg = gm.max_grade();
        if (!mg)
            throw domain_error(
                "crossing graph is disconnected; run a separator check instead");
        if (*mg <= 1) {
            // Terminal carrier layer: every remaining wall crosses the base,
            // and the quotient is the base wall's carrier.
            bool carrier_like = true;
            for (const auto& v : X.vertices())
                if (!in_carrier(X, base, v)) { carrier_like = false; break; }
            rep.carrier_terminal = carrier_like;
            break;
        }
        PseudoproductLayer layer;
        layer.max_grade = *mg;
        for (std::size_t w = 0; w < X.wall_count(); ++w)
            (*gm.grade[w] == *mg ? layer.V2 : layer.V1).push_back(w);

        auto [Q1, wm] = restriction_quotient(X, layer.V1);

        // Section a: Q1 -> X assembling V1 bits from Q1 and V2 bits from a
        // base vertex in the carrier of the base wall.
        Bitvec xo = carrier(X, base).verts.front();
        bool section_ok = true;
        std::vector<Bitvec> image;
        for (const auto& q : Q1.vertices()) {
            Bitvec lift = xo;
            for (std::size_t j = 0; j < layer.V1.size(); ++j)
                lift.set(layer.V1[j], q.get(j));
            if (!X.contains(lift)) { section_ok = false; break; }
            image.push_back(lift);
        }
        if (section_ok) {
            auto hull = convex_hull(X, image);
            section_ok = hull.verts.size() == image.size();
        }
        layer.section_ok = section_ok;

        layer.v2_large = layer.V2.size() >= k;

        // Hull of the embedded image in Q1 x Q2 is everything iff no product
        // wall is constant on X (every wall of X has both values, projected).
        auto essential = walls_of(X.wall_count(), X.vertices());
        layer.product_walls_essential = essential.size() == X.wall_count();

        WallRelations rel(X);
        layer.crossings_ok = true;
        for (std::size_t h : layer.V2) {
            std::size_t cnt = 0;
            for (std::size_t v : layer.V1)
                if (rel.crosses(h, v)) ++cnt;
            if (cnt < k) { layer.crossings_ok = false; break; }
        }

        // Recurse on Q1; the base wall survives (grade 0 < max grade).
        std::size_t new_base = *wm(base);
        rep.layers.push_back(std::move(layer));
        ++rep.depth;
        X = std::move(Q1);
        base = new_base;
        if (rep.depth > X0.wall_count())
            throw domain_error("pseudoproduct layering failed to terminate");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Diameter chain

struct DiameterChainReport {
    std::optional<std::size_t> diam_contact, diam_crossing;
    // Supplied by the boundary machinery when available.
    std::optional<std::optional<std::size_t>> diam_boundary_skeleton;
    std::size_t degree = 0;  // maximal vertex degree of the complex
    std::vector<std::string> violations;
};

inline DiameterChainReport
diameter_chain_report(const CubeComplex& X,
                      std::optional<std::optional<std::size_t>> diam_boundary = std::nullopt) {
    DiameterChainReport rep;
    rep.diam_contact = graph_diameter(contact_graph(X));
    rep.diam_crossing = graph_diameter(crossing_graph(X));
    rep.diam_boundary_skeleton = diam_boundary;
    for (const auto& v : X.vertices()) {
        std::size_t deg = 0;
        X.for_each_neighbor(v, [&](std::size_t, const Bitvec&) { ++deg; });
        rep.degree = std::max(rep.degree, deg);
    }
    auto leq = [](const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
        if (!b) return true;   // anything <= infinity
        if (!a) return false;  // infinity <= finite fails
        return *a <= *b;
    };
    if (!leq(rep.diam_contact, rep.diam_crossing))
        rep.violations.push_back("diam(contact) > diam(crossing)");
    if (diam_boundary) {
        if (!leq(rep.diam_crossing, *diam_boundary))
            rep.violations.push_back("diam(crossing) > diam(boundary skeleton)");
        if (rep.diam_crossing && *rep.diam_crossing >= 1) {
            std::optional<std::size_t> cap = 2 * *rep.diam_crossing >= 2
                                                 ? std::optional<std::size_t>(
                                                       2 * *rep.diam_crossing - 2)
                                                 : std::optional<std::size_t>(0);
            if (!leq(*diam_boundary, cap))
                rep.violations.push_back(
                    "diam(boundary skeleton) > 2 diam(crossing) - 2");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// DOT export: solid edges for crossing, dashed for osculation (contact
// graphs only; crossing graphs have solid edges throughout).

inline void write_dot(std::ostream& out, const CubeComplex& X, const HypGraph& G) {
    WallRelations rel(X);
    out << "graph " << (G.kind == HypGraph::Kind::Contact ? "contact" : "crossing")
        << " {\n";
    for (std::size_t v = 0; v < G.n; ++v)
        out << "  \"" << G.labels[v] << "\";\n";
    for (std::size_t i = 0; i < G.n; ++i)
        for (std::size_t j = i + 1; j < G.n; ++j) {
            if (!G.adj[i][j]) continue;
            bool dashed = G.kind == HypGraph::Kind::Contact && !rel.crosses(i, j);
            out << "  \"" << G.labels[i] << "\" -- \"" << G.labels[j] << "\"";
            if (dashed) out << " [style=dashed]";
            out << ";\n";
        }
    out << "}\n";
}

} // namespace cubix
