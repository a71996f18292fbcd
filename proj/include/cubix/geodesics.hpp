#pragma once

// Combinatorial geodesics, contact-graph projections, folding and
// basepoint-equating, fan decomposition, r-avoiding divergence, and
// geodesic-completeness checking.

#include "cubix/graphs.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <ostream>
#include <unordered_set>

namespace cubix {

// A path is its vertex sequence; a geodesic additionally crosses each wall
// at most once (equivalently, its length is the endpoint Hamming distance).
using Path = std::vector<Bitvec>;

inline std::size_t path_length(const Path& P) { return P.empty() ? 0 : P.size() - 1; }

// Walls crossed, in crossing order.
inline std::vector<std::size_t> path_walls(const Path& P) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t + 1 < P.size(); ++t) {
        std::size_t wall = SIZE_MAX;
        for (std::size_t w = 0; w < P[t].size(); ++w)
            if (P[t].get(w) != P[t + 1].get(w)) {
                if (wall != SIZE_MAX) throw domain_error("path step is not an edge");
                wall = w;
            }
        if (wall == SIZE_MAX) throw domain_error("path repeats a vertex");
        out.push_back(wall);
    }
    return out;
}

inline bool is_geodesic(const CubeComplex& X, const Path& P) {
    if (P.empty()) return false;
    for (const auto& v : P)
        if (!X.contains(v)) return false;
    for (std::size_t t = 0; t + 1 < P.size(); ++t)
        if (P[t].hamming(P[t + 1]) != 1) return false;
    return P.front().hamming(P.back()) == path_length(P);
}

// Deterministic shortest path: descend toward y, breaking ties by taking the
// lexicographically least closer neighbour.  (Valid complexes are isometric
// in the hypercube, so Hamming distance is graph distance.)
inline Path bfs_geodesic(const CubeComplex& X, const Bitvec& x, const Bitvec& y) {
    if (!X.contains(x) || !X.contains(y))
        throw domain_error("geodesic endpoints must be vertices");
    Path P{x};
    Bitvec cur = x;
    while (cur != y) {
        std::optional<Bitvec> best;
        for (std::size_t w = 0; w < X.wall_count(); ++w) {
            if (cur.get(w) == y.get(w)) continue;
            Bitvec nxt = cur.with_flipped(w);
            if (X.contains(nxt) && (!best || nxt < *best)) best = nxt;
        }
        if (!best) throw domain_error("no descending move: complex is not median");
        P.push_back(*best);
        cur = *best;
    }
    return P;
}

// ---------------------------------------------------------------------------
// Projection to the contact graph

inline std::vector<std::size_t> project_to_contact(const CubeComplex& X, const Path& P) {
    if (!is_geodesic(X, P)) throw domain_error("projection requires a geodesic");
    auto walls = path_walls(P);
    for (std::size_t t = 0; t + 1 < walls.size(); ++t)
        if (contacts(X, walls[t], walls[t + 1]) == Contact::None)
            throw domain_error("consecutive crossed walls fail to contact");
    return walls;
}

// Full subgraph of the contact graph on the walls crossed by the geodesic.
inline HypGraph lambda_subgraph(const CubeComplex& X, const Path& P) {
    auto walls = project_to_contact(X, P);
    WallRelations rel(X);
    HypGraph G;
    G.kind = HypGraph::Kind::Contact;
    G.n = walls.size();
    G.adj.assign(G.n, std::vector<char>(G.n, 0));
    for (std::size_t a = 0; a < G.n; ++a) {
        G.labels.push_back(X.wall_name(walls[a]));
        for (std::size_t b = 0; b < G.n; ++b)
            if (a != b && rel.in_contact(walls[a], walls[b])) G.adj[a][b] = 1;
    }
    return G;
}

// Crossing edges of the lambda subgraph only (used by trichotomy metrics).
inline HypGraph lambda_crossing_subgraph(const CubeComplex& X, const Path& P) {
    auto walls = project_to_contact(X, P);
    WallRelations rel(X);
    HypGraph G;
    G.kind = HypGraph::Kind::Crossing;
    G.n = walls.size();
    G.adj.assign(G.n, std::vector<char>(G.n, 0));
    for (std::size_t a = 0; a < G.n; ++a) {
        G.labels.push_back(X.wall_name(walls[a]));
        for (std::size_t b = 0; b < G.n; ++b)
            if (a != b && rel.crosses(walls[a], walls[b])) G.adj[a][b] = 1;
    }
    return G;
}

// ---------------------------------------------------------------------------
// Folding and equating basepoints

// Rewrites two geodesics from a common basepoint so that they share an
// initial segment whose terminal edge is dual to H, preserving the tails
// beyond each one's H-edge.
inline std::pair<Path, Path> fold(const CubeComplex& X, const Path& g1, const Path& g2,
                                  std::size_t H) {
    if (!is_geodesic(X, g1) || !is_geodesic(X, g2)) throw domain_error("fold needs geodesics");
    if (g1.front() != g2.front()) throw domain_error("fold needs a common basepoint");
    auto w1 = path_walls(g1), w2 = path_walls(g2);
    auto find = [&](const std::vector<std::size_t>& w) -> std::optional<std::size_t> {
        for (std::size_t t = 0; t < w.size(); ++t)
            if (w[t] == H) return t;
        return std::nullopt;
    };
    auto s = find(w1), t = find(w2);
    if (!s || !t) throw domain_error("fold wall must be crossed by both geodesics");
    const Bitvec b = g1.front();
    const Bitvec a1 = g1[*s + 1], a2 = g2[*t + 1];

    Path prefix;
    Path mid1, mid2;  // from the shared segment's end to a1 / a2
    if (a1 == a2) {
        prefix.assign(g1.begin(), g1.begin() + static_cast<long>(*s) + 2);
    } else {
        Bitvec m = median(X, b, a1, a2);
        // H separates m from b and m lies in the convex carrier of H, so the
        // neighbour across H is on b's side.
        Bitvec m_before = m.with_flipped(H);
        if (!X.contains(m_before)) throw domain_error("median lies outside the carrier");
        prefix = bfs_geodesic(X, b, m_before);
        prefix.push_back(m);
        mid1 = bfs_geodesic(X, m, a1);
        mid2 = bfs_geodesic(X, m, a2);
    }
    auto splice = [&](const Path& pre, const Path& mid, const Path& g, std::size_t after) {
        Path out = pre;
        if (!mid.empty()) out.insert(out.end(), mid.begin() + 1, mid.end());
        out.insert(out.end(), g.begin() + static_cast<long>(after) + 2, g.end());
        return out;
    };
    Path r1 = splice(prefix, mid1, g1, *s);
    Path r2 = splice(prefix, mid2, g2, *t);
    if (!is_geodesic(X, r1) || !is_geodesic(X, r2))
        throw domain_error("folded paths failed the geodesic check");
    return {std::move(r1), std::move(r2)};
}

struct EquateResult {
    Path g1, g2;
    std::size_t defect1 = 0, defect2 = 0;  // wall-set symmetric differences
};

// Moves g1's start to g2's basepoint: keep the tail of g1 past the last wall
// separating the two basepoints and prepend a connector.
inline EquateResult equate_basepoints(const CubeComplex& X, const Path& g1, const Path& g2) {
    if (!is_geodesic(X, g1) || !is_geodesic(X, g2))
        throw domain_error("equating needs geodesics");
    if (g1.front() == g2.front()) return {g1, g2, 0, 0};
    auto w1 = path_walls(g1);
    const Bitvec &b1 = g1.front(), &b2 = g2.front();
    std::size_t T = 0;
    for (std::size_t t = 0; t < w1.size(); ++t)
        if (b1.get(w1[t]) != b2.get(w1[t])) T = t + 1;
    Path out = bfs_geodesic(X, b2, g1[T]);
    out.insert(out.end(), g1.begin() + static_cast<long>(T) + 1, g1.end());
    if (!is_geodesic(X, out))
        throw domain_error("equated path failed the geodesic check");
    EquateResult res;
    res.g2 = g2;
    res.defect1 = almost_equivalence_defect(path_walls(out), w1);
    res.g1 = std::move(out);
    return res;
}

// ---------------------------------------------------------------------------
// Fan decomposition

// Greedy maximal geodesic prefixes: a piece ends exactly when the next edge
// would recross one of its walls.
inline std::vector<Path> fan_decompose(const CubeComplex& X, const Path& P) {
    if (P.empty()) throw domain_error("fan decomposition of an empty path");
    for (const auto& v : P)
        if (!X.contains(v)) throw domain_error("path vertex not in complex");
    std::vector<Path> pieces;
    Path cur{P.front()};
    std::unordered_set<std::size_t> used;
    for (std::size_t t = 0; t + 1 < P.size(); ++t) {
        if (P[t].hamming(P[t + 1]) != 1) throw domain_error("path step is not an edge");
        std::size_t w = path_walls({P[t], P[t + 1]}).front();
        if (used.count(w)) {
            pieces.push_back(cur);
            cur = {P[t]};
            used.clear();
        }
        used.insert(w);
        cur.push_back(P[t + 1]);
    }
    pieces.push_back(cur);
    return pieces;
}

// ---------------------------------------------------------------------------
// r-avoiding divergence

struct Infinite {};  // tag for formatting

// Shortest path from a to b through vertices at distance >= r from x0
// (closed condition: distance exactly r is allowed); nullopt = infinity.
inline std::optional<std::size_t> r_avoiding_distance(const CubeComplex& X, const Bitvec& x0,
                                                      const Bitvec& a, const Bitvec& b,
                                                      std::size_t r) {
    if (!X.contains(x0) || !X.contains(a) || !X.contains(b))
        throw domain_error("r-avoiding endpoints must be vertices");
    if (x0.hamming(a) < r || x0.hamming(b) < r)
        throw domain_error("endpoints must lie outside the open ball of radius r");
    std::unordered_map<Bitvec, std::size_t, BitvecHash> dist;
    std::deque<Bitvec> q{a};
    dist.emplace(a, 0);
    while (!q.empty()) {
        Bitvec u = q.front();
        q.pop_front();
        std::size_t du = dist.at(u);
        if (u == b) return du;
        X.for_each_neighbor(u, [&](std::size_t, const Bitvec& v) {
            if (x0.hamming(v) < r) return;
            if (dist.emplace(v, du + 1).second) q.push_back(v);
        });
    }
    return std::nullopt;
}

struct DivergenceProfile {
    Bitvec basepoint;
    std::vector<std::optional<std::size_t>> values;  // index r; nullopt = infinity
};

inline DivergenceProfile divergence_profile(const CubeComplex& X, const Path& g1,
                                            const Path& g2, std::size_t r_max) {
    if (!is_geodesic(X, g1) || !is_geodesic(X, g2))
        throw domain_error("divergence needs geodesics");
    if (g1.front() != g2.front()) throw domain_error("divergence needs a common basepoint");
    if (r_max >= g1.size() || r_max >= g2.size())
        throw domain_error("r_max exceeds a ray length");
    DivergenceProfile prof;
    prof.basepoint = g1.front();
    for (std::size_t r = 0; r <= r_max; ++r)
        prof.values.push_back(r_avoiding_distance(X, prof.basepoint, g1[r], g2[r], r));
    return prof;
}

inline void write_csv(std::ostream& out, const DivergenceProfile& prof) {
    out << "r,dive\n";
    for (std::size_t r = 0; r < prof.values.size(); ++r) {
        out << r << ',';
        if (prof.values[r]) out << *prof.values[r];
        else out << "inf";
        out << "\n";
    }
}

// Least-squares slope of log(dive) against log(r) over r in [r_lo, r_hi],
// skipping r = 0 and infinite entries.
inline double loglog_slope(const DivergenceProfile& prof, std::size_t r_lo,
                           std::size_t r_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t r = std::max<std::size_t>(r_lo, 1);
         r <= r_hi && r < prof.values.size(); ++r) {
        if (!prof.values[r] || *prof.values[r] == 0) continue;
        double x = std::log(static_cast<double>(r));
        double y = std::log(static_cast<double>(*prof.values[r]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) throw domain_error("not enough finite entries for a slope fit");
    double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// Combinatorial geodesic completeness

struct CompletenessFailure {
    std::vector<std::size_t> clique;  // maximal pairwise-crossing wall family
    Bitvec orientation;               // bit i orients clique[i]
    std::size_t best_distance;        // max distance achieved from the cube
};

struct CompletenessReport {
    std::size_t depth;
    std::vector<CompletenessFailure> failures;
    bool complete() const { return failures.empty(); }
};

namespace detail {
inline void maximal_cliques(const HypGraph& G, std::vector<std::size_t> R,
                            std::vector<std::size_t> P, std::vector<std::size_t> Xs,
                            std::vector<std::vector<std::size_t>>& out) {
    if (P.empty() && Xs.empty()) { out.push_back(R); return; }
    auto Pc = P;
    for (std::size_t v : Pc) {
        std::vector<std::size_t> P2, X2;
        for (std::size_t u : P)
            if (G.adj[v][u]) P2.push_back(u);
        for (std::size_t u : Xs)
            if (G.adj[v][u]) X2.push_back(u);
        auto R2 = R;
        R2.push_back(v);
        maximal_cliques(G, R2, P2, X2, out);
        P.erase(std::find(P.begin(), P.end(), v));
        Xs.push_back(v);
    }
}
} // namespace detail

// For every maximal pairwise-crossing wall family {W_i} and every orientation
// of it, checks that the oriented intersection contains a vertex at distance
// >= depth from the cube spanned by the family.
inline CompletenessReport completeness_check(const CubeComplex& X, std::size_t depth) {
    if (depth < 1) throw domain_error("completeness depth must be at least 1");
    auto G = crossing_graph(X);
    std::vector<std::size_t> all(G.n);
    for (std::size_t v = 0; v < G.n; ++v) all[v] = v;
    std::vector<std::vector<std::size_t>> cliques;
    detail::maximal_cliques(G, {}, all, {}, cliques);

    CompletenessReport rep;
    rep.depth = depth;
    for (const auto& clique : cliques) {
        // Vertices of the cube spanned by the family: the common carrier.
        std::vector<Bitvec> cube;
        for (const auto& v : X.vertices()) {
            bool in = true;
            for (std::size_t w : clique)
                if (!in_carrier(X, w, v)) { in = false; break; }
            if (in) cube.push_back(v);
        }
        if (cube.empty()) continue;
        const std::size_t n = clique.size();
        for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
            Bitvec chi(n);
            for (std::size_t i = 0; i < n; ++i) chi.set(i, (code >> i) & 1);
            std::size_t best = 0;
            for (const auto& v : X.vertices()) {
                bool in = true;
                for (std::size_t i = 0; i < n && in; ++i)
                    in = v.get(clique[i]) == chi.get(i);
                if (!in) continue;
                std::size_t d = SIZE_MAX;
                for (const auto& c : cube) d = std::min(d, v.hamming(c));
                best = std::max(best, d);
            }
            if (best < depth) rep.failures.push_back({clique, chi, best});
        }
    }
    return rep;
}

// Truncation-aware variant: maximal crossing families come from the smaller
// level, but regions and reach are measured in the larger level (whose walls
// extend the smaller level's, with inclusion by zero padding).  A failure
// that survives the extra room is genuine; rim artifacts of the smaller
// truncation grow away.
inline CompletenessReport completeness_check_two_level(const CubeComplex& Xs,
                                                       const CubeComplex& Xb,
                                                       std::size_t depth) {
    if (depth < 1) throw domain_error("completeness depth must be at least 1");
    if (Xb.wall_count() < Xs.wall_count())
        throw domain_error("larger level must extend the smaller level's walls");
    auto G = crossing_graph(Xs);
    std::vector<std::size_t> all(G.n);
    for (std::size_t v = 0; v < G.n; ++v) all[v] = v;
    std::vector<std::vector<std::size_t>> cliques;
    detail::maximal_cliques(G, {}, all, {}, cliques);

    CompletenessReport rep;
    rep.depth = depth;
    for (const auto& clique : cliques) {
        std::vector<Bitvec> cube;
        for (const auto& v : Xb.vertices()) {
            bool in = true;
            for (std::size_t w : clique)
                if (!in_carrier(Xb, w, v)) { in = false; break; }
            if (in) cube.push_back(v);
        }
        if (cube.empty()) continue;
        const std::size_t n = clique.size();
        for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
            Bitvec chi(n);
            for (std::size_t i = 0; i < n; ++i) chi.set(i, (code >> i) & 1);
            std::size_t best = 0;
            for (const auto& v : Xb.vertices()) {
                bool in = true;
                for (std::size_t i = 0; i < n && in; ++i)
                    in = v.get(clique[i]) == chi.get(i);
                if (!in) continue;
                std::size_t d = SIZE_MAX;
                for (const auto& c : cube) d = std::min(d, v.hamming(c));
                best = std::max(best, d);
            }
            if (best < depth) rep.failures.push_back({clique, chi, best});
        }
    }
    return rep;
}

struct ExtensionResult {
    Path path;
    bool extended_front = false, extended_back = false;
    // Set when stuck: the end vertex at which every continuation recrosses a
    // wall within the lookahead.
    std::optional<Bitvec> obstruction;
};

namespace detail {
// Depth-limited search for a geodesic continuation from `cur` avoiding the
// walls in `used`; returns the first step of a successful continuation.
inline std::optional<Bitvec> continue_geodesic(const CubeComplex& X, const Bitvec& cur,
                                               std::unordered_set<std::size_t>& used,
                                               std::size_t depth) {
    for (std::size_t w = 0; w < X.wall_count(); ++w) {
        if (used.count(w)) continue;
        Bitvec nxt = cur.with_flipped(w);
        if (!X.contains(nxt)) continue;
        if (depth <= 1) return nxt;
        used.insert(w);
        auto deeper = continue_geodesic(X, nxt, used, depth - 1);
        used.erase(w);
        if (deeper) return nxt;
    }
    return std::nullopt;
}
} // namespace detail

// One step of the constructive extension at both ends, with a depth-limited
// lookahead guaranteeing the step continues to a geodesic of that length.
inline ExtensionResult extend_geodesic(const CubeComplex& X, const Path& P,
                                       std::size_t lookahead = 1) {
    if (!is_geodesic(X, P)) throw domain_error("extension requires a geodesic");
    ExtensionResult res;
    res.path = P;
    auto wallvec = path_walls(P);
    std::unordered_set<std::size_t> used(wallvec.begin(), wallvec.end());
    if (auto step = detail::continue_geodesic(X, res.path.back(), used, lookahead)) {
        res.path.push_back(*step);
        res.extended_back = true;
        used.insert(path_walls({P.back(), *step}).front());
    }
    if (auto step = detail::continue_geodesic(X, res.path.front(), used, lookahead)) {
        res.path.insert(res.path.begin(), *step);
        res.extended_front = true;
    }
    if (!res.extended_back && !res.extended_front) res.obstruction = P.back();
    if (!is_geodesic(X, res.path))
        throw domain_error("extension produced a non-geodesic");
    return res;
}

} // namespace cubix
