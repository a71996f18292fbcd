#pragma once

// Hyperplane relations (cross / contact / osculate / separate), facing
// triples, inseparable closures, medians / intervals / hulls / gates, and
// realization of finite inseparable wall sets as segments and convex
// subcomplexes.

#include "cubix/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cubix {

enum class Contact { Cross, Osculate, None };

inline bool crosses(const CubeComplex& X, std::size_t i, std::size_t j) {
    X.check_wall(i);
    X.check_wall(j);
    if (i == j) throw domain_error("crosses needs two distinct walls");
    bool combo[2][2] = {{false, false}, {false, false}};
    int remaining = 4;
    for (const auto& v : X.vertices()) {
        bool& c = combo[v.get(i)][v.get(j)];
        if (!c) {
            c = true;
            if (--remaining == 0) return true;
        }
    }
    return false;
}

// True when v lies in the carrier of wall i (the edge dual to i at v exists).
inline bool in_carrier(const CubeComplex& X, std::size_t i, const Bitvec& v) {
    return X.contains(v.with_flipped(i));
}

// The side of wall k on which the carrier of wall i lies: 0 or 1, or -1 when
// k crosses i (then the carrier meets both sides).
inline int side_of(const CubeComplex& X, std::size_t k, std::size_t i) {
    X.check_wall(k);
    X.check_wall(i);
    if (k == i) throw domain_error("side_of needs two distinct walls");
    if (crosses(X, k, i)) return -1;
    for (const auto& v : X.vertices())
        if (in_carrier(X, i, v)) return v.get(k) ? 1 : 0;
    throw domain_error("wall " + std::to_string(i) + " has an empty carrier");
}

inline bool separates(const CubeComplex& X, std::size_t k, std::size_t i, std::size_t j) {
    if (k == i || k == j || i == j) throw domain_error("separates needs distinct walls");
    int si = side_of(X, k, i);
    if (si < 0) return false;
    int sj = side_of(X, k, j);
    if (sj < 0) return false;
    return si != sj;
}

inline Contact contacts(const CubeComplex& X, std::size_t i, std::size_t j) {
    X.check_wall(i);
    X.check_wall(j);
    if (i == j) throw domain_error("contacts needs two distinct walls");
    bool shared = false;
    for (const auto& v : X.vertices())
        if (in_carrier(X, i, v) && in_carrier(X, j, v)) { shared = true; break; }
    if (!shared) return Contact::None;
    return crosses(X, i, j) ? Contact::Cross : Contact::Osculate;
}

inline bool is_facing_triple(const CubeComplex& X, std::size_t i, std::size_t j,
                             std::size_t k) {
    if (i == j || j == k || i == k) throw domain_error("facing triple needs distinct walls");
    if (crosses(X, i, j) || crosses(X, j, k) || crosses(X, i, k)) return false;
    return !separates(X, i, j, k) && !separates(X, j, i, k) && !separates(X, k, i, j);
}

// Least superset of U closed under adding any wall that separates two members.
inline std::vector<std::size_t> inseparable_closure(const CubeComplex& X,
                                                    std::vector<std::size_t> U) {
    if (U.empty()) throw domain_error("inseparable closure of an empty set");
    std::vector<char> in(X.wall_count(), 0);
    for (std::size_t u : U) {
        X.check_wall(u);
        in[u] = 1;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> members;
        for (std::size_t w = 0; w < X.wall_count(); ++w)
            if (in[w]) members.push_back(w);
        for (std::size_t k = 0; k < X.wall_count(); ++k) {
            if (in[k]) continue;
            for (std::size_t a = 0; a < members.size() && !in[k]; ++a)
                for (std::size_t b = a + 1; b < members.size() && !in[k]; ++b)
                    if (separates(X, k, members[a], members[b])) {
                        in[k] = 1;
                        grew = true;
                    }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < X.wall_count(); ++w)
        if (in[w]) out.push_back(w);
    return out;
}

inline bool is_inseparable(const CubeComplex& X, const std::vector<std::size_t>& U) {
    return inseparable_closure(X, U).size() == U.size();
}

// ---------------------------------------------------------------------------
// Median, interval, hull, gate

inline Bitvec median(const CubeComplex& X, const Bitvec& x, const Bitvec& y,
                     const Bitvec& z) {
    if (!X.contains(x) || !X.contains(y) || !X.contains(z))
        throw domain_error("median arguments must be vertices");
    Bitvec m = Bitvec::majority(x, y, z);
    if (!X.contains(m)) throw domain_error("majority vertex absent: complex is not median");
    return m;
}

// Vertices agreeing with x and y wherever x and y agree.
inline std::vector<Bitvec> interval(const CubeComplex& X, const Bitvec& x, const Bitvec& y) {
    if (!X.contains(x) || !X.contains(y))
        throw domain_error("interval endpoints must be vertices");
    std::vector<Bitvec> out;
    for (const auto& v : X.vertices()) {
        bool ok = true;
        for (std::size_t w = 0; w < X.wall_count() && ok; ++w)
            if (x.get(w) == y.get(w) && v.get(w) != x.get(w)) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

// A convex subcomplex cut out by a partial bit assignment on walls.
struct ConvexSubcomplex {
    std::vector<int> constraints;  // per wall: -1 free, else required bit
    std::vector<Bitvec> verts;     // X-vertices satisfying the constraints

    bool satisfied_by(const Bitvec& v) const {
        for (std::size_t w = 0; w < constraints.size(); ++w)
            if (constraints[w] >= 0 && static_cast<int>(v.get(w)) != constraints[w])
                return false;
        return true;
    }
    bool contains(const Bitvec& v) const {
        return std::find(verts.begin(), verts.end(), v) != verts.end();
    }
};

inline ConvexSubcomplex make_subcomplex(const CubeComplex& X, std::vector<int> constraints) {
    ConvexSubcomplex Y;
    Y.constraints = std::move(constraints);
    for (const auto& v : X.vertices())
        if (Y.satisfied_by(v)) Y.verts.push_back(v);
    return Y;
}

// Intersection of X with all halfspaces containing A.
inline ConvexSubcomplex convex_hull(const CubeComplex& X, const std::vector<Bitvec>& A) {
    if (A.empty()) throw domain_error("hull of an empty set");
    for (const auto& a : A)
        if (!X.contains(a)) throw domain_error("hull argument not a vertex");
    std::vector<int> cons(X.wall_count(), -1);
    for (std::size_t w = 0; w < X.wall_count(); ++w) {
        bool all0 = true, all1 = true;
        for (const auto& a : A) (a.get(w) ? all0 : all1) = false;
        if (all0) cons[w] = 0;
        else if (all1) cons[w] = 1;
    }
    return make_subcomplex(X, std::move(cons));
}

// Carrier of a wall as a convex subcomplex (all vertices with the dual edge).
inline ConvexSubcomplex carrier(const CubeComplex& X, std::size_t i) {
    X.check_wall(i);
    std::vector<Bitvec> members;
    for (const auto& v : X.vertices())
        if (in_carrier(X, i, v)) members.push_back(v);
    if (members.empty()) throw domain_error("empty carrier");
    return convex_hull(X, members);
}

// Unique closest vertex of a nonempty convex subcomplex.
inline Bitvec gate(const CubeComplex& X, const Bitvec& x, const ConvexSubcomplex& Y) {
    if (!X.contains(x)) throw domain_error("gate source must be a vertex");
    if (Y.verts.empty()) throw domain_error("gate into an empty subcomplex");
    const Bitvec* best = nullptr;
    std::size_t bestd = SIZE_MAX;
    std::size_t ties = 0;
    for (const auto& v : Y.verts) {
        std::size_t d = x.hamming(v);
        if (d < bestd) { bestd = d; best = &v; ties = 1; }
        else if (d == bestd) ++ties;
    }
    if (ties != 1) throw domain_error("gate is not unique: subcomplex is not convex");
    return *best;
}

// Walls with both bit values among the given vertices (the wall set 𝒲(Y)
// of a subcomplex, or 𝒲(γ) of a path's vertex set).
inline std::vector<std::size_t> walls_of(std::size_t wall_count,
                                         const std::vector<Bitvec>& verts) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < wall_count; ++w) {
        bool seen0 = false, seen1 = false;
        for (const auto& v : verts) (v.get(w) ? seen1 : seen0) = true;
        if (seen0 && seen1) out.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Realizing inseparable sets

// A deterministic geodesic from x to y: repeatedly flip the lowest-index
// differing bit whose flip stays inside X.  In a median graph some such flip
// always exists, so this terminates with a shortest path.
inline std::vector<Bitvec> greedy_geodesic(const CubeComplex& X, const Bitvec& x,
                                           const Bitvec& y) {
    if (!X.contains(x) || !X.contains(y))
        throw domain_error("geodesic endpoints must be vertices");
    std::vector<Bitvec> path{x};
    Bitvec cur = x;
    while (cur != y) {
        bool moved = false;
        for (std::size_t w = 0; w < X.wall_count() && !moved; ++w) {
            if (cur.get(w) == y.get(w)) continue;
            Bitvec nxt = cur.with_flipped(w);
            if (X.contains(nxt)) {
                path.push_back(nxt);
                cur = nxt;
                moved = true;
            }
        }
        if (!moved) throw domain_error("no descending move: complex is not median");
    }
    return path;
}

// Finds a vertex pair whose separating walls are exactly U, by grouping
// vertices on their bits outside U.  Returns false when no pair exists at
// this scale.
inline bool find_spanning_pair(const CubeComplex& X, const std::vector<std::size_t>& U,
                               Bitvec& out_x, Bitvec& out_y) {
    Bitvec umask(X.wall_count());
    for (std::size_t u : U) umask.set(u, true);
    std::unordered_map<Bitvec, std::vector<const Bitvec*>, BitvecHash> groups;
    for (const auto& v : X.vertices()) {
        Bitvec key = v;
        for (std::size_t u : U) key.set(u, false);
        groups[key].push_back(&v);
    }
    for (auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (members[a]->hamming(*members[b]) == U.size()) {
                    out_x = *members[a];
                    out_y = *members[b];
                    if (out_y < out_x) std::swap(out_x, out_y);
                    return true;
                }
    }
    return false;
}

// Geodesic crossing each wall of U exactly once (and nothing else).  U must
// be inseparable and facing-triple-free.  A realizing vertex pair is a pair
// projecting to opposite corners of the dual of (X^0, U) while agreeing on
// every other wall; any geodesic between them then crosses exactly U.
inline std::vector<Bitvec> segment_for(const CubeComplex& X, std::vector<std::size_t> U) {
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    if (U.empty()) throw domain_error("segment for an empty wall set");
    {
        auto cl = inseparable_closure(X, U);
        if (cl.size() != U.size()) {
            std::vector<std::size_t> extra;
            std::set_difference(cl.begin(), cl.end(), U.begin(), U.end(),
                                std::back_inserter(extra));
            throw domain_error("wall set is not inseparable: missing separator " +
                               std::to_string(extra.front()));
        }
    }
    for (std::size_t a = 0; a < U.size(); ++a)
        for (std::size_t b = a + 1; b < U.size(); ++b)
            for (std::size_t c = b + 1; c < U.size(); ++c)
                if (is_facing_triple(X, U[a], U[b], U[c]))
                    throw domain_error("wall set contains the facing triple {" +
                                       std::to_string(U[a]) + "," + std::to_string(U[b]) +
                                       "," + std::to_string(U[c]) + "}");
    Bitvec x, y;
    if (!find_spanning_pair(X, U, x, y))
        throw domain_error("wall set is not realized by a segment at this scale");
    return greedy_geodesic(X, x, y);
}

// Convex subcomplex Y with 𝒲(Y) exactly U (U inseparable), as the hull of a
// vertex pair separated by exactly U.  The wall set is re-derived to verify.
inline ConvexSubcomplex realize_inseparable(const CubeComplex& X,
                                            std::vector<std::size_t> U) {
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    if (U.empty()) throw domain_error("cannot realize an empty wall set");
    if (!is_inseparable(X, U)) throw domain_error("wall set is not inseparable");
    Bitvec x, y;
    if (!find_spanning_pair(X, U, x, y))
        throw domain_error("wall set is not realized by a convex subcomplex at this scale");
    ConvexSubcomplex Y = convex_hull(X, {x, y});
    auto derived = walls_of(X.wall_count(), Y.verts);
    if (derived != U) throw domain_error("realized subcomplex has a different wall set");
    return Y;
}

inline std::size_t almost_equivalence_defect(std::vector<std::size_t> A,
                                             std::vector<std::size_t> B) {
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    std::vector<std::size_t> sym;
    std::set_symmetric_difference(A.begin(), A.end(), B.begin(), B.end(),
                                  std::back_inserter(sym));
    return sym.size();
}

// ---------------------------------------------------------------------------
// Cached wall relations for graph construction (O(m^2) pairs over packed
// vertex-index columns).

class WallRelations {
public:
    explicit WallRelations(const CubeComplex& X) : X_(&X), m_(X.wall_count()) {
        const std::size_t n = X.size();
        cols_.assign(m_, Bitvec(n));
        carriers_.assign(m_, Bitvec(n));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < m_; ++w) {
                if (X.vertex(v).get(w)) cols_[w].set(v, true);
                if (in_carrier(X, w, X.vertex(v))) carriers_[w].set(v, true);
            }
        cross_.assign(m_ * m_, 0);
        contact_.assign(m_ * m_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i + 1; j < m_; ++j) {
                bool q[4] = {false, false, false, false};
                bool shared = false;
                for (std::size_t v = 0; v < n; ++v) {
                    q[2 * X.vertex(v).get(i) + X.vertex(v).get(j)] = true;
                    if (carriers_[i].get(v) && carriers_[j].get(v)) shared = true;
                }
                bool cr = q[0] && q[1] && q[2] && q[3];
                cross_[i * m_ + j] = cross_[j * m_ + i] = cr;
                contact_[i * m_ + j] = contact_[j * m_ + i] = shared;
            }
    }

    std::size_t wall_count() const { return m_; }
    bool crosses(std::size_t i, std::size_t j) const { return cross_[i * m_ + j]; }
    bool in_contact(std::size_t i, std::size_t j) const { return contact_[i * m_ + j]; }
    Contact contact(std::size_t i, std::size_t j) const {
        if (!in_contact(i, j)) return Contact::None;
        return crosses(i, j) ? Contact::Cross : Contact::Osculate;
    }

private:
    const CubeComplex* X_;
    std::size_t m_;
    std::vector<Bitvec> cols_, carriers_;
    std::vector<char> cross_, contact_;
};

} // namespace cubix
