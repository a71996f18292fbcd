#pragma once

// Scale-limited boundary machinery: flags and ordered decompositions for
// unidirectional wall sets, a simplicial boundary approximation built from
// nested truncation levels, the eta pseudo-metric on its simplices,
// visibility filtrations, ray trichotomy measurements, and witness
// subcomplexes (strip unions and product grids).

#include "cubix/complex.hpp"
#include "cubix/families.hpp"
#include "cubix/geodesics.hpp"
#include "cubix/graphs.hpp"
#include "cubix/hyperplanes.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cubix {

namespace bdetail {

// Relative position of carrier(w) with respect to the halfspaces of u:
// 0 = the halfspace containing the basepoint, 1 = the far halfspace,
// 2 = meets both (exactly when u and w cross).
class SideTable {
public:
    explicit SideTable(const CubeComplex& X) : m_(X.wall_count()), tab_(m_ * m_, 2) {
        const Bitvec& base = X.basepoint();
        std::vector<std::vector<std::size_t>> carrier_verts(m_);
        for (std::size_t v = 0; v < X.size(); ++v)
            for (std::size_t w = 0; w < m_; ++w)
                if (in_carrier(X, w, X.vertex(v))) carrier_verts[w].push_back(v);
        for (std::size_t u = 0; u < m_; ++u) {
            const bool far_bit = !base.get(u);
            for (std::size_t w = 0; w < m_; ++w) {
                if (u == w) continue;
                bool seen_near = false, seen_far = false;
                for (std::size_t v : carrier_verts[w]) {
                    (X.vertex(v).get(u) == far_bit ? seen_far : seen_near) = true;
                    if (seen_near && seen_far) break;
                }
                tab_[u * m_ + w] =
                    seen_near && seen_far ? 2 : (seen_far ? 1 : 0);
            }
        }
    }

    std::size_t wall_count() const { return m_; }
    int at(std::size_t u, std::size_t w) const { return tab_[u * m_ + w]; }
    bool crosses(std::size_t u, std::size_t w) const { return u != w && at(u, w) == 2; }
    // carrier(w) lies entirely beyond u (away from the basepoint)
    bool behind(std::size_t u, std::size_t w) const { return u != w && at(u, w) == 1; }
    // u separates the carriers of a and b
    bool separates(std::size_t u, std::size_t a, std::size_t b) const {
        if (u == a || u == b) return false;
        int sa = at(u, a), sb = at(u, b);
        return sa != 2 && sb != 2 && sa != sb;
    }

private:
    std::size_t m_;
    std::vector<signed char> tab_;
};

// Least superset of U closed under adding any wall separating two members.
inline std::vector<std::size_t> closure(const SideTable& S, const std::vector<std::size_t>& U) {
    std::vector<char> in(S.wall_count(), 0);
    for (std::size_t u : U) in[u] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> members;
        for (std::size_t w = 0; w < S.wall_count(); ++w)
            if (in[w]) members.push_back(w);
        for (std::size_t k = 0; k < S.wall_count(); ++k) {
            if (in[k]) continue;
            for (std::size_t a = 0; a < members.size() && !in[k]; ++a)
                for (std::size_t b = a + 1; b < members.size() && !in[k]; ++b)
                    if (S.separates(k, members[a], members[b])) {
                        in[k] = 1;
                        grew = true;
                    }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < S.wall_count(); ++w)
        if (in[w]) out.push_back(w);
    return out;
}

// Greedy outward chain from a seed: repeatedly append the lowest-index wall
// whose carrier lies entirely beyond the current last wall.
inline std::vector<std::size_t> outward_chain(const SideTable& S, std::size_t seed) {
    std::vector<char> used(S.wall_count(), 0);
    std::vector<std::size_t> chain{seed};
    used[seed] = 1;
    for (;;) {
        std::size_t last = chain.back();
        std::size_t next = S.wall_count();
        for (std::size_t w = 0; w < S.wall_count(); ++w)
            if (!used[w] && S.behind(last, w)) {
                next = w;
                break;
            }
        if (next == S.wall_count()) break;
        chain.push_back(next);
        used[next] = 1;
    }
    return chain;
}

// Sort a wall set from inner to outer: walls with more set-members beyond
// them come first (ties by index).
inline std::vector<std::size_t> inner_to_outer(const SideTable& S,
                                               std::vector<std::size_t> P) {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t p : P) {
        std::size_t beyond = 0;
        for (std::size_t q : P)
            if (S.behind(p, q)) ++beyond;
        keyed.emplace_back(beyond, p);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::size_t i = 0; i < P.size(); ++i) P[i] = keyed[i].second;
    return P;
}

} // namespace bdetail

// ---------------------------------------------------------------------------
// Flags and ordered decomposition for unidirectional wall sets

struct UBSApprox {
    std::vector<std::size_t> walls;  // sorted, duplicate-free
    std::size_t theta = 2;
    bool unidirectional = false;
    bool inseparable = false;
    bool facing_free = false;
    std::string failing;  // first failing axiom name; empty when all hold

    // Ordered decomposition (inner pieces first; each piece inner-to-outer).
    std::vector<std::vector<std::size_t>> pieces;
    std::vector<std::size_t> defect;  // members crossing nothing of their stage
    // k*k row-major: dominance[i*k+j] for j > i is the smallest fraction of
    // piece i crossed by a single element of piece j; diagonal entries are 1.
    std::vector<double> dominance;

    bool flags_pass() const { return unidirectional && inseparable && facing_free; }
    std::size_t piece_count() const { return pieces.size(); }
};

namespace bdetail {

inline UBSApprox flags_with(const CubeComplex& X, const SideTable& S,
                            std::vector<std::size_t> U, std::size_t theta) {
    if (U.empty()) throw domain_error("flags of an empty wall set");
    for (std::size_t u : U) X.check_wall(u);
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());

    UBSApprox rep;
    rep.walls = U;
    rep.theta = theta;

    rep.unidirectional = true;
    for (std::size_t u : U) {
        std::size_t near = 0, far = 0;
        for (std::size_t w : U) {
            if (w == u) continue;
            int s = S.at(u, w);
            if (s == 0) ++near;
            else if (s == 1) ++far;
        }
        if (std::min(near, far) > theta) {
            rep.unidirectional = false;
            break;
        }
    }

    rep.inseparable = closure(S, U) == U;

    rep.facing_free = true;
    for (std::size_t a = 0; a < U.size() && rep.facing_free; ++a)
        for (std::size_t b = a + 1; b < U.size() && rep.facing_free; ++b) {
            if (S.crosses(U[a], U[b])) continue;
            for (std::size_t c = b + 1; c < U.size(); ++c) {
                if (S.crosses(U[a], U[c]) || S.crosses(U[b], U[c])) continue;
                if (!S.separates(U[a], U[b], U[c]) && !S.separates(U[b], U[a], U[c]) &&
                    !S.separates(U[c], U[a], U[b])) {
                    rep.facing_free = false;
                    break;
                }
            }
        }

    if (!rep.unidirectional) rep.failing = "unidirectional";
    else if (!rep.inseparable) rep.failing = "inseparable";
    else if (!rep.facing_free) rep.failing = "facing-triple-free";
    return rep;
}

// Separation chains inside R, reconstructed in decreasing length (at most
// `cap` of them).
inline std::vector<std::vector<std::size_t>> chains_desc(const SideTable& S,
                                                         const std::vector<std::size_t>& R,
                                                         std::size_t cap = 64) {
    const std::size_t n = R.size();
    if (n == 0) return {};
    if (n == 1) return {{R[0]}};

    // L[a*n+b]: longest chain ending (..., R[a], R[b]); 0 when (a, b) invalid.
    std::vector<std::size_t> L(n * n, 0), parent(n * n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !S.crosses(R[a], R[b])) L[a * n + b] = 2;
    bool changed = true;
    std::size_t rounds = 0;
    while (changed && rounds++ < n) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (L[a * n + b] == 0) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == b || L[c * n + a] == 0) continue;
                    if (!S.separates(R[a], R[c], R[b])) continue;
                    if (L[c * n + a] + 1 > L[a * n + b]) {
                        L[a * n + b] = L[c * n + a] + 1;
                        parent[a * n + b] = c;
                        changed = true;
                    }
                }
            }
    }

    std::vector<std::pair<std::size_t, std::size_t>> ends;  // (a, b)
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (L[a * n + b] > 0) ends.emplace_back(a, b);
    std::sort(ends.begin(), ends.end(), [&](const auto& x, const auto& y) {
        std::size_t lx = L[x.first * n + x.second], ly = L[y.first * n + y.second];
        if (lx != ly) return lx > ly;
        return x < y;
    });

    auto reconstruct = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> chain{R[b], R[a]};
        while (parent[a * n + b] != n) {
            std::size_t c = parent[a * n + b];
            chain.push_back(R[c]);
            b = a;
            a = c;
        }
        return inner_to_outer(S, chain);
    };

    std::vector<std::vector<std::size_t>> out;
    for (const auto& e : ends) {
        if (out.size() >= cap) break;
        out.push_back(reconstruct(e.first, e.second));
    }
    if (out.empty()) out.push_back({R[0]});
    return out;
}

// True when every member of `rest` that crosses anything in the ordered
// piece crosses a final segment of it, missing at most `tol` later members.
inline bool tail_crossing(const SideTable& S, const std::vector<std::size_t>& order,
                          const std::vector<std::size_t>& rest, bool require_any,
                          std::size_t tol) {
    for (std::size_t e : rest) {
        bool any_cross = false, crossed_seen = false;
        std::size_t late_misses = 0;
        for (std::size_t p : order) {
            if (S.crosses(e, p)) {
                any_cross = crossed_seen = true;
            } else if (crossed_seen && ++late_misses > tol) {
                return false;
            }
        }
        if (require_any && !any_cross) return false;
    }
    return true;
}

// Shrink a candidate piece to a minimal one.  Minimal pieces are pairwise
// non-crossing chains, so the candidates are greedy independent sets of the
// crossing graph (grown outer walls first); a candidate wins when the
// removed members all peel onto it, crossing final segments.
inline std::vector<std::size_t> reduce_piece(const SideTable& S,
                                             std::vector<std::size_t> P,
                                             std::size_t tol) {
    bool reduced = true;
    while (reduced && P.size() > 1) {
        reduced = false;
        // Walls crossing nothing in P would join every independent set and
        // their closure can drag foreign walls back in; split on the
        // crossing part C only and handle the isolated walls afterwards.
        std::vector<std::size_t> C, Z;
        for (std::size_t w : P) {
            bool any = false;
            for (std::size_t v : P)
                if (v != w && S.crosses(w, v)) {
                    any = true;
                    break;
                }
            (any ? C : Z).push_back(w);
        }
        if (C.size() < 2) break;
        std::vector<std::size_t> outer_first = inner_to_outer(S, C);
        std::reverse(outer_first.begin(), outer_first.end());
        for (std::size_t w : C) {
            std::vector<std::size_t> I{w};
            for (std::size_t v : outer_first) {
                if (v == w) continue;
                bool indep = true;
                for (std::size_t u : I)
                    if (S.crosses(u, v)) {
                        indep = false;
                        break;
                    }
                if (indep) I.push_back(v);
            }
            std::vector<std::size_t> cl = closure(S, I);
            std::vector<char> in_cl(S.wall_count(), 0);
            for (std::size_t u : cl) in_cl[u] = 1;
            std::vector<std::size_t> sub, rest;
            for (std::size_t u : C)
                (in_cl[u] ? sub : rest).push_back(u);
            if (rest.empty() || sub.empty()) continue;
            if (!tail_crossing(S, inner_to_outer(S, sub), rest, true, tol)) continue;
            // Re-attach isolated walls lying strictly inside the chain:
            // something in the piece is behind them and they are behind
            // nothing in it.  Rim walls beyond the piece stay out.
            std::vector<std::size_t> piece = sub;
            for (std::size_t z : Z) {
                bool inner = false, beyond = false;
                for (std::size_t m : sub) {
                    if (S.behind(z, m)) inner = true;
                    if (S.behind(m, z)) beyond = true;
                }
                if (inner && !beyond) piece.push_back(z);
            }
            P = std::move(piece);
            reduced = true;
            break;
        }
    }
    return P;
}

// The next piece to extract from R: the longest chain whose closure peels
// well (members left behind cross final segments of it), shrunk to a
// minimal piece.
inline std::vector<std::size_t> select_piece(const SideTable& S,
                                             const std::vector<std::size_t>& R,
                                             std::size_t tol) {
    auto piece_of = [&](const std::vector<std::size_t>& chain) {
        std::vector<std::size_t> cl = closure(S, chain);
        std::vector<char> in_cl(S.wall_count(), 0);
        for (std::size_t w : cl) in_cl[w] = 1;
        std::vector<std::size_t> piece;
        for (std::size_t w : R)
            if (in_cl[w]) piece.push_back(w);
        return piece;
    };
    auto rest_of = [&](const std::vector<std::size_t>& piece) {
        std::vector<char> in_piece(S.wall_count(), 0);
        for (std::size_t w : piece) in_piece[w] = 1;
        std::vector<std::size_t> rest;
        for (std::size_t w : R)
            if (!in_piece[w]) rest.push_back(w);
        return rest;
    };
    std::vector<std::size_t> fallback;
    for (const auto& chain : chains_desc(S, R)) {
        std::vector<std::size_t> piece = piece_of(chain);
        if (fallback.empty()) fallback = piece;
        if (tail_crossing(S, inner_to_outer(S, piece), rest_of(piece), false, tol))
            return reduce_piece(S, piece, tol);
    }
    return reduce_piece(S, fallback, tol);
}

// Ordered decomposition without the flag gate: repeatedly extract a minimal
// well-peeling piece, keep the members crossing at least one element of it
// for the next stage, and push the rest into the defect.
inline void decompose_core(const SideTable& S, UBSApprox& rep) {
    std::vector<std::size_t> R = rep.walls;
    rep.pieces.clear();
    rep.defect.clear();
    while (!R.empty()) {
        std::vector<std::size_t> piece = select_piece(S, R, 0);
        rep.pieces.push_back(inner_to_outer(S, piece));
        std::vector<char> in_piece(S.wall_count(), 0);
        for (std::size_t w : piece) in_piece[w] = 1;
        std::vector<std::size_t> next;
        for (std::size_t e : R) {
            if (in_piece[e]) continue;
            bool any = false;
            for (std::size_t p : piece)
                if (S.crosses(e, p)) {
                    any = true;
                    break;
                }
            (any ? next : rep.defect).push_back(e);
        }
        R = next;
    }
    std::sort(rep.defect.begin(), rep.defect.end());

    const std::size_t k = rep.pieces.size();
    rep.dominance.assign(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) rep.dominance[i * k + i] = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            double worst = 1.0;
            for (std::size_t u : rep.pieces[j]) {
                std::size_t cnt = 0;
                for (std::size_t w : rep.pieces[i])
                    if (S.crosses(u, w)) ++cnt;
                worst = std::min(
                    worst, static_cast<double>(cnt) /
                               static_cast<double>(rep.pieces[i].size()));
            }
            rep.dominance[i * k + j] = worst;
        }
}

} // namespace bdetail

inline UBSApprox ubs_flags(const CubeComplex& X, const std::vector<std::size_t>& U,
                           std::size_t theta = 2) {
    bdetail::SideTable S(X);
    return bdetail::flags_with(X, S, U, theta);
}

inline UBSApprox ubs_flags(const TruncationSystem& ts, const std::vector<std::size_t>& U,
                           std::size_t r, std::size_t theta = 2) {
    return ubs_flags(ts.level(r), U, theta);
}

inline UBSApprox minimal_decomposition(const CubeComplex& X,
                                       const std::vector<std::size_t>& U,
                                       std::size_t theta = 2) {
    bdetail::SideTable S(X);
    UBSApprox rep = bdetail::flags_with(X, S, U, theta);
    if (!rep.flags_pass())
        throw domain_error("wall set fails the " + rep.failing + " axiom at this scale");
    bdetail::decompose_core(S, rep);
    return rep;
}

inline UBSApprox minimal_decomposition(const TruncationSystem& ts,
                                       const std::vector<std::size_t>& U, std::size_t r,
                                       std::size_t theta = 2) {
    return minimal_decomposition(ts.level(r), U, theta);
}

// ---------------------------------------------------------------------------
// Simplicial boundary approximation over nested truncation levels

struct BoundarySimplex {
    std::size_t id = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> vertices;     // spanning 0-simplex ids (sorted)
    std::vector<std::size_t> faces;        // ids of codimension-1 faces
    std::vector<std::size_t> walls;        // representative wall set, top level
    std::vector<std::string> wall_sample;  // up to eight wall names
};

struct BoundaryComplexApprox {
    std::vector<std::size_t> radii;
    std::size_t theta = 2;
    std::size_t window = 3;
    bool certified = false;
    std::string status;  // "STABLE" or "UNSTABLE"
    bool flag_property = true;
    std::vector<BoundarySimplex> simplices;  // position == id; 0-simplices first

    std::size_t count_of_dim(std::size_t d) const {
        std::size_t c = 0;
        for (const auto& s : simplices)
            if (s.dim == d) ++c;
        return c;
    }
    std::vector<std::size_t> ids_of_dim(std::size_t d) const {
        std::vector<std::size_t> out;
        for (const auto& s : simplices)
            if (s.dim == d) out.push_back(s.id);
        return out;
    }
    // 0-simplex whose representative wall set contains the given wall
    std::optional<std::size_t> class_containing(std::size_t wall) const {
        for (const auto& s : simplices)
            if (s.dim == 0 &&
                std::binary_search(s.walls.begin(), s.walls.end(), wall))
                return s.id;
        return std::nullopt;
    }
};

namespace bdetail {

inline std::vector<std::size_t> symdiff(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

struct ClassSet {
    std::vector<std::size_t> seeds;      // base-level seed walls in the class
    std::size_t rep_seed = 0;            // seed with the largest top candidate
    std::vector<std::size_t> rep_walls;  // top-level candidate of the rep seed
};

// Union of representative wall sets closed up, decomposed, and matched back
// to the classes in S.  Accepts when the decomposition has exactly |S|
// pieces, small defect, and a bijective piece-to-class matching.
inline bool spans_simplex(const SideTable& S_top, std::size_t theta,
                          const std::vector<ClassSet>& classes,
                          const std::vector<std::size_t>& members,
                          std::vector<std::size_t>* union_out) {
    std::vector<std::size_t> U;
    for (std::size_t c : members)
        U.insert(U.end(), classes[c].rep_walls.begin(), classes[c].rep_walls.end());
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    U = closure(S_top, U);

    UBSApprox rep;
    rep.walls = U;
    rep.theta = theta;
    decompose_core(S_top, rep);
    if (rep.pieces.size() != members.size()) return false;
    if (rep.defect.size() > theta * members.size()) return false;

    std::vector<char> taken(members.size(), 0);
    for (const auto& piece : rep.pieces) {
        std::vector<std::size_t> p = piece;
        std::sort(p.begin(), p.end());
        std::size_t best = members.size(), best_d = SIZE_MAX;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (taken[i]) continue;
            std::size_t d = symdiff(p, classes[members[i]].rep_walls).size();
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best == members.size() || best_d > theta * members.size()) return false;
        taken[best] = 1;
    }
    if (union_out) *union_out = U;
    return true;
}

inline BoundaryComplexApprox
boundary_core(const std::function<CubeComplex(std::size_t)>& level,
              const std::vector<std::size_t>& radii, std::size_t theta,
              std::size_t window) {
    if (radii.size() < 2) throw domain_error("boundary approximation needs at least two radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1])
            throw domain_error("radii must be strictly increasing");

    BoundaryComplexApprox B;
    B.radii = radii;
    B.theta = theta;
    B.window = std::min<std::size_t>(std::max<std::size_t>(window, 2), radii.size());

    std::vector<CubeComplex> Xs;
    std::vector<SideTable> tables;
    Xs.reserve(radii.size());
    for (std::size_t r : radii) Xs.push_back(level(r));
    for (const auto& X : Xs) tables.emplace_back(X);

    const std::size_t m0 = Xs.front().wall_count();
    for (std::size_t i = 1; i < Xs.size(); ++i) {
        if (Xs[i].wall_count() < Xs[i - 1].wall_count())
            throw domain_error("wall counts must be nondecreasing across levels");
        for (std::size_t w = 0; w < Xs[i - 1].wall_count(); ++w)
            if (Xs[i].wall_name(w) != Xs[i - 1].wall_name(w))
                throw domain_error("wall indexing is not stable across levels");
    }

    // Per-level candidate wall set for every base-level seed.
    std::vector<std::vector<std::vector<std::size_t>>> cand(radii.size());
    for (std::size_t li = 0; li < radii.size(); ++li) {
        cand[li].resize(m0);
        for (std::size_t u = 0; u < m0; ++u) {
            auto c = closure(tables[li], outward_chain(tables[li], u));
            std::sort(c.begin(), c.end());
            // A greedy chain can drift across several directions; keep only
            // the minimal piece the seed itself belongs to.
            UBSApprox rep;
            rep.walls = c;
            rep.theta = theta;
            decompose_core(tables[li], rep);
            for (const auto& piece : rep.pieces) {
                if (std::find(piece.begin(), piece.end(), u) != piece.end()) {
                    c = piece;
                    std::sort(c.begin(), c.end());
                    break;
                }
            }
            cand[li][u] = std::move(c);
        }
    }

    // Merge seeds whose candidate symmetric difference is non-increasing
    // across the certification window.
    const std::size_t w0 = radii.size() - B.window;
    std::vector<std::size_t> uf(m0);
    for (std::size_t i = 0; i < m0; ++i) uf[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (std::size_t a = 0; a < m0; ++a)
        for (std::size_t b = a + 1; b < m0; ++b) {
            bool ok = true;
            std::size_t prev = SIZE_MAX;
            for (std::size_t li = w0; li < radii.size(); ++li) {
                std::size_t d = symdiff(cand[li][a], cand[li][b]).size();
                if (prev != SIZE_MAX && d > prev) {
                    ok = false;
                    break;
                }
                prev = d;
            }
            if (ok) uf[find(a)] = find(b);
        }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t u = 0; u < m0; ++u) groups[find(u)].push_back(u);

    std::vector<ClassSet> classes;
    for (auto& [root, seeds] : groups) {
        ClassSet cs;
        cs.seeds = seeds;
        cs.rep_seed = seeds.front();
        for (std::size_t s : seeds)
            if (cand.back()[s].size() > cand.back()[cs.rep_seed].size()) cs.rep_seed = s;
        // Drop classes whose candidate size fails to grow with the radius:
        // their wall sets stay finite and cannot reach the boundary.
        bool grows = true;
        for (std::size_t li = w0 + 1; li < radii.size(); ++li)
            if (cand[li][cs.rep_seed].size() <= cand[li - 1][cs.rep_seed].size()) {
                grows = false;
                break;
            }
        if (!grows) continue;
        cs.rep_walls = cand.back()[cs.rep_seed];
        classes.push_back(std::move(cs));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ClassSet& a, const ClassSet& b) {
                  return a.seeds.front() < b.seeds.front();
              });

    // Certificate: for every class, the candidate restricted to base-level
    // walls must grow monotonically across the window (a small base radius
    // may not yet expose every separator) and agree at the last two radii.
    B.certified = true;
    for (const auto& cs : classes) {
        std::vector<std::vector<std::size_t>> restr;
        for (std::size_t li = w0; li < radii.size(); ++li) {
            std::vector<std::size_t> rw;
            for (std::size_t w : cand[li][cs.rep_seed])
                if (w < m0) rw.push_back(w);
            restr.push_back(std::move(rw));
        }
        for (std::size_t i = 0; i + 1 < restr.size() && B.certified; ++i) {
            B.certified = std::includes(restr[i + 1].begin(), restr[i + 1].end(),
                                        restr[i].begin(), restr[i].end());
            if (i + 2 == restr.size())
                B.certified = B.certified && restr[i] == restr[i + 1];
        }
        if (!B.certified) break;
    }
    B.status = B.certified ? "STABLE" : "UNSTABLE";

    const CubeComplex& Xtop = Xs.back();
    const SideTable& S_top = tables.back();
    auto sample = [&](const std::vector<std::size_t>& walls) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < walls.size() && i < 8; ++i)
            names.push_back(Xtop.wall_name(walls[i]));
        return names;
    };

    for (std::size_t c = 0; c < classes.size(); ++c) {
        BoundarySimplex s;
        s.id = B.simplices.size();
        s.dim = 0;
        s.vertices = {c};
        s.walls = classes[c].rep_walls;
        s.wall_sample = sample(s.walls);
        B.simplices.push_back(std::move(s));
    }

    // Higher simplices: subsets of classes whose merged wall sets decompose
    // into one piece per class.  Grown dimension by dimension so every face
    // exists before its cofaces.
    std::map<std::vector<std::size_t>, std::size_t> id_of;
    for (std::size_t c = 0; c < classes.size(); ++c)
        id_of[{c}] = c;

    std::vector<std::vector<std::size_t>> last_layer;
    for (std::size_t c = 0; c < classes.size(); ++c) last_layer.push_back({c});
    std::vector<std::vector<char>> edge(classes.size(),
                                        std::vector<char>(classes.size(), 0));

    for (std::size_t dim = 1; dim < 6 && !last_layer.empty(); ++dim) {
        std::vector<std::vector<std::size_t>> next_layer;
        std::set<std::vector<std::size_t>> tried;
        for (const auto& face : last_layer)
            for (std::size_t c = face.back() + 1; c < classes.size(); ++c) {
                std::vector<std::size_t> cand_set = face;
                cand_set.push_back(c);
                if (!tried.insert(cand_set).second) continue;
                bool faces_ok = true;
                if (dim >= 2) {
                    for (std::size_t skip = 0; skip < cand_set.size() && faces_ok; ++skip) {
                        std::vector<std::size_t> f;
                        for (std::size_t i = 0; i < cand_set.size(); ++i)
                            if (i != skip) f.push_back(cand_set[i]);
                        faces_ok = id_of.count(f) != 0;
                    }
                    bool clique = true;
                    for (std::size_t i = 0; i < cand_set.size() && clique; ++i)
                        for (std::size_t j = i + 1; j < cand_set.size(); ++j)
                            if (!edge[cand_set[i]][cand_set[j]]) {
                                clique = false;
                                break;
                            }
                    if (!clique) continue;
                    if (!faces_ok) {
                        // a clique of the 1-skeleton missing a face: already
                        // recorded as a flag-property failure below
                        continue;
                    }
                }
                std::vector<std::size_t> U;
                bool ok = spans_simplex(S_top, theta, classes, cand_set, &U);
                if (dim == 1) {
                    edge[cand_set[0]][cand_set[1]] = edge[cand_set[1]][cand_set[0]] = ok;
                    if (!ok) continue;
                } else if (!ok) {
                    B.flag_property = false;
                    continue;
                }
                BoundarySimplex s;
                s.id = B.simplices.size();
                s.dim = dim;
                s.vertices = cand_set;
                s.walls = U;
                s.wall_sample = sample(U);
                for (std::size_t skip = 0; skip < cand_set.size(); ++skip) {
                    std::vector<std::size_t> f;
                    for (std::size_t i = 0; i < cand_set.size(); ++i)
                        if (i != skip) f.push_back(cand_set[i]);
                    s.faces.push_back(id_of.at(f));
                }
                id_of[cand_set] = s.id;
                next_layer.push_back(cand_set);
                B.simplices.push_back(std::move(s));
            }
        last_layer = std::move(next_layer);
    }
    return B;
}

} // namespace bdetail

inline BoundaryComplexApprox boundary_complex(const TruncationSystem& ts,
                                              const std::vector<std::size_t>& radii,
                                              std::size_t theta = 2,
                                              std::size_t window = 3) {
    return bdetail::boundary_core(
        [&ts](std::size_t r) { return ts.level(r); }, radii, theta, window);
}

// Fewest simplices in a chain from u to v in which consecutive simplices
// share a spanning 0-simplex; nullopt when they lie in different components.
inline std::optional<std::size_t> eta_distance(const BoundaryComplexApprox& B,
                                               std::size_t u, std::size_t v) {
    if (u >= B.simplices.size() || v >= B.simplices.size())
        throw domain_error("unknown simplex id");
    if (u == v) return 0;
    const std::size_t n = B.simplices.size();
    auto meets = [&](std::size_t a, std::size_t b) {
        const auto& A = B.simplices[a].vertices;
        const auto& Bv = B.simplices[b].vertices;
        std::vector<std::size_t> inter;
        std::set_intersection(A.begin(), A.end(), Bv.begin(), Bv.end(),
                              std::back_inserter(inter));
        return !inter.empty();
    };
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::deque<std::size_t> q{u};
    dist[u] = 0;
    while (!q.empty()) {
        std::size_t a = q.front();
        q.pop_front();
        if (a == v) return dist[a];
        for (std::size_t b = 0; b < n; ++b)
            if (dist[b] == SIZE_MAX && meets(a, b)) {
                dist[b] = dist[a] + 1;
                q.push_back(b);
            }
    }
    return std::nullopt;
}

inline void write_boundary(std::ostream& out, const BoundaryComplexApprox& B) {
    out << "cubix-boundary v1\n";
    out << "radii";
    for (std::size_t i = 0; i < B.radii.size(); ++i)
        out << (i ? "," : " ") << B.radii[i];
    out << "\ntheta " << B.theta << "\nwindow " << B.window << "\nstatus " << B.status
        << "\nflag-property " << (B.flag_property ? "yes" : "no") << "\n";
    for (const auto& s : B.simplices) {
        out << "simplex " << s.id << " dim " << s.dim << " vertices";
        for (std::size_t v : s.vertices) out << " " << v;
        out << " faces";
        if (s.faces.empty()) out << " -";
        for (std::size_t f : s.faces) out << " " << f;
        out << " walls " << s.walls.size() << " sample";
        for (const auto& n : s.wall_sample) out << " " << n;
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Visibility filtration

enum class Visibility { VisibleAtScale, Escaping, Inconclusive };

struct VisibilityReport {
    std::vector<std::vector<std::size_t>> stages;  // nested inseparable stages
    std::vector<std::size_t> min_start;  // per stage; SIZE_MAX when unrealized
    std::size_t stages_reached = 0;      // deepest stage on a chain from stage 0
    bool full_depth = false;
    std::size_t threshold = 2;
    Visibility verdict = Visibility::Inconclusive;
};

inline VisibilityReport visibility_report(const CubeComplex& X,
                                          std::vector<std::size_t> U,
                                          std::size_t threshold = 2) {
    if (U.empty()) throw domain_error("visibility of an empty wall set");
    for (std::size_t u : U) X.check_wall(u);
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    bdetail::SideTable S(X);
    if (bdetail::closure(S, U) != U)
        throw domain_error("visibility needs an inseparable wall set");

    const Bitvec& base = X.basepoint();
    // walls ordered by carrier distance from the basepoint, then index
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t u : U) {
        std::size_t d = SIZE_MAX;
        for (const auto& v : X.vertices())
            if (in_carrier(X, u, v)) d = std::min(d, base.hamming(v));
        order.emplace_back(d, u);
    }
    std::sort(order.begin(), order.end());

    VisibilityReport rep;
    rep.threshold = threshold;
    std::vector<std::size_t> taken;
    for (const auto& [d, u] : order) {
        (void)d;
        taken.push_back(u);
        std::vector<std::size_t> sorted = taken;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> stage = bdetail::closure(S, sorted);
        if (rep.stages.empty() || stage != rep.stages.back())
            rep.stages.push_back(std::move(stage));
    }

    // Stage segments: vertex pairs (v, v + stage mask) both in X; every
    // geodesic between them crosses exactly the stage walls.
    const std::size_t m = X.wall_count();
    std::vector<std::vector<Bitvec>> starts(rep.stages.size());
    for (std::size_t s = 0; s < rep.stages.size(); ++s) {
        Bitvec mask(m);
        for (std::size_t w : rep.stages[s]) mask.set(w, true);
        std::size_t best = SIZE_MAX;
        for (const auto& v : X.vertices()) {
            Bitvec other = v;
            for (std::size_t w : rep.stages[s]) other.flip(w);
            if (!X.contains(other)) continue;
            starts[s].push_back(v);
            best = std::min(best, std::min(base.hamming(v), base.hamming(other)));
        }
        rep.min_start.push_back(best);
    }

    auto between = [&](const Bitvec& p, const Bitvec& q, const Bitvec& x) {
        for (std::size_t w = 0; w < m; ++w)
            if (x.get(w) != p.get(w) && x.get(w) != q.get(w)) return false;
        return true;
    };

    std::vector<std::vector<char>> reach(rep.stages.size());
    for (std::size_t s = 0; s < rep.stages.size(); ++s)
        reach[s].assign(starts[s].size(), s == 0 ? 1 : 0);
    rep.stages_reached = starts[0].empty() ? 0 : 1;
    for (std::size_t s = 0; s + 1 < rep.stages.size(); ++s) {
        bool any = false;
        for (std::size_t j = 0; j < starts[s + 1].size(); ++j) {
            Bitvec big_a = starts[s + 1][j], big_b = big_a;
            for (std::size_t w : rep.stages[s + 1]) big_b.flip(w);
            for (std::size_t i = 0; i < starts[s].size() && !reach[s + 1][j]; ++i) {
                if (!reach[s][i]) continue;
                Bitvec small_a = starts[s][i], small_b = small_a;
                for (std::size_t w : rep.stages[s]) small_b.flip(w);
                if (between(big_a, big_b, small_a) && between(big_a, big_b, small_b))
                    reach[s + 1][j] = 1;
            }
            any = any || reach[s + 1][j];
        }
        if (!any) break;
        rep.stages_reached = s + 2;
    }
    rep.full_depth = rep.stages_reached == rep.stages.size();

    if (rep.full_depth && !rep.min_start.empty() &&
        rep.min_start.back() <= threshold) {
        rep.verdict = Visibility::VisibleAtScale;
    } else {
        bool escaping = rep.stages.size() > threshold + 1;
        for (std::size_t s = threshold; escaping && s + 1 < rep.stages.size(); ++s)
            if (rep.min_start[s + 1] <= rep.min_start[s]) escaping = false;
        rep.verdict = escaping ? Visibility::Escaping : Visibility::Inconclusive;
    }
    return rep;
}

inline VisibilityReport visibility_report(const TruncationSystem& ts,
                                          const std::vector<std::size_t>& U,
                                          std::size_t r, std::size_t threshold = 2) {
    return visibility_report(ts.level(r), U, threshold);
}

// ---------------------------------------------------------------------------
// Ray trichotomy measurements

struct TrichotomyReport {
    double qi_estimate = 1.0;  // min over i<j of (contact distance + 1)/|i-j|
    std::size_t p = 0;         // largest complete bipartite crossing pattern
    bool p_exact = true;       // exhaustive up to 6; greedy beyond
    std::vector<std::pair<std::size_t, std::size_t>> dwell;  // (R, max edges)
};

inline TrichotomyReport trichotomy_report(const CubeComplex& X, const Path& P,
                                          const std::vector<std::size_t>& R_range,
                                          std::size_t p_cap = 6) {
    if (!is_geodesic(X, P)) throw domain_error("trichotomy needs a geodesic");
    TrichotomyReport rep;
    std::vector<std::size_t> walls = path_walls(P);
    const std::size_t n = walls.size();

    if (n >= 2) {
        HypGraph C = contact_graph(X);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            auto dist = C.bfs(walls[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!dist[walls[j]]) continue;
                double ratio = (static_cast<double>(*dist[walls[j]]) + 1.0) /
                               static_cast<double>(j - i);
                best = std::min(best, ratio);
            }
        }
        if (best < std::numeric_limits<double>::infinity()) rep.qi_estimate = best;
    }

    // crossing adjacency among the path's walls
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = crosses(X, walls[i], walls[j]) ? 1 : 0;

    const std::size_t exact_cap = std::min<std::size_t>(p_cap, 6);
    auto common_count = [&](const std::vector<char>& common) {
        std::size_t c = 0;
        for (char b : common) c += b != 0;
        return c;
    };
    std::function<bool(std::size_t, std::size_t, std::size_t, const std::vector<char>&)>
        search = [&](std::size_t start, std::size_t depth, std::size_t p,
                     const std::vector<char>& common) -> bool {
        if (depth == p) return common_count(common) >= p;
        for (std::size_t i = start; i + (p - depth) <= n; ++i) {
            std::vector<char> next(n, 0);
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < n; ++j) {
                next[j] = common[j] && adj[i][j];
                cnt += next[j] != 0;
            }
            if (cnt < p) continue;
            if (search(i + 1, depth + 1, p, next)) return true;
        }
        return false;
    };
    for (std::size_t p = std::min(exact_cap, n); p >= 1; --p) {
        std::vector<char> all(n, 1);
        if (search(0, 0, p, all)) {
            rep.p = p;
            break;
        }
        if (p == 1) break;
    }
    if (p_cap > 6) {
        // greedy lower bound past the exhaustive cap
        std::vector<std::size_t> by_degree(n);
        for (std::size_t i = 0; i < n; ++i) by_degree[i] = i;
        std::sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
            std::size_t da = 0, db = 0;
            for (std::size_t j = 0; j < n; ++j) {
                da += adj[a][j];
                db += adj[b][j];
            }
            return da > db;
        });
        std::vector<char> common(n, 1);
        std::size_t greedy = 0;
        for (std::size_t i : by_degree) {
            std::vector<char> next(n, 0);
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < n; ++j) {
                next[j] = common[j] && adj[i][j];
                cnt += next[j] != 0;
            }
            if (cnt < greedy + 1) continue;
            common = next;
            ++greedy;
            if (greedy >= p_cap) break;
        }
        if (greedy > rep.p) {
            rep.p = std::min(greedy, p_cap);
            rep.p_exact = false;
        } else if (rep.p == 6) {
            rep.p_exact = false;  // exhaustive cap reached; larger may exist
        }
    }

    // max dwell of the path inside radius-R neighborhoods of wall carriers
    const std::size_t m = X.wall_count();
    std::vector<std::vector<const Bitvec*>> carriers(m);
    for (const auto& v : X.vertices())
        for (std::size_t w = 0; w < m; ++w)
            if (in_carrier(X, w, v)) carriers[w].push_back(&v);
    std::vector<std::vector<std::size_t>> to_carrier(m);
    for (std::size_t w = 0; w < m; ++w) {
        to_carrier[w].resize(P.size(), SIZE_MAX);
        for (std::size_t i = 0; i < P.size(); ++i)
            for (const Bitvec* c : carriers[w])
                to_carrier[w][i] = std::min(to_carrier[w][i], P[i].hamming(*c));
    }
    for (std::size_t R : R_range) {
        std::size_t best = 0;
        for (std::size_t w = 0; w < m; ++w) {
            std::size_t run = 0, best_run = 0;
            for (std::size_t i = 0; i < P.size(); ++i) {
                if (to_carrier[w][i] <= R) {
                    ++run;
                    best_run = std::max(best_run, run);
                } else {
                    run = 0;
                }
            }
            if (best_run > 0) best = std::max(best, best_run - 1);
        }
        rep.dwell.emplace_back(R, best);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Witness subcomplexes

struct EighthFlatWitness {
    bool ok = false;
    std::size_t fail_index = 0;
    std::string reason;  // empty on success
    std::vector<std::size_t> gate_dist;  // distance from the path to its gates
    Path top, bottom;
    std::vector<Bitvec> verts;  // union of the strips
    std::size_t max_gate_dist = 0;
    bool has_square = false;
    std::string label;  // "bounded-f" when the strip union stays thin
};

inline EighthFlatWitness eighth_flat_witness(const CubeComplex& X, const Path& P,
                                             std::size_t h0) {
    X.check_wall(h0);
    if (P.size() < 2 || !is_geodesic(X, P))
        throw domain_error("witness needs a geodesic of positive length");
    if (path_walls(P).front() != h0)
        throw domain_error("the named wall must be dual to the path's first edge");

    EighthFlatWitness rep;
    rep.top = P;
    ConvexSubcomplex N = carrier(X, h0);

    std::vector<Bitvec> gates;
    for (const auto& v : P) {
        Bitvec g = gate(X, v, N);
        gates.push_back(g);
        rep.gate_dist.push_back(v.hamming(g));
    }
    for (std::size_t i = 1; i < rep.gate_dist.size(); ++i)
        if (rep.gate_dist[i] < rep.gate_dist[i - 1]) {
            rep.fail_index = i;
            rep.reason = "gate distance decreases";
            return rep;
        }

    std::set<Bitvec> E;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (const auto& v : interval(X, P[i], gates[i])) E.insert(v);
    for (std::size_t i = 0; i + 1 < P.size(); ++i)
        for (const auto& v : interval(X, P[i + 1], gates[i])) E.insert(v);
    rep.verts.assign(E.begin(), E.end());

    // isometric embedding of the strip union
    std::map<Bitvec, std::size_t> idx;
    for (std::size_t i = 0; i < rep.verts.size(); ++i) idx[rep.verts[i]] = i;
    const std::size_t m = X.wall_count();
    for (std::size_t src = 0; src < rep.verts.size(); ++src) {
        std::vector<std::size_t> dist(rep.verts.size(), SIZE_MAX);
        std::deque<std::size_t> q{src};
        dist[src] = 0;
        while (!q.empty()) {
            std::size_t a = q.front();
            q.pop_front();
            for (std::size_t w = 0; w < m; ++w) {
                auto it = idx.find(rep.verts[a].with_flipped(w));
                if (it == idx.end() || dist[it->second] != SIZE_MAX) continue;
                dist[it->second] = dist[a] + 1;
                q.push_back(it->second);
            }
        }
        for (std::size_t b = 0; b < rep.verts.size(); ++b)
            if (dist[b] != rep.verts[src].hamming(rep.verts[b])) {
                rep.fail_index = src;
                rep.reason = "strip union is not isometrically embedded";
                return rep;
            }
    }

    rep.bottom.push_back(gates.front());
    for (std::size_t i = 1; i < gates.size(); ++i) {
        if (gates[i] == rep.bottom.back()) continue;
        if (gates[i].hamming(rep.bottom.back()) > 1) {
            Path fill = bfs_geodesic(X, rep.bottom.back(), gates[i]);
            for (std::size_t j = 1; j < fill.size(); ++j) rep.bottom.push_back(fill[j]);
        } else {
            rep.bottom.push_back(gates[i]);
        }
    }

    for (std::size_t z : rep.gate_dist) rep.max_gate_dist = std::max(rep.max_gate_dist, z);
    for (const auto& v : rep.verts) {
        for (std::size_t i = 0; i < m && !rep.has_square; ++i) {
            if (!E.count(v.with_flipped(i))) continue;
            for (std::size_t j = i + 1; j < m; ++j)
                if (E.count(v.with_flipped(j)) &&
                    E.count(v.with_flipped(i).with_flipped(j))) {
                    rep.has_square = true;
                    break;
                }
        }
        if (rep.has_square) break;
    }
    rep.ok = true;
    if (rep.max_gate_dist <= 2 || !rep.has_square) rep.label = "bounded-f";
    return rep;
}

struct OrthantWitness {
    bool ok = false;
    std::string reason;  // empty on success
    std::pair<std::size_t, std::size_t> witness{0, 0};  // offending ray pair
    std::vector<std::size_t> dims;                      // ray lengths
    std::vector<Bitvec> grid;  // product subcomplex vertices
};

inline OrthantWitness orthant_witness(const CubeComplex& X,
                                      const std::vector<Path>& rays) {
    if (rays.size() < 2) throw domain_error("orthant witness needs at least two rays");
    for (const auto& r : rays) {
        if (r.size() < 2 || !is_geodesic(X, r))
            throw domain_error("each ray must be a geodesic of positive length");
        if (!(r.front() == rays.front().front()))
            throw domain_error("rays must share their start vertex");
    }

    OrthantWitness rep;
    std::vector<std::vector<std::size_t>> W;
    for (const auto& r : rays) {
        W.push_back(path_walls(r));
        rep.dims.push_back(r.size() - 1);
    }
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            for (std::size_t a : W[i])
                for (std::size_t b : W[j]) {
                    if (a == b) {
                        rep.reason = "rays share a wall";
                        rep.witness = {i, j};
                        return rep;
                    }
                    if (!crosses(X, a, b)) {
                        rep.reason = "walls of distinct rays fail to cross";
                        rep.witness = {i, j};
                        return rep;
                    }
                }
        }

    // All grid corners: the start vertex with any combination of ray
    // prefixes applied.  Hamming additivity makes the embedding isometric
    // once every corner exists.
    std::vector<std::size_t> t(rays.size(), 0);
    for (;;) {
        Bitvec v = rays.front().front();
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t k = 0; k < t[i]; ++k) v.flip(W[i][k]);
        if (!X.contains(v)) {
            rep.reason = "product vertex missing from the complex";
            return rep;
        }
        rep.grid.push_back(v);
        std::size_t i = 0;
        while (i < t.size() && t[i] == rep.dims[i]) t[i++] = 0;
        if (i == t.size()) break;
        ++t[i];
    }
    std::sort(rep.grid.begin(), rep.grid.end());
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Boundary of a convex subcomplex

struct SubboundaryReport {
    BoundaryComplexApprox sub, full;
    std::vector<std::size_t> class_map;  // sub 0-class id -> full 0-class id
    bool injective = false;
    bool dimension_preserving = false;
};

inline SubboundaryReport boundary_of_subcomplex(
    const TruncationSystem& ts,
    const std::function<ConvexSubcomplex(const CubeComplex&)>& select,
    const std::vector<std::size_t>& radii, std::size_t theta = 2,
    std::size_t window = 3) {
    SubboundaryReport rep;
    rep.full = boundary_complex(ts, radii, theta, window);

    std::map<std::size_t, CubeComplex> sublevels;
    std::map<std::size_t, std::vector<std::size_t>> active_of;
    for (std::size_t r : radii) {
        const CubeComplex& X = ts.level(r);
        ConvexSubcomplex Y = select(X);
        if (Y.verts.empty()) throw domain_error("subcomplex has no vertices");
        if (!(convex_hull(X, Y.verts).verts == Y.verts))
            throw domain_error("subcomplex is not convex");
        std::vector<std::size_t> active = walls_of(X.wall_count(), Y.verts);
        std::vector<Bitvec> proj;
        for (const auto& v : Y.verts) {
            Bitvec b(active.size());
            for (std::size_t k = 0; k < active.size(); ++k)
                b.set(k, v.get(active[k]));
            proj.push_back(b);
        }
        std::vector<std::string> names;
        for (std::size_t w : active) names.push_back(X.wall_name(w));
        sublevels.emplace(r, CubeComplex(active.size(), std::move(proj), std::move(names)));
        active_of.emplace(r, std::move(active));
    }
    rep.sub = bdetail::boundary_core(
        [&sublevels](std::size_t r) { return sublevels.at(r); }, radii, theta, window);

    // map sub classes to full classes through top-level wall indices
    const auto& top_active = active_of.at(radii.back());
    auto full_zero = rep.full.ids_of_dim(0);
    for (std::size_t sid : rep.sub.ids_of_dim(0)) {
        std::vector<std::size_t> lifted;
        for (std::size_t w : rep.sub.simplices[sid].walls)
            lifted.push_back(top_active[w]);
        std::sort(lifted.begin(), lifted.end());
        std::size_t best = SIZE_MAX, best_d = SIZE_MAX;
        for (std::size_t fid : full_zero) {
            std::size_t d =
                bdetail::symdiff(lifted, rep.full.simplices[fid].walls).size();
            if (d < best_d) {
                best_d = d;
                best = fid;
            }
        }
        if (best == SIZE_MAX) throw domain_error("no target class for a subcomplex class");
        rep.class_map.push_back(best);
    }
    std::vector<std::size_t> targets = rep.class_map;
    std::sort(targets.begin(), targets.end());
    rep.injective =
        std::adjacent_find(targets.begin(), targets.end()) == targets.end();

    rep.dimension_preserving = true;
    for (const auto& s : rep.sub.simplices) {
        std::vector<std::size_t> image;
        for (std::size_t v : s.vertices) image.push_back(rep.class_map[v]);
        std::sort(image.begin(), image.end());
        bool found = false;
        for (const auto& f : rep.full.simplices)
            if (f.dim == s.dim && f.vertices == image) {
                found = true;
                break;
            }
        if (!found) {
            rep.dimension_preserving = false;
            break;
        }
    }
    return rep;
}

} // namespace cubix
