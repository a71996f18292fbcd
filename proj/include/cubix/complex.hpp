#pragma once

// Cube complexes stored as median graphs in the halfspace hypercube:
// a complex is its set of vertex bitvectors (one bit per wall).  Also the
// wallspace dual construction, restriction quotients, products and wedges.

#include "cubix/bitvec.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cubix {

// Thrown when an operation's precondition on the mathematical objects fails.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CubeComplex {
public:
    CubeComplex() = default;
    CubeComplex(std::size_t wall_count, std::vector<Bitvec> vertices,
                std::vector<std::string> wall_names = {})
        : m_(wall_count), verts_(std::move(vertices)), wall_names_(std::move(wall_names)) {
        std::sort(verts_.begin(), verts_.end());
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
        index_.reserve(verts_.size() * 2);
        for (std::uint32_t i = 0; i < verts_.size(); ++i) index_.emplace(verts_[i], i);
        if (!wall_names_.empty() && wall_names_.size() != m_)
            throw std::invalid_argument("wall name count mismatch");
    }

    std::size_t wall_count() const { return m_; }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Bitvec>& vertices() const { return verts_; }
    const Bitvec& vertex(std::size_t i) const { return verts_[i]; }

    bool contains(const Bitvec& v) const { return index_.count(v) != 0; }
    std::uint32_t index_of(const Bitvec& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw domain_error("vertex not in complex");
        return it->second;
    }
    std::optional<std::uint32_t> find(const Bitvec& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Basepoint defaults to the lexicographically least vertex.
    const Bitvec& basepoint() const { return verts_.at(basepoint_); }
    void set_basepoint(const Bitvec& v) { basepoint_ = index_of(v); }

    std::string wall_name(std::size_t i) const {
        if (i >= m_) throw domain_error("wall index out of range");
        if (i < wall_names_.size()) return wall_names_[i];
        return "w" + std::to_string(i);
    }
    const std::vector<std::string>& wall_names() const { return wall_names_; }
    // Index of a wall by name; also accepts the default "w<i>" form or a number.
    std::size_t wall_index(const std::string& name) const {
        for (std::size_t i = 0; i < wall_names_.size(); ++i)
            if (wall_names_[i] == name) return i;
        std::string digits = name;
        if (!digits.empty() && digits[0] == 'w') digits = digits.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            std::size_t i = std::stoul(digits);
            if (i < m_) return i;
        }
        throw domain_error("unknown wall: " + name);
    }

    void check_wall(std::size_t i) const {
        if (i >= m_) throw domain_error("wall index out of range");
    }

    // Neighbours of v in the Hamming-1 adjacency, in wall-index order.
    template <typename F>
    void for_each_neighbor(const Bitvec& v, F&& f) const {
        for (std::size_t i = 0; i < m_; ++i) {
            Bitvec w = v.with_flipped(i);
            if (contains(w)) f(i, w);
        }
    }

    std::size_t distance(const Bitvec& x, const Bitvec& y) const { return x.hamming(y); }

private:
    std::size_t m_ = 0;
    std::vector<Bitvec> verts_;
    std::unordered_map<Bitvec, std::uint32_t, BitvecHash> index_;
    std::vector<std::string> wall_names_;
    std::uint32_t basepoint_ = 0;
};

// ---------------------------------------------------------------------------
// Wallspace

struct Wallspace {
    std::vector<std::string> points;
    std::vector<std::string> wall_names;
    // halfspaces[w] = the designated `h` side of wall w as a point bitset
    // (bit p set means point p lies in h).
    std::vector<Bitvec> halfspaces;

    std::size_t point_index(const std::string& p) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == p) return i;
        throw domain_error("unknown point: " + p);
    }
};

// ---------------------------------------------------------------------------
// Validation

struct CheckResult {
    bool pass = true;
    std::string witness;  // human-readable witness on failure
};

struct ValidationReport {
    CheckResult nonempty, connected, median_closed, isometric, walls_nondegenerate;
    // "exhaustive" or "sampled" — large vertex sets are spot-checked for the
    // cubic/quadratic invariants with a deterministic sample.
    std::string method = "exhaustive";
    bool all_pass() const {
        return nonempty.pass && connected.pass && median_closed.pass &&
               isometric.pass && walls_nondegenerate.pass;
    }
};

namespace detail {
// Deterministic splitmix64 stream for sampling decisions.
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

inline ValidationReport validate(std::size_t wall_count, const std::vector<Bitvec>& vertex_list) {
    ValidationReport rep;
    CubeComplex X(wall_count, vertex_list);
    const auto& V = X.vertices();
    const std::size_t n = V.size();

    if (n == 0) {
        rep.nonempty = {false, "vertex set is empty"};
        return rep;
    }

    // Walls nondegenerate: both bit values occur for every wall.
    for (std::size_t i = 0; i < wall_count && rep.walls_nondegenerate.pass; ++i) {
        bool seen0 = false, seen1 = false;
        for (const auto& v : V) (v.get(i) ? seen1 : seen0) = true;
        if (!(seen0 && seen1))
            rep.walls_nondegenerate = {false, "wall " + std::to_string(i) +
                                              " has only one bit value"};
    }

    // Connectivity under Hamming-1 adjacency.
    {
        std::vector<char> seen(n, 0);
        std::deque<std::uint32_t> q{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            X.for_each_neighbor(V[u], [&](std::size_t, const Bitvec& w) {
                std::uint32_t j = X.index_of(w);
                if (!seen[j]) { seen[j] = 1; ++reached; q.push_back(j); }
            });
        }
        if (reached != n) {
            std::size_t stray = 0;
            while (seen[stray]) ++stray;
            rep.connected = {false, "vertex " + V[stray].to_string() +
                                    " unreachable from " + V[0].to_string()};
        }
    }

    const bool exhaustive = n <= 400;
    rep.method = exhaustive ? "exhaustive" : "sampled";

    // Median closure: coordinatewise majority of every triple is a vertex.
    {
        auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) -> bool {
            Bitvec med = Bitvec::majority(V[a], V[b], V[c]);
            if (!X.contains(med)) {
                rep.median_closed = {false, "m(" + V[a].to_string() + "," + V[b].to_string() +
                                           "," + V[c].to_string() + ")=" + med.to_string() +
                                           " absent"};
                return false;
            }
            return true;
        };
        if (exhaustive) {
            for (std::size_t a = 0; a < n && rep.median_closed.pass; ++a)
                for (std::size_t b = a + 1; b < n && rep.median_closed.pass; ++b)
                    for (std::size_t c = b + 1; c < n; ++c)
                        if (!check_triple(a, b, c)) break;
        } else {
            std::uint64_t s = 0x5eedc0de;
            for (std::size_t t = 0; t < 2'000'000 && rep.median_closed.pass; ++t) {
                std::size_t a = detail::splitmix64(s) % n;
                std::size_t b = detail::splitmix64(s) % n;
                std::size_t c = detail::splitmix64(s) % n;
                check_triple(a, b, c);
            }
        }
    }

    // Isometry: graph distance equals Hamming distance.  BFS per source.
    if (rep.connected.pass) {
        auto check_source = [&](std::size_t src) -> bool {
            std::vector<std::uint32_t> dist(n, UINT32_MAX);
            std::deque<std::uint32_t> q{static_cast<std::uint32_t>(src)};
            dist[src] = 0;
            while (!q.empty()) {
                std::uint32_t u = q.front();
                q.pop_front();
                X.for_each_neighbor(V[u], [&](std::size_t, const Bitvec& w) {
                    std::uint32_t j = X.index_of(w);
                    if (dist[j] == UINT32_MAX) { dist[j] = dist[u] + 1; q.push_back(j); }
                });
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (dist[j] != V[src].hamming(V[j])) {
                    rep.isometric = {false, "d(" + V[src].to_string() + "," + V[j].to_string() +
                                            ")=" + std::to_string(dist[j]) + " but Hamming=" +
                                            std::to_string(V[src].hamming(V[j]))};
                    return false;
                }
            }
            return true;
        };
        if (exhaustive) {
            for (std::size_t s = 0; s < n && rep.isometric.pass; ++s) check_source(s);
        } else {
            std::uint64_t s = 0xba5eba11;
            for (std::size_t t = 0; t < 64 && rep.isometric.pass; ++t)
                check_source(detail::splitmix64(s) % n);
        }
    }

    return rep;
}

inline ValidationReport validate(const CubeComplex& X) {
    return validate(X.wall_count(), X.vertices());
}

// ---------------------------------------------------------------------------
// Sageev dual

// All consistent orientations of a finite wallspace, by backtracking with
// pairwise-consistency pruning.  An orientation picks h (bit 0) or h* (bit 1)
// per wall; it is consistent when every two chosen halfspaces share a point.
inline CubeComplex dual_complex(const Wallspace& ws) {
    const std::size_t m = ws.halfspaces.size();
    const std::size_t p = ws.points.size();
    Bitvec all(p);
    for (std::size_t i = 0; i < p; ++i) all.set(i, true);

    // side[w][b] = point set of the halfspace selected by bit b of wall w.
    std::vector<std::array<std::vector<std::uint64_t>, 2>> side;  // packed words
    auto words_of = [&](const Bitvec& b) {
        std::vector<std::uint64_t> w((p + 63) / 64, 0);
        for (std::size_t i = 0; i < p; ++i)
            if (b.get(i)) w[i >> 6] |= std::uint64_t{1} << (i & 63);
        return w;
    };
    auto intersects = [](const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b) {
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & b[w]) return true;
        return false;
    };
    side.reserve(m);
    for (std::size_t w = 0; w < m; ++w) {
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < p; ++i)
            if (ws.halfspaces[w].get(i)) ++cnt;
        if (cnt == 0 || cnt == p)
            throw domain_error("wall " + std::to_string(w) + " has an empty or full side");
        Bitvec hs = ws.halfspaces[w];
        Bitvec co(p);
        for (std::size_t i = 0; i < p; ++i) co.set(i, !hs.get(i));
        side.push_back({words_of(hs), words_of(co)});
    }

    std::vector<Bitvec> out;
    Bitvec cur(m);
    // Depth-first over walls; prune a bit choice as soon as it conflicts with
    // an earlier choice.
    auto rec = [&](auto&& self, std::size_t w) -> void {
        if (w == m) { out.push_back(cur); return; }
        for (int b = 0; b < 2; ++b) {
            bool ok = true;
            for (std::size_t u = 0; u < w && ok; ++u)
                ok = intersects(side[u][cur.get(u)], side[w][b]);
            if (ok) {
                cur.set(w, b);
                self(self, w + 1);
            }
        }
        cur.set(w, false);
    };
    rec(rec, 0);
    return CubeComplex(m, std::move(out), ws.wall_names);
}

// Canonical orientation of a wallspace point: bit w is 0 iff the point lies
// in the designated h side of wall w.
inline Bitvec canonical_orientation(const Wallspace& ws, std::size_t point) {
    Bitvec o(ws.halfspaces.size());
    for (std::size_t w = 0; w < ws.halfspaces.size(); ++w)
        o.set(w, !ws.halfspaces[w].get(point));
    return o;
}

// The wallspace of a complex: points = vertices, one wall per wall index with
// h = the bit-0 side.
inline Wallspace wallspace_of(const CubeComplex& X) {
    Wallspace ws;
    ws.points.reserve(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        ws.points.push_back(X.vertex(i).to_string());
    for (std::size_t w = 0; w < X.wall_count(); ++w) {
        Bitvec h(X.size());
        for (std::size_t i = 0; i < X.size(); ++i)
            h.set(i, !X.vertex(i).get(w));
        ws.halfspaces.push_back(h);
        ws.wall_names.push_back(X.wall_name(w));
    }
    return ws;
}

// ---------------------------------------------------------------------------
// Wall maps and derived complexes

// Injective partial map of wall indices from a source to a target complex.
struct WallMap {
    std::vector<int> to_target;  // indexed by source wall; -1 when unmapped
    std::optional<std::size_t> operator()(std::size_t src) const {
        if (src >= to_target.size() || to_target[src] < 0) return std::nullopt;
        return static_cast<std::size_t>(to_target[src]);
    }
};

// Projection of X's vertices to the wall subset V (in the given order),
// deduplicated.  Walls keep their relative order from V.
inline std::pair<CubeComplex, WallMap>
restriction_quotient(const CubeComplex& X, const std::vector<std::size_t>& V) {
    if (V.empty()) throw domain_error("restriction quotient needs a nonempty wall set");
    for (std::size_t w : V) X.check_wall(w);
    std::vector<Bitvec> proj;
    proj.reserve(X.size());
    for (const auto& v : X.vertices()) {
        Bitvec q(V.size());
        for (std::size_t j = 0; j < V.size(); ++j) q.set(j, v.get(V[j]));
        proj.push_back(q);
    }
    std::vector<std::string> names;
    for (std::size_t w : V) names.push_back(X.wall_name(w));
    WallMap wm;
    wm.to_target.assign(X.wall_count(), -1);
    for (std::size_t j = 0; j < V.size(); ++j) wm.to_target[V[j]] = static_cast<int>(j);
    return {CubeComplex(V.size(), std::move(proj), std::move(names)), std::move(wm)};
}

// Product: walls are the disjoint union, vertices all concatenations.
inline std::tuple<CubeComplex, WallMap, WallMap>
product(const CubeComplex& X, const CubeComplex& Y) {
    const std::size_t mx = X.wall_count(), my = Y.wall_count();
    std::vector<Bitvec> verts;
    verts.reserve(X.size() * Y.size());
    for (const auto& x : X.vertices())
        for (const auto& y : Y.vertices()) {
            Bitvec v(mx + my);
            for (std::size_t i = 0; i < mx; ++i) v.set(i, x.get(i));
            for (std::size_t j = 0; j < my; ++j) v.set(mx + j, y.get(j));
            verts.push_back(v);
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < mx; ++i) names.push_back("L." + X.wall_name(i));
    for (std::size_t j = 0; j < my; ++j) names.push_back("R." + Y.wall_name(j));
    WallMap fx, fy;
    fx.to_target.resize(mx);
    for (std::size_t i = 0; i < mx; ++i) fx.to_target[i] = static_cast<int>(i);
    fy.to_target.resize(my);
    for (std::size_t j = 0; j < my; ++j) fy.to_target[j] = static_cast<int>(mx + j);
    return {CubeComplex(mx + my, std::move(verts), std::move(names)), std::move(fx),
            std::move(fy)};
}

// Wedge of X and Y along the identified vertices x, y: walls are the disjoint
// union; each piece keeps the other frozen at the glue vertex.
inline CubeComplex wedge(const CubeComplex& X, const Bitvec& x,
                         const CubeComplex& Y, const Bitvec& y) {
    if (!X.contains(x) || !Y.contains(y)) throw domain_error("wedge point not a vertex");
    const std::size_t mx = X.wall_count(), my = Y.wall_count();
    auto concat = [&](const Bitvec& a, const Bitvec& b) {
        Bitvec v(mx + my);
        for (std::size_t i = 0; i < mx; ++i) v.set(i, a.get(i));
        for (std::size_t j = 0; j < my; ++j) v.set(mx + j, b.get(j));
        return v;
    };
    std::vector<Bitvec> verts;
    for (const auto& a : X.vertices()) verts.push_back(concat(a, y));
    for (const auto& b : Y.vertices()) verts.push_back(concat(x, b));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < mx; ++i) names.push_back("L." + X.wall_name(i));
    for (std::size_t j = 0; j < my; ++j) names.push_back("R." + Y.wall_name(j));
    return CubeComplex(mx + my, std::move(verts), std::move(names));
}

// ---------------------------------------------------------------------------
// Orientation classification

enum class OrientationClass { Vertex, ConsistentAtInfinity, Inconsistent };

struct OrientationReport {
    OrientationClass cls;
    // Witness wall pair for an inconsistent orientation.
    std::pair<std::size_t, std::size_t> witness{0, 0};
};

// Classifies o against X's vertex set: a vertex; consistent (every pair of
// chosen halfspaces shares a vertex of X) but absent; or inconsistent.
inline OrientationReport is_consistent_orientation(const CubeComplex& X, const Bitvec& o) {
    if (o.size() != X.wall_count()) throw domain_error("orientation length mismatch");
    if (X.contains(o)) return {OrientationClass::Vertex};
    const std::size_t m = X.wall_count();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool met = false;
            for (const auto& v : X.vertices())
                if (v.get(i) == o.get(i) && v.get(j) == o.get(j)) { met = true; break; }
            if (!met) return {OrientationClass::Inconsistent, {i, j}};
        }
    return {OrientationClass::ConsistentAtInfinity};
}

} // namespace cubix
