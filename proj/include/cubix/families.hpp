#pragma once

// Generators for the example families as truncation systems: increasing
// sequences X_1 ⊆ X_2 ⊆ … of cube complexes with stable wall indices, where
// the level-r vertex set embeds into level r+1 by zero padding.  Each family
// also exposes named canonical geodesic rays from the basepoint.

#include "cubix/geodesics.hpp"
#include "cubix/io.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <tuple>

namespace cubix {

struct FamilySpec {
    enum class Kind {
        Orthant,
        Flat,
        Strip,
        EighthFlat,
        DiagonalQuarterFlat,
        HalfFlat,
        Tree,
        Spiral,
        Product,
        Wedge
    };

    Kind kind = Kind::Flat;
    std::size_t dim = 2;           // orthant
    std::size_t height = 1;        // strip
    bool diagonal = false;         // half_flat
    std::vector<long> f1, f2;      // profile lists (eighth/quarter/half flats)
    std::size_t degree = 3;        // tree
    std::size_t stages = 1;        // spiral
    std::shared_ptr<FamilySpec> left, right;  // product / wedge
    std::string glue_left, glue_right;        // wedge points (bit strings; empty = basepoint)

    static FamilySpec orthant(std::size_t d) {
        FamilySpec s;
        s.kind = Kind::Orthant;
        s.dim = d;
        return s;
    }
    static FamilySpec flat() {
        FamilySpec s;
        s.kind = Kind::Flat;
        return s;
    }
    static FamilySpec strip(std::size_t h) {
        FamilySpec s;
        s.kind = Kind::Strip;
        s.height = h;
        return s;
    }
    static FamilySpec eighth_flat(std::vector<long> f) {
        FamilySpec s;
        s.kind = Kind::EighthFlat;
        s.f1 = std::move(f);
        return s;
    }
    static FamilySpec diagonal_quarter_flat(std::vector<long> fa, std::vector<long> fb) {
        FamilySpec s;
        s.kind = Kind::DiagonalQuarterFlat;
        s.f1 = std::move(fa);
        s.f2 = std::move(fb);
        return s;
    }
    static FamilySpec half_flat(bool diag, std::vector<long> fa = {}, std::vector<long> fb = {}) {
        FamilySpec s;
        s.kind = Kind::HalfFlat;
        s.diagonal = diag;
        s.f1 = std::move(fa);
        s.f2 = std::move(fb);
        return s;
    }
    static FamilySpec tree(std::size_t deg) {
        FamilySpec s;
        s.kind = Kind::Tree;
        s.degree = deg;
        return s;
    }
    static FamilySpec spiral(std::size_t n) {
        FamilySpec s;
        s.kind = Kind::Spiral;
        s.stages = n;
        return s;
    }
    static FamilySpec product(FamilySpec a, FamilySpec b) {
        FamilySpec s;
        s.kind = Kind::Product;
        s.left = std::make_shared<FamilySpec>(std::move(a));
        s.right = std::make_shared<FamilySpec>(std::move(b));
        return s;
    }
    static FamilySpec wedge_of(FamilySpec a, std::string va, FamilySpec b, std::string vb) {
        FamilySpec s;
        s.kind = Kind::Wedge;
        s.left = std::make_shared<FamilySpec>(std::move(a));
        s.right = std::make_shared<FamilySpec>(std::move(b));
        s.glue_left = std::move(va);
        s.glue_right = std::move(vb);
        return s;
    }
};

// Profile value with affine extension: beyond the list, continue with the
// difference of the last two entries (constant for one-entry lists).
inline long profile_value(const std::vector<long>& f, std::size_t x) {
    if (f.empty()) throw domain_error("profile list must be nonempty");
    if (x < f.size()) return f[x];
    long inc = f.size() >= 2 ? f[f.size() - 1] - f[f.size() - 2] : 0;
    return f.back() + inc * static_cast<long>(x - f.size() + 1);
}

inline void check_profile(const std::vector<long>& f, const char* what) {
    if (f.empty()) throw domain_error(std::string(what) + " profile must be nonempty");
    long prev = 0;
    for (long v : f) {
        if (v < 1) throw domain_error(std::string(what) + " profile entries must be positive");
        if (v < prev) throw domain_error(std::string(what) + " profile must be nondecreasing");
        prev = v;
    }
}

inline void check_spec(const FamilySpec& s) {
    using K = FamilySpec::Kind;
    switch (s.kind) {
    case K::Orthant:
        if (s.dim < 1) throw domain_error("orthant dimension must be at least 1");
        break;
    case K::Flat:
        break;
    case K::Strip:
        if (s.height < 1) throw domain_error("strip height must be at least 1");
        break;
    case K::EighthFlat:
        check_profile(s.f1, "eighth-flat");
        break;
    case K::DiagonalQuarterFlat:
        check_profile(s.f1, "upper");
        check_profile(s.f2, "lower");
        break;
    case K::HalfFlat:
        if (s.diagonal) {
            check_profile(s.f1, "left");
            check_profile(s.f2, "right");
        }
        break;
    case K::Tree:
        if (s.degree < 2) throw domain_error("tree degree must be at least 2");
        break;
    case K::Spiral:
        if (s.stages < 1) throw domain_error("spiral needs at least one stage");
        break;
    case K::Product:
    case K::Wedge:
        if (!s.left || !s.right) throw domain_error("composite spec needs two parts");
        check_spec(*s.left);
        check_spec(*s.right);
        break;
    }
}

namespace famdetail {

using Coord = std::vector<long>;

// Half-space wall along an axis: sign > 0 reads "coord >= k", sign < 0 reads
// "coord <= -k"; bit 1 on the far side so the origin reads all zeros.
struct WallC {
    std::size_t axis;
    int sign;
    long k;
};

inline bool wall_bit(const WallC& w, const Coord& c) {
    return w.sign > 0 ? c[w.axis] >= w.k : c[w.axis] <= -w.k;
}

inline std::string wall_label(const WallC& w, std::size_t dim) {
    std::string a = dim <= 3 ? std::string(1, "xyz"[w.axis]) : "c" + std::to_string(w.axis);
    return w.sign > 0 ? a + ">=" + std::to_string(w.k) : a + "<=-" + std::to_string(w.k);
}

inline std::vector<Coord> corners_of(const std::vector<Coord>& cubes, std::size_t dim) {
    std::set<Coord> out;
    for (const auto& c : cubes)
        for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
            Coord v = c;
            for (std::size_t a = 0; a < dim; ++a)
                if ((mask >> a) & 1) ++v[a];
            out.insert(std::move(v));
        }
    return {out.begin(), out.end()};
}

struct CoordBuild {
    std::vector<Coord> verts;
    std::vector<WallC> walls;
};

// Walls are indexed in order of first (nondegenerate) appearance as the level
// grows, with a fixed candidate order inside each ring; this makes level-r
// wall lists prefixes of level-(r+1) lists.
inline CoordBuild coord_build(std::size_t dim, std::size_t r,
                              const std::function<std::vector<Coord>(std::size_t)>& cubes_at,
                              const std::vector<std::pair<std::size_t, int>>& chains) {
    CoordBuild out;
    std::set<std::tuple<std::size_t, int, long>> have;
    for (std::size_t lvl = 1; lvl <= r; ++lvl) {
        auto verts = corners_of(cubes_at(lvl), dim);
        for (long k = 1; k <= static_cast<long>(lvl); ++k)
            for (auto [axis, sign] : chains) {
                if (have.count({axis, sign, k})) continue;
                WallC w{axis, sign, k};
                bool lo = false, hi = false;
                for (const auto& v : verts) (wall_bit(w, v) ? hi : lo) = true;
                if (lo && hi) {
                    have.insert({axis, sign, k});
                    out.walls.push_back(w);
                }
            }
        if (lvl == r) out.verts = std::move(verts);
    }
    return out;
}

inline Bitvec encode(const Coord& c, const std::vector<WallC>& walls) {
    Bitvec b(walls.size());
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (wall_bit(walls[i], c)) b.set(i, true);
    return b;
}

inline CubeComplex to_complex(const CoordBuild& b, std::size_t dim) {
    std::vector<Bitvec> verts;
    verts.reserve(b.verts.size());
    for (const auto& v : b.verts) verts.push_back(encode(v, b.walls));
    std::vector<std::string> names;
    for (const auto& w : b.walls) names.push_back(wall_label(w, dim));
    return CubeComplex(b.walls.size(), std::move(verts), std::move(names));
}

} // namespace famdetail

class TruncationSystem {
public:
    explicit TruncationSystem(FamilySpec spec) : spec_(std::move(spec)) {
        check_spec(spec_);
        if (spec_.left) left_ = std::make_shared<TruncationSystem>(*spec_.left);
        if (spec_.right) right_ = std::make_shared<TruncationSystem>(*spec_.right);
    }

    const FamilySpec& spec() const { return spec_; }

    const CubeComplex& level(std::size_t r) const {
        if (r < 1) throw domain_error("truncation level must be at least 1");
        auto it = cache_.find(r);
        if (it == cache_.end()) it = cache_.emplace(r, build(r)).first;
        return it->second.X;
    }

    std::string metadata() const {
        using K = FamilySpec::Kind;
        std::ostringstream out;
        switch (spec_.kind) {
        case K::EighthFlat:
        case K::DiagonalQuarterFlat:
            out << "profiles extend affinely beyond their lists";
            break;
        case K::HalfFlat:
            out << (spec_.diagonal ? "diagonal half-flat; profiles extend affinely"
                                   : "non-diagonal half-flat");
            break;
        case K::Spiral:
            out << "single-sided spiral; each stage glues along the previous outer "
                   "ray starting at its second vertex";
            break;
        default:
            out << "";
            break;
        }
        return out.str();
    }

    // Encode family coordinates as a level-r vertex (coordinate kinds only).
    Bitvec encode(const famdetail::Coord& c, std::size_t r) const {
        const auto& lvl = data(r);
        if (lvl.walls.empty() && !lvl.encoder)
            throw domain_error("family has no coordinate chart");
        if (lvl.encoder) return lvl.encoder(c);
        return famdetail::encode(c, lvl.walls);
    }

    friend Path canonical_ray(const TruncationSystem& ts, const std::string& name,
                              std::size_t r);

private:
    struct LevelData {
        CubeComplex X;
        std::vector<famdetail::WallC> walls;            // coordinate kinds
        std::function<Bitvec(const famdetail::Coord&)> encoder;  // others
    };

    const LevelData& data(std::size_t r) const {
        level(r);
        return cache_.at(r);
    }

    LevelData build(std::size_t r) const {
        using K = FamilySpec::Kind;
        switch (spec_.kind) {
        case K::Orthant: return build_orthant(r);
        case K::Flat: return build_flat(r);
        case K::Strip: return build_strip(r);
        case K::EighthFlat: return build_eighth(r);
        case K::DiagonalQuarterFlat: return build_diag_quarter(r);
        case K::HalfFlat: return spec_.diagonal ? build_diag_half(r) : build_half(r);
        case K::Tree: return build_tree(r);
        case K::Spiral: return build_spiral(r);
        case K::Product: return build_product(r);
        case K::Wedge: return build_wedge(r);
        }
        throw domain_error("unknown family kind");
    }

    LevelData coord_level(std::size_t dim, std::size_t r,
                          const std::function<std::vector<famdetail::Coord>(std::size_t)>& cubes,
                          const std::vector<std::pair<std::size_t, int>>& chains) const {
        auto b = famdetail::coord_build(dim, r, cubes, chains);
        return {famdetail::to_complex(b, dim), b.walls, nullptr};
    }

    LevelData build_orthant(std::size_t r) const {
        std::size_t d = spec_.dim;
        auto cubes = [d](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            famdetail::Coord c(d, 0);
            std::function<void(std::size_t)> rec = [&](std::size_t a) {
                if (a == d) { out.push_back(c); return; }
                for (long v = 0; v < static_cast<long>(lvl); ++v) {
                    c[a] = v;
                    rec(a + 1);
                }
            };
            rec(0);
            return out;
        };
        std::vector<std::pair<std::size_t, int>> chains;
        for (std::size_t a = 0; a < d; ++a) chains.push_back({a, +1});
        return coord_level(d, r, cubes, chains);
    }

    LevelData build_flat(std::size_t r) const {
        auto cubes = [](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = -L; x < L; ++x)
                for (long y = -L; y < L; ++y) out.push_back({x, y});
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {0, -1}, {1, +1}, {1, -1}});
    }

    LevelData build_strip(std::size_t r) const {
        long h = static_cast<long>(spec_.height);
        auto cubes = [h](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = -L; x < L; ++x)
                for (long y = 0; y < std::min(h, L); ++y) out.push_back({x, y});
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {0, -1}, {1, +1}});
    }

    LevelData build_eighth(std::size_t r) const {
        auto f = spec_.f1;
        auto cubes = [f](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = 0; x < L; ++x)
                for (long y = 0; y < std::min(profile_value(f, static_cast<std::size_t>(x)), L); ++y)
                    out.push_back({x, y});
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {1, +1}});
    }

    LevelData build_diag_quarter(std::size_t r) const {
        auto fa = spec_.f1, fb = spec_.f2;
        auto cubes = [fa, fb](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = 0; x < L; ++x) {
                long up = std::min(profile_value(fa, static_cast<std::size_t>(x)), L);
                long dn = std::min(profile_value(fb, static_cast<std::size_t>(x)), L);
                for (long y = -dn; y < up; ++y) out.push_back({x, y});
            }
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {1, +1}, {1, -1}});
    }

    LevelData build_half(std::size_t r) const {
        auto cubes = [](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = -L; x < L; ++x)
                for (long y = 0; y < L; ++y) out.push_back({x, y});
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {0, -1}, {1, +1}});
    }

    // Region above a bi-infinite staircase through the origin: the staircase
    // rises to the left with profile f1 and falls to the right with f2.
    LevelData build_diag_half(std::size_t r) const {
        auto fa = spec_.f1, fb = spec_.f2;
        auto cubes = [fa, fb](std::size_t lvl) {
            std::vector<famdetail::Coord> out;
            long L = static_cast<long>(lvl);
            for (long x = -L; x < L; ++x) {
                long bottom;
                if (x >= 0)
                    bottom = -std::min(profile_value(fb, static_cast<std::size_t>(x)), L);
                else
                    bottom = std::min(profile_value(fa, static_cast<std::size_t>(-x - 1)), L);
                for (long y = bottom; y < L; ++y) out.push_back({x, y});
            }
            return out;
        };
        return coord_level(2, r, cubes, {{0, +1}, {0, -1}, {1, +1}, {1, -1}});
    }

    // Rooted tree to depth r, every vertex of the given degree; one wall per
    // edge, indexed breadth-first so deeper levels only append walls.
    LevelData build_tree(std::size_t r) const {
        std::size_t deg = spec_.degree;
        std::vector<std::vector<std::size_t>> nodes{{}};  // wall sets along root paths
        std::vector<std::size_t> frontier{0};
        std::size_t walls = 0;
        std::vector<Bitvec> dummy;
        for (std::size_t depth = 1; depth <= r; ++depth) {
            std::vector<std::size_t> next;
            for (std::size_t node : frontier) {
                std::size_t children = (depth == 1) ? deg : deg - 1;
                for (std::size_t c = 0; c < children; ++c) {
                    auto path = nodes[node];
                    path.push_back(walls++);
                    next.push_back(nodes.size());
                    nodes.push_back(std::move(path));
                }
            }
            frontier = std::move(next);
        }
        std::vector<Bitvec> verts;
        for (const auto& p : nodes) {
            Bitvec b(walls);
            for (std::size_t w : p) b.set(w, true);
            verts.push_back(b);
        }
        std::vector<std::string> names;
        for (std::size_t w = 0; w < walls; ++w) names.push_back("e" + std::to_string(w));
        return {CubeComplex(walls, std::move(verts), std::move(names)), {}, nullptr};
    }

    // Spiral of quarter-flats: wall families are the verticals of the first
    // flat plus one new family per stage; stage i+1 glues along the outer ray
    // of stage i starting at its second vertex, so each family's first wall
    // never enters the next stage.
    LevelData build_spiral(std::size_t r) const {
        std::size_t n = spec_.stages;
        std::size_t m = (n + 1) * r;
        auto widx = [n](std::size_t fam, long k) {
            return (static_cast<std::size_t>(k) - 1) * (n + 1) + fam;
        };
        std::set<Bitvec> vs;
        long L = static_cast<long>(r);
        for (long a = 0; a <= L; ++a)
            for (long b = 0; b <= L; ++b) {
                Bitvec v(m);
                for (long k = 1; k <= a; ++k) v.set(widx(0, k), true);
                for (long k = 1; k <= b; ++k) v.set(widx(1, k), true);
                vs.insert(v);
            }
        for (std::size_t i = 2; i <= n; ++i)
            for (long a = 0; a < L; ++a)
                for (long b = 0; b <= L; ++b) {
                    Bitvec v(m);
                    for (std::size_t j = 1; j + 2 <= i; ++j) v.set(widx(j, 1), true);
                    for (long k = 1; k <= a + 1; ++k) v.set(widx(i - 1, k), true);
                    for (long k = 1; k <= b; ++k) v.set(widx(i, k), true);
                    vs.insert(v);
                }
        std::vector<std::string> names(m);
        for (long k = 1; k <= L; ++k) {
            names[widx(0, k)] = "x>=" + std::to_string(k);
            for (std::size_t i = 1; i <= n; ++i)
                names[widx(i, k)] = "s" + std::to_string(i) + ">=" + std::to_string(k);
        }
        auto enc = [n, m, widx](const famdetail::Coord& c) {
            // Coordinates (stage, a, b) of a quarter-flat chart.
            if (c.size() != 3) throw domain_error("spiral coordinates are (stage, a, b)");
            std::size_t i = static_cast<std::size_t>(c[0]);
            Bitvec v(m);
            if (i <= 1) {
                for (long k = 1; k <= c[1]; ++k) v.set(widx(0, k), true);
                for (long k = 1; k <= c[2]; ++k) v.set(widx(1, k), true);
            } else {
                if (i > n) throw domain_error("spiral stage out of range");
                for (std::size_t j = 1; j + 2 <= i; ++j) v.set(widx(j, 1), true);
                for (long k = 1; k <= c[1] + 1; ++k) v.set(widx(i - 1, k), true);
                for (long k = 1; k <= c[2]; ++k) v.set(widx(i, k), true);
            }
            return v;
        };
        return {CubeComplex(m, std::vector<Bitvec>(vs.begin(), vs.end()), std::move(names)),
                {},
                enc};
    }

    // Composite wall order interleaves by level of first appearance: for each
    // level, the left factor's new walls then the right factor's.  This keeps
    // the combined indexing stable even as both factors grow.
    struct Scatter {
        std::vector<std::size_t> left, right;  // factor wall index -> combined index
        std::vector<std::string> names;
    };

    Scatter scatter_maps(std::size_t r) const {
        Scatter s;
        std::size_t ml = 0, mr = 0;
        for (std::size_t lvl = 1; lvl <= r; ++lvl) {
            const auto& XL = left_->level(lvl);
            const auto& XR = right_->level(lvl);
            for (std::size_t w = ml; w < XL.wall_count(); ++w) {
                s.left.push_back(s.names.size());
                s.names.push_back("L." + XL.wall_name(w));
            }
            ml = XL.wall_count();
            for (std::size_t w = mr; w < XR.wall_count(); ++w) {
                s.right.push_back(s.names.size());
                s.names.push_back("R." + XR.wall_name(w));
            }
            mr = XR.wall_count();
        }
        return s;
    }

    static Bitvec place(const Bitvec& v, const std::vector<std::size_t>& map, std::size_t m) {
        Bitvec out(m);
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v.get(w)) out.set(map[w], true);
        return out;
    }

    LevelData build_product(std::size_t r) const {
        auto s = scatter_maps(r);
        std::size_t m = s.names.size();
        const auto& XL = left_->level(r);
        const auto& XR = right_->level(r);
        std::vector<Bitvec> verts;
        for (const auto& u : XL.vertices()) {
            Bitvec lu = place(u, s.left, m);
            for (const auto& v : XR.vertices()) {
                Bitvec b = lu;
                for (std::size_t w = 0; w < v.size(); ++w)
                    if (v.get(w)) b.set(s.right[w], true);
                verts.push_back(b);
            }
        }
        return {CubeComplex(m, std::move(verts), std::move(s.names)), {}, nullptr};
    }

    Bitvec glue_vertex(const CubeComplex& X, const std::string& text) const {
        if (text.empty()) return X.basepoint();
        Bitvec v = Bitvec::from_string(text);
        if (v.size() > X.wall_count())
            throw domain_error("wedge point has more bits than the level has walls");
        v = v.resized(X.wall_count());
        if (!X.contains(v)) throw domain_error("wedge point is not a vertex at this level");
        return v;
    }

    LevelData build_wedge(std::size_t r) const {
        auto s = scatter_maps(r);
        std::size_t m = s.names.size();
        const auto& XL = left_->level(r);
        const auto& XR = right_->level(r);
        Bitvec gl = place(glue_vertex(XL, spec_.glue_left), s.left, m);
        Bitvec gr = place(glue_vertex(XR, spec_.glue_right), s.right, m);
        std::set<Bitvec> verts;
        for (const auto& u : XL.vertices()) {
            Bitvec b = place(u, s.left, m);
            for (std::size_t w = 0; w < m; ++w)
                if (gr.get(w)) b.set(w, true);
            verts.insert(b);
        }
        for (const auto& v : XR.vertices()) {
            Bitvec b = place(v, s.right, m);
            for (std::size_t w = 0; w < m; ++w)
                if (gl.get(w)) b.set(w, true);
            verts.insert(b);
        }
        return {CubeComplex(m, std::vector<Bitvec>(verts.begin(), verts.end()),
                            std::move(s.names)),
                {},
                nullptr};
    }

    FamilySpec spec_;
    std::shared_ptr<TruncationSystem> left_, right_;
    mutable std::map<std::size_t, LevelData> cache_;
};

// ---------------------------------------------------------------------------
// Canonical rays

namespace famdetail {

inline Path coord_ray(const TruncationSystem& ts, std::size_t r,
                      const std::vector<Coord>& coords) {
    Path P;
    for (const auto& c : coords) P.push_back(ts.encode(c, r));
    return P;
}

} // namespace famdetail

inline Path canonical_ray(const TruncationSystem& ts, const std::string& name,
                          std::size_t r) {
    using K = FamilySpec::Kind;
    const FamilySpec& s = ts.spec();
    const CubeComplex& X = ts.level(r);
    auto bad = [&]() -> Path {
        throw domain_error("unknown ray name for this family: " + name);
    };

    std::vector<famdetail::Coord> coords;
    auto straight = [&](std::size_t axis, long dir, std::size_t dim) {
        famdetail::Coord c(dim, 0);
        coords.push_back(c);
        for (std::size_t t = 0; t < r; ++t) {
            c[axis] += dir;
            coords.push_back(c);
        }
    };

    switch (s.kind) {
    case K::Orthant: {
        if (name.rfind("axis:+", 0) != 0 || name.size() != 7) return bad();
        std::size_t axis = std::string("xyz").find(name[6]);
        if (axis == std::string::npos || axis >= s.dim) return bad();
        straight(axis, +1, s.dim);
        break;
    }
    case K::Flat: {
        if (name == "axis:+x") straight(0, +1, 2);
        else if (name == "axis:-x") straight(0, -1, 2);
        else if (name == "axis:+y") straight(1, +1, 2);
        else if (name == "axis:-y") straight(1, -1, 2);
        else if (name == "diagonal") {
            famdetail::Coord c{0, 0};
            coords.push_back(c);
            for (std::size_t t = 0; t < r; ++t) {
                ++c[t % 2];
                coords.push_back(c);
            }
        } else return bad();
        break;
    }
    case K::Strip: {
        if (name == "axis:+x") straight(0, +1, 2);
        else if (name == "axis:-x") straight(0, -1, 2);
        else return bad();
        break;
    }
    case K::EighthFlat: {
        if (name == "bottom" || name == "axis:+x") straight(0, +1, 2);
        else if (name == "top") {
            famdetail::Coord c{0, 0};
            coords.push_back(c);
            while (coords.size() <= r) {
                long cap = std::min(profile_value(s.f1, static_cast<std::size_t>(c[0])),
                                    static_cast<long>(r));
                if (c[1] < cap) ++c[1];
                else ++c[0];
                coords.push_back(c);
            }
        } else return bad();
        break;
    }
    case K::DiagonalQuarterFlat: {
        if (name == "axis:+x") straight(0, +1, 2);
        else if (name == "top" || name == "bottom") {
            const auto& f = (name == "top") ? s.f1 : s.f2;
            long dir = (name == "top") ? +1 : -1;
            famdetail::Coord c{0, 0};
            coords.push_back(c);
            while (coords.size() <= r) {
                long cap = std::min(profile_value(f, static_cast<std::size_t>(c[0])),
                                    static_cast<long>(r));
                if (dir * c[1] < cap) c[1] += dir;
                else ++c[0];
                coords.push_back(c);
            }
        } else return bad();
        break;
    }
    case K::HalfFlat: {
        if (!s.diagonal) {
            if (name == "axis:+x") straight(0, +1, 2);
            else if (name == "axis:-x") straight(0, -1, 2);
            else if (name == "axis:+y") straight(1, +1, 2);
            else return bad();
        } else {
            if (name == "axis:+y") straight(1, +1, 2);
            else if (name == "top") {
                // Up-left along the staircase boundary.
                famdetail::Coord c{0, 0};
                coords.push_back(c);
                while (coords.size() <= r) {
                    long cap = std::min(profile_value(s.f1, static_cast<std::size_t>(-c[0])),
                                        static_cast<long>(r));
                    if (c[1] < cap) ++c[1];
                    else --c[0];
                    coords.push_back(c);
                }
            } else if (name == "bottom") {
                // Down-right along the staircase boundary.
                famdetail::Coord c{0, 0};
                coords.push_back(c);
                while (coords.size() <= r) {
                    long cap = std::min(profile_value(s.f2, static_cast<std::size_t>(c[0])),
                                        static_cast<long>(r));
                    if (-c[1] < cap) --c[1];
                    else ++c[0];
                    coords.push_back(c);
                }
            } else return bad();
        }
        break;
    }
    case K::Tree: {
        if (name.rfind("end:", 0) != 0) return bad();
        std::size_t branch = std::stoul(name.substr(4));
        if (branch >= s.degree) return bad();
        // Walk the branch taking the first child at each step.  Edges at
        // depth d occupy a contiguous breadth-first block of wall indices.
        Path P{Bitvec(X.wall_count())};
        Bitvec cur(X.wall_count());
        std::size_t level_start = 0, level_count = s.degree, offset = branch;
        for (std::size_t depth = 1; depth <= r; ++depth) {
            cur.set(level_start + offset, true);
            P.push_back(cur);
            level_start += level_count;
            offset = offset * (s.degree - 1);
            level_count = level_count * (s.degree - 1);
        }
        if (!is_geodesic(X, P)) throw domain_error("canonical ray left the complex");
        return P;
    }
    case K::Spiral: {
        if (name == "axis:+x") {
            famdetail::Coord c{1, 0, 0};
            coords.push_back(c);
            for (std::size_t t = 0; t < r; ++t) {
                ++c[1];
                coords.push_back(c);
            }
        } else if (name == "spiral") {
            // One step outward through each stage, then climb the last stage.
            std::size_t n = s.stages;
            famdetail::Coord c{1, 0, 0};
            coords.push_back(c);
            for (std::size_t t = 1; t <= r; ++t) {
                if (t < n) {
                    c = {static_cast<long>(t + 1), 0, 0};
                } else {
                    c = {static_cast<long>(n), 0, static_cast<long>(t - n + 1)};
                }
                coords.push_back(c);
            }
        } else return bad();
        break;
    }
    case K::Product:
    case K::Wedge:
        return bad();
    }

    Path P = famdetail::coord_ray(ts, r, coords);
    if (!is_geodesic(X, P)) throw domain_error("canonical ray left the complex");
    return P;
}

// ---------------------------------------------------------------------------
// Text format: `cubix-family v1`

inline void write_family(std::ostream& out, const FamilySpec& s) {
    using K = FamilySpec::Kind;
    auto kind_name = [](K k) -> const char* {
        switch (k) {
        case K::Orthant: return "orthant";
        case K::Flat: return "flat";
        case K::Strip: return "strip";
        case K::EighthFlat: return "eighth_flat";
        case K::DiagonalQuarterFlat: return "diagonal_quarter_flat";
        case K::HalfFlat: return "half_flat";
        case K::Tree: return "tree";
        case K::Spiral: return "spiral";
        case K::Product: return "product";
        case K::Wedge: return "wedge";
        }
        return "?";
    };
    auto write_list = [&](const char* key, const std::vector<long>& f,
                          const std::string& prefix) {
        if (f.empty()) return;
        out << "param " << prefix << key << "=";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
        out << "\n";
    };
    auto write_leaf = [&](const FamilySpec& p, const std::string& prefix) {
        switch (p.kind) {
        case K::Orthant: out << "param " << prefix << "dim=" << p.dim << "\n"; break;
        case K::Strip: out << "param " << prefix << "height=" << p.height << "\n"; break;
        case K::EighthFlat: write_list("f", p.f1, prefix); break;
        case K::DiagonalQuarterFlat:
            write_list("f", p.f1, prefix);
            write_list("f2", p.f2, prefix);
            break;
        case K::HalfFlat:
            out << "param " << prefix << "diagonal=" << (p.diagonal ? 1 : 0) << "\n";
            write_list("f", p.f1, prefix);
            write_list("f2", p.f2, prefix);
            break;
        case K::Tree: out << "param " << prefix << "degree=" << p.degree << "\n"; break;
        case K::Spiral: out << "param " << prefix << "stages=" << p.stages << "\n"; break;
        default: break;
        }
    };
    out << "cubix-family v1\n";
    out << "kind " << kind_name(s.kind) << "\n";
    if (s.kind == K::Product || s.kind == K::Wedge) {
        out << "param left=" << kind_name(s.left->kind) << "\n";
        write_leaf(*s.left, "left.");
        out << "param right=" << kind_name(s.right->kind) << "\n";
        write_leaf(*s.right, "right.");
        if (!s.glue_left.empty()) out << "param glue_left=" << s.glue_left << "\n";
        if (!s.glue_right.empty()) out << "param glue_right=" << s.glue_right << "\n";
    } else {
        write_leaf(s, "");
    }
}

inline FamilySpec parse_family(std::istream& in) {
    using K = FamilySpec::Kind;
    auto kind_of = [](const std::string& n) -> K {
        if (n == "orthant") return K::Orthant;
        if (n == "flat") return K::Flat;
        if (n == "strip") return K::Strip;
        if (n == "eighth_flat") return K::EighthFlat;
        if (n == "diagonal_quarter_flat") return K::DiagonalQuarterFlat;
        if (n == "half_flat") return K::HalfFlat;
        if (n == "tree") return K::Tree;
        if (n == "spiral") return K::Spiral;
        if (n == "product") return K::Product;
        if (n == "wedge") return K::Wedge;
        throw parse_error("unknown family kind: " + n);
    };
    auto parse_list = [](const std::string& v) {
        std::vector<long> out;
        std::istringstream ls(v);
        std::string item;
        while (std::getline(ls, item, ',')) out.push_back(std::stol(item));
        return out;
    };

    std::string line;
    bool saw_header = false, saw_kind = false;
    FamilySpec s;
    auto apply = [&](FamilySpec& target, const std::string& key, const std::string& value) {
        if (key == "dim") target.dim = std::stoul(value);
        else if (key == "height") target.height = std::stoul(value);
        else if (key == "diagonal") target.diagonal = value == "1" || value == "true";
        else if (key == "f") target.f1 = parse_list(value);
        else if (key == "f2") target.f2 = parse_list(value);
        else if (key == "degree") target.degree = std::stoul(value);
        else if (key == "stages") target.stages = std::stoul(value);
        else throw parse_error("unknown family parameter: " + key);
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!saw_header) {
            std::string ver;
            ls >> ver;
            if (word != "cubix-family" || ver != "v1")
                throw parse_error("expected header 'cubix-family v1'");
            saw_header = true;
        } else if (word == "kind") {
            std::string name;
            if (!(ls >> name)) throw parse_error("kind line needs a name");
            s.kind = kind_of(name);
            saw_kind = true;
        } else if (word == "param") {
            std::string kv;
            if (!(ls >> kv)) throw parse_error("param line needs key=value");
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw parse_error("param line needs key=value");
            std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
            if (key == "left" || key == "right") {
                auto part = std::make_shared<FamilySpec>();
                part->kind = kind_of(value);
                if (part->kind == K::Product || part->kind == K::Wedge)
                    throw parse_error("nested composite families are not supported");
                (key == "left" ? s.left : s.right) = part;
            } else if (key.rfind("left.", 0) == 0) {
                if (!s.left) throw parse_error("left part must be declared first");
                apply(*s.left, key.substr(5), value);
            } else if (key.rfind("right.", 0) == 0) {
                if (!s.right) throw parse_error("right part must be declared first");
                apply(*s.right, key.substr(6), value);
            } else if (key == "glue_left") {
                s.glue_left = value;
            } else if (key == "glue_right") {
                s.glue_right = value;
            } else {
                apply(s, key, value);
            }
        } else {
            throw parse_error("unexpected line in family file: " + word);
        }
    }
    if (!saw_header) throw parse_error("missing family header");
    if (!saw_kind) throw parse_error("missing kind line");
    check_spec(s);
    return s;
}

} // namespace cubix
