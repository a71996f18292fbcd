#include <catch2/catch_amalgamated.hpp>

#include "cubix/boundary.hpp"

#include <sstream>

using namespace cubix;

namespace {

std::vector<std::size_t> named_run(const CubeComplex& X, const std::string& stem,
                                   int from, int to) {
    std::vector<std::size_t> out;
    for (int k = from; k <= to; ++k)
        out.push_back(X.wall_index(stem + std::to_string(k)));
    return out;
}

std::vector<std::string> piece_names(const CubeComplex& X,
                                     const std::vector<std::size_t>& piece) {
    std::vector<std::string> out;
    for (std::size_t w : piece) out.push_back(X.wall_name(w));
    return out;
}

const BoundarySimplex* simplex_with_vertices(const BoundaryComplexApprox& B,
                                             std::vector<std::size_t> verts) {
    for (const auto& s : B.simplices)
        if (s.vertices == verts) return &s;
    return nullptr;
}

} // namespace

TEST_CASE("axiom flags on small wall sets") {
    TruncationSystem flat(FamilySpec::flat());
    const CubeComplex& X5 = flat.level(5);

    SECTION("a half-space chain passes all three axioms") {
        auto rep = ubs_flags(X5, named_run(X5, "x>=", 1, 5));
        CHECK(rep.unidirectional);
        CHECK(rep.inseparable);
        CHECK(rep.facing_free);
        CHECK(rep.flags_pass());
        CHECK(rep.failing.empty());
        CHECK(rep.theta == 2);
        CHECK(rep.walls.size() == 5);
    }

    SECTION("a full line fails unidirectionality") {
        const CubeComplex& X4 = flat.level(4);
        auto walls = named_run(X4, "x>=", 1, 4);
        auto neg = named_run(X4, "x<=-", 1, 4);
        walls.insert(walls.end(), neg.begin(), neg.end());
        auto rep = ubs_flags(X4, walls);
        CHECK_FALSE(rep.unidirectional);
        CHECK(rep.inseparable);
        CHECK(rep.facing_free);
        CHECK(rep.failing == "unidirectional");
    }

    SECTION("a chain with a gap fails inseparability") {
        auto rep = ubs_flags(X5, {X5.wall_index("x>=1"), X5.wall_index("x>=3")});
        CHECK(rep.unidirectional);
        CHECK_FALSE(rep.inseparable);
        CHECK(rep.failing == "inseparable");
    }

    SECTION("three edges of a star form a facing triple") {
        TruncationSystem tree(FamilySpec::tree(3));
        const CubeComplex& S = tree.level(1);
        auto rep = ubs_flags(S, {0, 1, 2});
        CHECK(rep.unidirectional);
        CHECK(rep.inseparable);
        CHECK_FALSE(rep.facing_free);
        CHECK(rep.failing == "facing-triple-free");
    }

    SECTION("duplicates are removed and bad walls rejected") {
        auto rep = ubs_flags(X5, {X5.wall_index("x>=1"), X5.wall_index("x>=1"),
                                  X5.wall_index("x>=2")});
        CHECK(rep.walls.size() == 2);
        CHECK_THROWS_AS(ubs_flags(X5, {X5.wall_count()}), domain_error);
        CHECK_THROWS_AS(ubs_flags(X5, {}), domain_error);
    }
}

TEST_CASE("minimal decomposition of closed wall sets") {
    TruncationSystem flat(FamilySpec::flat());
    const CubeComplex& X5 = flat.level(5);

    SECTION("one direction family is a single piece") {
        auto rep = minimal_decomposition(X5, named_run(X5, "x>=", 1, 5));
        REQUIRE(rep.piece_count() == 1);
        CHECK(piece_names(X5, rep.pieces[0]) ==
              std::vector<std::string>{"x>=1", "x>=2", "x>=3", "x>=4", "x>=5"});
        CHECK(rep.defect.empty());
        CHECK(rep.dominance == std::vector<double>{1.0});
    }

    SECTION("diagonal ray walls split into the two axis families") {
        auto diag = canonical_ray(flat, "diagonal", 5);
        auto rep = minimal_decomposition(X5, path_walls(diag));
        REQUIRE(rep.piece_count() == 2);
        CHECK(piece_names(X5, rep.pieces[0]) ==
              std::vector<std::string>{"x>=1", "x>=2", "x>=3"});
        CHECK(piece_names(X5, rep.pieces[1]) ==
              std::vector<std::string>{"y>=1", "y>=2"});
        CHECK(rep.defect.empty());
        CHECK(rep.dominance == std::vector<double>{1.0, 1.0, 0.0, 1.0});
    }

    SECTION("staircase ray walls split with an outer-wall defect") {
        TruncationSystem eighth(FamilySpec::eighth_flat({1, 2, 3}));
        const CubeComplex& X = eighth.level(5);
        auto top = canonical_ray(eighth, "top", 5);
        auto rep = minimal_decomposition(X, path_walls(top));
        REQUIRE(rep.piece_count() == 2);
        CHECK(piece_names(X, rep.pieces[0]) == std::vector<std::string>{"x>=1", "x>=2"});
        CHECK(piece_names(X, rep.pieces[1]) == std::vector<std::string>{"y>=1", "y>=2"});
        CHECK(piece_names(X, rep.defect) == std::vector<std::string>{"y>=3"});
        CHECK(rep.dominance == std::vector<double>{1.0, 0.5, 0.0, 1.0});
    }

    SECTION("a failing axiom is reported by name") {
        TruncationSystem tree(FamilySpec::tree(3));
        CHECK_THROWS_WITH(minimal_decomposition(tree.level(1), {0, 1, 2}),
                          "wall set fails the facing-triple-free axiom at this scale");
    }
}

TEST_CASE("boundary complex of the flat") {
    TruncationSystem ts(FamilySpec::flat());
    auto B = boundary_complex(ts, {4, 6, 8});
    CHECK(B.status == "STABLE");
    CHECK(B.certified);
    CHECK(B.flag_property);
    CHECK(B.count_of_dim(0) == 4);
    CHECK(B.count_of_dim(1) == 4);
    CHECK(B.count_of_dim(2) == 0);

    const CubeComplex& top = ts.level(8);
    auto cpx = B.class_containing(top.wall_index("x>=1"));
    auto cmx = B.class_containing(top.wall_index("x<=-1"));
    auto cpy = B.class_containing(top.wall_index("y>=1"));
    auto cmy = B.class_containing(top.wall_index("y<=-1"));
    REQUIRE((cpx && cmx && cpy && cmy));

    SECTION("the four classes are the axis directions") {
        CHECK(B.simplices[*cpx].walls.size() == 8);
        CHECK(B.simplices[*cpx].walls == named_run(top, "x>=", 1, 8));
        CHECK(B.simplices[*cmy].walls == named_run(top, "y<=-", 1, 8));
    }

    SECTION("edges join exactly the perpendicular pairs") {
        CHECK(simplex_with_vertices(B, {*cpx, *cpy}) != nullptr);
        CHECK(simplex_with_vertices(B, {*cpx, *cmy}) != nullptr);
        CHECK(simplex_with_vertices(B, {*cmx, *cpy}) != nullptr);
        CHECK(simplex_with_vertices(B, {*cmx, *cmy}) != nullptr);
        CHECK(simplex_with_vertices(B, std::vector<std::size_t>{
                  std::min(*cpx, *cmx), std::max(*cpx, *cmx)}) == nullptr);
    }

    SECTION("simplicial distance separates antipodal directions") {
        CHECK(eta_distance(B, *cpx, *cpx) == 0);
        // chains count simplex steps: {+x},[+x,+y],{+y} has two
        CHECK(eta_distance(B, *cpx, *cpy) == 2);
        CHECK(eta_distance(B, *cpx, *cmx) == 3);
        CHECK_THROWS_AS(eta_distance(B, 0, 99), domain_error);
    }

    SECTION("edges carry their faces") {
        const auto* e = simplex_with_vertices(B, {*cpx, *cpy});
        REQUIRE(e != nullptr);
        CHECK(e->dim == 1);
        CHECK(e->faces.size() == 2);
        CHECK(e->walls.size() == 16);
    }
}

TEST_CASE("boundary complexes of quarter planes and strips") {
    SECTION("quarter plane: one edge") {
        TruncationSystem ts(FamilySpec::orthant(2));
        auto B = boundary_complex(ts, {3, 4, 5});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 2);
        CHECK(B.count_of_dim(1) == 1);
    }
    SECTION("staircase eighth flat collapses to the same edge") {
        TruncationSystem ts(FamilySpec::eighth_flat({1, 2, 3}));
        auto B = boundary_complex(ts, {4, 6, 8});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 2);
        CHECK(B.count_of_dim(1) == 1);
    }
    SECTION("strip: two isolated points") {
        TruncationSystem ts(FamilySpec::strip(1));
        auto B = boundary_complex(ts, {3, 4, 5});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 2);
        CHECK(B.count_of_dim(1) == 0);
    }
    SECTION("product of two rays matches the quarter plane") {
        TruncationSystem ts(
            FamilySpec::product(FamilySpec::orthant(1), FamilySpec::orthant(1)));
        auto B = boundary_complex(ts, {2, 3, 4});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 2);
        CHECK(B.count_of_dim(1) == 1);
    }
}

TEST_CASE("boundary complexes of half flats") {
    SECTION("diagonal quarter flat: a path of two edges") {
        TruncationSystem ts(FamilySpec::diagonal_quarter_flat({1, 2, 3}, {1, 2, 3}));
        auto B = boundary_complex(ts, {4, 6, 8});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 3);
        CHECK(B.count_of_dim(1) == 2);
    }
    SECTION("straight half flat: a path of two edges") {
        TruncationSystem ts(FamilySpec::half_flat(false));
        auto B = boundary_complex(ts, {4, 6, 8});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 3);
        CHECK(B.count_of_dim(1) == 2);
    }
    SECTION("diagonal half flat: a path of three edges") {
        TruncationSystem ts(FamilySpec::half_flat(true, {1, 2, 3}, {1, 2, 3}));
        auto B = boundary_complex(ts, {4, 6, 8});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 4);
        CHECK(B.count_of_dim(1) == 3);

        const CubeComplex& top = ts.level(8);
        auto vp = B.class_containing(top.wall_index("x>=1"));
        auto hp = B.class_containing(top.wall_index("y>=1"));
        auto hm = B.class_containing(top.wall_index("y<=-1"));
        auto vm = B.class_containing(top.wall_index("x<=-1"));
        REQUIRE((vp && hp && hm && vm));
        // the path: y<=- , x>= , y>= , x<=-
        CHECK(simplex_with_vertices(B, {std::min(*vp, *hm), std::max(*vp, *hm)}));
        CHECK(simplex_with_vertices(B, {std::min(*vp, *hp), std::max(*vp, *hp)}));
        CHECK(simplex_with_vertices(B, {std::min(*hp, *vm), std::max(*hp, *vm)}));
        CHECK_FALSE(simplex_with_vertices(B, {std::min(*hm, *vm), std::max(*hm, *vm)}));
        CHECK(eta_distance(B, *hm, *vm) == 4);
        CHECK(eta_distance(B, *vp, *hp) == 2);
    }
}

TEST_CASE("boundary complexes of branching and twisted spaces") {
    SECTION("tree: one isolated point per branch direction") {
        TruncationSystem ts(FamilySpec::tree(3));
        auto B = boundary_complex(ts, {2, 3, 4});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 6);
        CHECK(B.count_of_dim(1) == 0);
        CHECK_FALSE(eta_distance(B, 0, 1).has_value());
        CHECK(eta_distance(B, 0, 0) == 0);
    }
    SECTION("three-stage spiral: a path of three edges") {
        TruncationSystem ts(FamilySpec::spiral(3));
        auto B = boundary_complex(ts, {3, 4, 5});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 4);
        CHECK(B.count_of_dim(1) == 3);
        CHECK(B.count_of_dim(2) == 0);
    }
    SECTION("three-dimensional orthant: a full triangle") {
        TruncationSystem ts(FamilySpec::orthant(3));
        auto B = boundary_complex(ts, {3, 4, 5});
        CHECK(B.status == "STABLE");
        CHECK(B.count_of_dim(0) == 3);
        CHECK(B.count_of_dim(1) == 3);
        CHECK(B.count_of_dim(2) == 1);
        const auto* t = simplex_with_vertices(B, {0, 1, 2});
        REQUIRE(t != nullptr);
        CHECK(t->dim == 2);
        CHECK(t->faces.size() == 3);
    }
    SECTION("flat times ray: the cone on the four-cycle") {
        TruncationSystem ts(
            FamilySpec::product(FamilySpec::flat(), FamilySpec::orthant(1)));
        auto B = boundary_complex(ts, {2, 3, 4});
        CHECK(B.status == "STABLE");
        CHECK(B.flag_property);
        CHECK(B.count_of_dim(0) == 5);
        CHECK(B.count_of_dim(1) == 8);
        CHECK(B.count_of_dim(2) == 4);
        CHECK(B.count_of_dim(3) == 0);
    }
}

TEST_CASE("boundary complex input validation") {
    TruncationSystem ts(FamilySpec::flat());
    CHECK_THROWS_AS(boundary_complex(ts, {}), domain_error);
    CHECK_THROWS_AS(boundary_complex(ts, {4}), domain_error);
    CHECK_THROWS_AS(boundary_complex(ts, {4, 4, 5}), domain_error);
    CHECK_THROWS_AS(boundary_complex(ts, {6, 4, 8}), domain_error);
}

TEST_CASE("boundary text output") {
    TruncationSystem ts(FamilySpec::orthant(2));
    auto B = boundary_complex(ts, {3, 4, 5});
    std::ostringstream os;
    write_boundary(os, B);
    CHECK(os.str() ==
          "cubix-boundary v1\n"
          "radii 3,4,5\n"
          "theta 2\n"
          "window 3\n"
          "status STABLE\n"
          "flag-property yes\n"
          "simplex 0 dim 0 vertices 0 faces - walls 5 sample x>=1 x>=2 x>=3 x>=4 "
          "x>=5\n"
          "simplex 1 dim 0 vertices 1 faces - walls 5 sample y>=1 y>=2 y>=3 y>=4 "
          "y>=5\n"
          "simplex 2 dim 1 vertices 0 1 faces 1 0 walls 10 sample x>=1 y>=1 x>=2 "
          "y>=2 x>=3 y>=3 x>=4 y>=4\n");
}

TEST_CASE("visibility of a direction at scale") {
    SECTION("flat verticals are visible from the basepoint") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(6);
        auto rep = visibility_report(X, named_run(X, "x>=", 1, 6));
        CHECK(rep.stages.size() == 6);
        CHECK(rep.full_depth);
        CHECK(rep.min_start == std::vector<std::size_t>(6, 0));
        CHECK(rep.verdict == Visibility::VisibleAtScale);
    }
    SECTION("staircase horizontals escape to infinity") {
        TruncationSystem ts(FamilySpec::eighth_flat({1, 2, 3}));
        const CubeComplex& X = ts.level(8);
        auto rep = visibility_report(X, named_run(X, "y>=", 1, 8));
        CHECK(rep.stages.size() == 8);
        CHECK(rep.stages_reached == 8);
        CHECK(rep.full_depth);
        CHECK(rep.min_start == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
        CHECK(rep.verdict == Visibility::Escaping);
    }
    SECTION("only inseparable sets are accepted") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(5);
        CHECK_THROWS_WITH(
            visibility_report(X, {X.wall_index("x>=1"), X.wall_index("x>=3")}),
            "visibility needs an inseparable wall set");
        CHECK_THROWS_AS(visibility_report(X, {}), domain_error);
    }
}

TEST_CASE("ray trichotomy measurements") {
    SECTION("tree branch: no crossings, short dwell") {
        TruncationSystem ts(FamilySpec::tree(3));
        const CubeComplex& X = ts.level(8);
        auto ray = canonical_ray(ts, "end:0", 8);
        auto rep = trichotomy_report(X, ray, {0, 1, 2});
        CHECK(rep.qi_estimate == Catch::Approx(8.0 / 7.0));
        CHECK(rep.p == 0);
        CHECK(rep.p_exact);
        CHECK(rep.dwell ==
              std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 3}, {2, 5}});
    }
    SECTION("flat diagonal: square crossing pattern") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(4);
        auto ray = canonical_ray(ts, "diagonal", 4);
        auto rep = trichotomy_report(X, ray, {0, 1, 2});
        CHECK(rep.qi_estimate == Catch::Approx(2.0 / 3.0));
        CHECK(rep.p == 2);
        CHECK(rep.p_exact);
        CHECK(rep.dwell ==
              std::vector<std::pair<std::size_t, std::size_t>>{{0, 3}, {1, 4}, {2, 4}});
    }
    SECTION("strip axis: the whole ray dwells in one carrier") {
        TruncationSystem ts(FamilySpec::strip(1));
        const CubeComplex& X = ts.level(5);
        auto ray = canonical_ray(ts, "axis:+x", 5);
        auto rep = trichotomy_report(X, ray, {0, 1});
        CHECK(rep.qi_estimate == Catch::Approx(0.75));
        CHECK(rep.p == 0);
        CHECK(rep.dwell ==
              std::vector<std::pair<std::size_t, std::size_t>>{{0, 5}, {1, 5}});
    }
    SECTION("only geodesics are measured") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(3);
        Path back{X.basepoint(), X.basepoint().with_flipped(X.wall_index("x>=1")),
                  X.basepoint()};
        CHECK_THROWS_WITH(trichotomy_report(X, back, {0}),
                          "trichotomy needs a geodesic");
    }
}

TEST_CASE("strip witness along a staircase ray") {
    SECTION("the staircase ray carries a genuine square strip") {
        TruncationSystem ts(FamilySpec::eighth_flat({1, 2, 3}));
        const CubeComplex& X = ts.level(8);
        auto top = canonical_ray(ts, "top", 8);
        auto w = eighth_flat_witness(X, top, path_walls(top).front());
        CHECK(w.ok);
        CHECK(w.reason.empty());
        CHECK(w.gate_dist == std::vector<std::size_t>{0, 0, 0, 1, 1, 2, 2, 3, 3});
        CHECK(w.max_gate_dist == 3);
        CHECK(w.has_square);
        CHECK(w.label.empty());
        CHECK(w.verts.size() == 15);
        CHECK(w.bottom.size() == 6);
        CHECK(w.top.size() == 9);
    }
    SECTION("a tree branch is thin: bounded label, no square") {
        TruncationSystem ts(FamilySpec::tree(3));
        const CubeComplex& X = ts.level(4);
        auto ray = canonical_ray(ts, "end:0", 4);
        auto w = eighth_flat_witness(X, ray, path_walls(ray).front());
        CHECK(w.ok);
        CHECK(w.max_gate_dist == 3);
        CHECK_FALSE(w.has_square);
        CHECK(w.label == "bounded-f");
        CHECK(w.verts.size() == 5);
    }
    SECTION("preconditions") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(3);
        auto ray = canonical_ray(ts, "axis:+x", 3);
        CHECK_THROWS_WITH(eighth_flat_witness(X, ray, X.wall_index("y>=1")),
                          "the named wall must be dual to the path's first edge");
        Path single{X.basepoint()};
        CHECK_THROWS_AS(eighth_flat_witness(X, single, 0), domain_error);
    }
}

TEST_CASE("orthant witness for crossing ray families") {
    SECTION("two flat axes span a full grid") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(5);
        auto rx = canonical_ray(ts, "axis:+x", 5);
        auto ry = canonical_ray(ts, "axis:+y", 5);
        auto w = orthant_witness(X, {rx, ry});
        CHECK(w.ok);
        CHECK(w.reason.empty());
        CHECK(w.dims == std::vector<std::size_t>{5, 5});
        CHECK(w.grid.size() == 36);
    }
    SECTION("three orthant axes span a full cube grid") {
        TruncationSystem ts(FamilySpec::orthant(3));
        const CubeComplex& X = ts.level(4);
        auto w = orthant_witness(X, {canonical_ray(ts, "axis:+x", 4),
                                     canonical_ray(ts, "axis:+y", 4),
                                     canonical_ray(ts, "axis:+z", 4)});
        CHECK(w.ok);
        CHECK(w.grid.size() == 125);
    }
    SECTION("distinct tree branches fail to cross") {
        TruncationSystem ts(FamilySpec::tree(3));
        const CubeComplex& X = ts.level(3);
        auto w = orthant_witness(X, {canonical_ray(ts, "end:0", 3),
                                     canonical_ray(ts, "end:1", 3)});
        CHECK_FALSE(w.ok);
        CHECK(w.reason == "walls of distinct rays fail to cross");
        CHECK(w.witness == std::pair<std::size_t, std::size_t>{0, 1});
    }
    SECTION("a repeated ray shares its walls") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(4);
        auto rx = canonical_ray(ts, "axis:+x", 4);
        auto w = orthant_witness(X, {rx, rx});
        CHECK_FALSE(w.ok);
        CHECK(w.reason == "rays share a wall");
    }
    SECTION("preconditions") {
        TruncationSystem ts(FamilySpec::flat());
        const CubeComplex& X = ts.level(3);
        auto rx = canonical_ray(ts, "axis:+x", 3);
        CHECK_THROWS_AS(orthant_witness(X, {rx}), domain_error);
        auto ry = canonical_ray(ts, "axis:+y", 3);
        Path shifted;
        for (const auto& v : ry) shifted.push_back(v.with_flipped(X.wall_index("x>=1")));
        CHECK_THROWS_AS(orthant_witness(X, {rx, shifted}), domain_error);
    }
}

TEST_CASE("boundary of a convex subcomplex") {
    TruncationSystem ts(FamilySpec::flat());
    SECTION("a wall carrier keeps the perpendicular directions") {
        auto rep = boundary_of_subcomplex(
            ts,
            [](const CubeComplex& X) { return carrier(X, X.wall_index("x>=1")); },
            {3, 4, 5});
        CHECK(rep.sub.status == "STABLE");
        CHECK(rep.sub.count_of_dim(0) == 2);
        CHECK(rep.sub.count_of_dim(1) == 0);
        CHECK(rep.injective);
        CHECK(rep.dimension_preserving);
        const CubeComplex& top = ts.level(5);
        REQUIRE(rep.class_map.size() == 2);
        CHECK(rep.class_map[0] == *rep.full.class_containing(top.wall_index("y>=1")));
        CHECK(rep.class_map[1] == *rep.full.class_containing(top.wall_index("y<=-1")));
    }
    SECTION("the whole complex maps onto itself") {
        auto rep = boundary_of_subcomplex(
            ts,
            [](const CubeComplex& X) { return convex_hull(X, X.vertices()); },
            {3, 4, 5});
        CHECK(rep.sub.count_of_dim(0) == rep.full.count_of_dim(0));
        CHECK(rep.sub.count_of_dim(1) == rep.full.count_of_dim(1));
        CHECK(rep.injective);
        CHECK(rep.dimension_preserving);
    }
    SECTION("non-convex selections are rejected") {
        CHECK_THROWS_WITH(boundary_of_subcomplex(
                              ts,
                              [](const CubeComplex& X) {
                                  ConvexSubcomplex Y;
                                  Y.verts = {X.basepoint(),
                                             X.basepoint()
                                                 .with_flipped(X.wall_index("x>=1"))
                                                 .with_flipped(X.wall_index("y>=1"))};
                                  return Y;
                              },
                              {3, 4, 5}),
                          "subcomplex is not convex");
    }
}
