// End-to-end tests for the command-line binary: each subcommand is run
// against small input files written to a temp directory, and stdout plus the
// exit code are compared byte-for-byte against frozen outputs.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef CUBIX_CLI_PATH
#error "CUBIX_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(CUBIX_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Writes the input corpus once and hands out paths.
class Corpus {
  public:
    Corpus() {
        dir_ = std::filesystem::temp_directory_path() / "cubix-cli-inputs";
        std::filesystem::create_directories(dir_);
        put("square.complex", "cubix-complex v1\nwalls 2\n00\n01\n10\n11\n");
        put("discon.complex", "cubix-complex v1\nwalls 2\n00\n11\n");
        put("square.wallspace",
            "cubix-wallspace v1\npoints a b c d\nwall v: a b\nwall h: a c\n");
        put("flat.family", "cubix-family v1\nkind flat\n");
        put("eighth.family", "cubix-family v1\nkind eighth_flat\nparam f=1,2,3\n");
        put("tree3.family", "cubix-family v1\nkind tree\nparam degree=3\n");
        put("spiral3.family", "cubix-family v1\nkind spiral\nparam stages=3\n");
        put("bogus.txt", "not-a-known-header\n");
    }
    std::string at(const std::string& name) const { return (dir_ / name).string(); }

  private:
    void put(const std::string& name, const std::string& text) {
        std::ofstream out(dir_ / name);
        out << text;
    }
    std::filesystem::path dir_;
};

const Corpus& corpus() {
    static Corpus c;
    return c;
}

} // namespace

TEST_CASE("cli validate reports per-check results") {
    auto ok = run("validate " + corpus().at("square.complex"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out ==
          "nonempty: pass\n"
          "connected: pass\n"
          "median-closed: pass\n"
          "isometric: pass\n"
          "walls-nondegenerate: pass\n"
          "method: exhaustive\n");

    auto bad = run("validate " + corpus().at("discon.complex"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out ==
          "nonempty: pass\n"
          "connected: fail (vertex 11 unreachable from 00)\n"
          "median-closed: pass\n"
          "isometric: pass\n"
          "walls-nondegenerate: pass\n"
          "method: exhaustive\n");
}

TEST_CASE("cli dual converts in both directions") {
    auto to_complex = run("dual " + corpus().at("square.wallspace"));
    CHECK(to_complex.exit_code == 0);
    CHECK(to_complex.out == "cubix-complex v1\nwalls 2\n00\n01\n10\n11\n");

    auto to_walls = run("dual " + corpus().at("square.complex"));
    CHECK(to_walls.exit_code == 0);
    CHECK(to_walls.out ==
          "cubix-wallspace v1\npoints 00 01 10 11\nwall w0: 00 01\nwall w1: 00 10\n");
}

TEST_CASE("cli hyperplanes lists contact counts") {
    auto r = run("hyperplanes " + corpus().at("square.complex"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "wall 0 name w0 crossings 1 osculations 0\n"
          "wall 1 name w1 crossings 1 osculations 0\n");
}

TEST_CASE("cli graph prints edges or DOT") {
    auto text = run("graph --contact " + corpus().at("square.complex"));
    CHECK(text.exit_code == 0);
    CHECK(text.out == "graph contact walls 2\nedge w0 w1\n");

    auto dot = run("graph --crossing --dot " + corpus().at("square.complex"));
    CHECK(dot.exit_code == 0);
    CHECK(dot.out ==
          "graph crossing {\n  \"w0\";\n  \"w1\";\n  \"w0\" -- \"w1\";\n}\n");

    auto neither = run("graph " + corpus().at("square.complex"), true);
    CHECK(neither.exit_code == 1);
    CHECK(neither.out == "error: choose exactly one of --contact and --crossing\n");
}

TEST_CASE("cli diam on the three-stage spiral at radius 16") {
    auto r = run("diam --crossing " + corpus().at("spiral3.family") + " --radius 16");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("cli decompose --product factors a flat and rejects a tree") {
    auto flat = run("decompose --product " + corpus().at("flat.family") + " --radius 2");
    CHECK(flat.exit_code == 0);
    CHECK(flat.out ==
          "factor-1: x>=1 x<=-1 x>=2 x<=-2\n"
          "factor-2: y>=1 y<=-1 y>=2 y<=-2\n"
          "sizes: 5 x 5\n"
          "isomorphic: yes\n");

    auto tree = run("decompose --product " + corpus().at("tree3.family") + " --radius 2",
                    true);
    CHECK(tree.exit_code == 1);
    CHECK(tree.out == "error: complex is not a product: crossing graph is not a join\n");
}

TEST_CASE("cli decompose --pseudoproduct layers a flat truncation") {
    auto r = run("decompose --pseudoproduct --base \"x>=1\" -k 2 " +
                 corpus().at("flat.family") + " --radius 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "base: x>=1\n"
          "k: 2\n"
          "depth: 1\n"
          "layer 0: V1=9 V2=7 max-grade=2 section=ok v2-large=yes essential=yes "
          "crossings=ok\n"
          "carrier-terminal: yes\n"
          "all-flags: yes\n");
}

TEST_CASE("cli hull, gate and geodesic") {
    auto hull = run("hull " + corpus().at("flat.family") +
                    " --radius 2 00010001 01000100");
    CHECK(hull.exit_code == 0);
    CHECK(hull.out ==
          "vertices: 9\n"
          "00000000\n00010000\n00010001\n01000000\n01000100\n01010000\n"
          "01010001\n01010100\n01010101\n");

    auto g = run("gate " + corpus().at("flat.family") +
                 " --radius 2 01010101 00010001 00010000");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "00010001\ndistance: 2\n");

    auto geo = run("geodesic " + corpus().at("flat.family") +
                   " --radius 2 01000100 00010001");
    CHECK(geo.exit_code == 0);
    CHECK(geo.out ==
          "length: 4\n01000100\n01000000\n00000000\n00010000\n00010001\n");
}

TEST_CASE("cli divergence in text and csv form") {
    std::string base = "divergence --rayA \"axis:+x\" --rayB \"axis:-x\" --rmax 4 " +
                       corpus().at("flat.family");
    auto text = run(base);
    CHECK(text.exit_code == 0);
    CHECK(text.out ==
          "r 0 dive 0\nr 1 dive 4\nr 2 dive 8\nr 3 dive 12\nr 4 dive 16\n");

    auto csv = run(base + " --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "r,dive\n0,0\n1,4\n2,8\n3,12\n4,16\n");
}

TEST_CASE("cli trichotomy on the flat diagonal") {
    auto r = run("trichotomy --ray diagonal --radius 4 " + corpus().at("flat.family"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "qi-estimate: 0.666667\n"
          "p: 2 (exact)\n"
          "dwell R=0: 3\ndwell R=1: 4\ndwell R=2: 4\n");
}

TEST_CASE("cli boundary prints the certified four-cycle of the flat") {
    auto r = run("boundary --radii 8,12,16 " + corpus().at("flat.family"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "radii: 8,12,16\ntheta: 2\nwindow: 3\nstatus: STABLE\n"
          "certificate: PRESENT\nflag-property: yes\nsimplices: 8\n"
          "\nsimplex: 0\ndim: 0\nvertices: 0\nfaces: -\nwalls: 16\n"
          "sample: x>=1 x>=2 x>=3 x>=4 x>=5 x>=6 x>=7 x>=8\n"
          "\nsimplex: 1\ndim: 0\nvertices: 1\nfaces: -\nwalls: 16\n"
          "sample: x<=-1 x<=-2 x<=-3 x<=-4 x<=-5 x<=-6 x<=-7 x<=-8\n"
          "\nsimplex: 2\ndim: 0\nvertices: 2\nfaces: -\nwalls: 16\n"
          "sample: y>=1 y>=2 y>=3 y>=4 y>=5 y>=6 y>=7 y>=8\n"
          "\nsimplex: 3\ndim: 0\nvertices: 3\nfaces: -\nwalls: 16\n"
          "sample: y<=-1 y<=-2 y<=-3 y<=-4 y<=-5 y<=-6 y<=-7 y<=-8\n"
          "\nsimplex: 4\ndim: 1\nvertices: 0 2\nfaces: 2 0\nwalls: 32\n"
          "sample: x>=1 y>=1 x>=2 y>=2 x>=3 y>=3 x>=4 y>=4\n"
          "\nsimplex: 5\ndim: 1\nvertices: 0 3\nfaces: 3 0\nwalls: 32\n"
          "sample: x>=1 y<=-1 x>=2 y<=-2 x>=3 y<=-3 x>=4 y<=-4\n"
          "\nsimplex: 6\ndim: 1\nvertices: 1 2\nfaces: 2 1\nwalls: 32\n"
          "sample: x<=-1 y>=1 x<=-2 y>=2 x<=-3 y>=3 x<=-4 y>=4\n"
          "\nsimplex: 7\ndim: 1\nvertices: 1 3\nfaces: 3 1\nwalls: 32\n"
          "sample: x<=-1 y<=-1 x<=-2 y<=-2 x<=-3 y<=-3 x<=-4 y<=-4\n");
}

TEST_CASE("cli eta measures boundary distance") {
    auto opp = run("eta 0 1 " + corpus().at("flat.family") + " --radii 4,6,8");
    CHECK(opp.exit_code == 0);
    CHECK(opp.out == "3\n");

    auto inf = run("eta 0 1 " + corpus().at("tree3.family") + " --radii 2,3,4");
    CHECK(inf.exit_code == 0);
    CHECK(inf.out == "inf\n");

    auto bad = run("eta 0 99 " + corpus().at("flat.family") + " --radii 4,6,8", true);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "error: unknown simplex id\n");
}

TEST_CASE("cli visibility distinguishes visible and escaping families") {
    auto vis = run("visibility --walls \"x>=1,x>=2,x>=3,x>=4\" " +
                   corpus().at("flat.family") + " --radius 4");
    CHECK(vis.exit_code == 0);
    CHECK(vis.out ==
          "stages: 4\nreached: 4\nfull-depth: yes\nmin-start: 0 0 0 0\n"
          "verdict: visible-at-scale\n");

    auto esc = run("visibility --walls \"y>=1,y>=2,y>=3,y>=4,y>=5,y>=6,y>=7,y>=8\" " +
                   corpus().at("eighth.family") + " --radius 8");
    CHECK(esc.exit_code == 0);
    CHECK(esc.out ==
          "stages: 8\nreached: 8\nfull-depth: yes\nmin-start: 0 1 2 3 4 5 6 7\n"
          "verdict: escaping\n");
}

TEST_CASE("cli completeness on complex and family inputs") {
    auto sq = run("completeness --depth 1 " + corpus().at("square.complex"));
    CHECK(sq.exit_code == 0);
    CHECK(sq.out ==
          "depth: 1\ncomplete: no\n"
          "failure: w0 w1 orientation 00 best-distance 0\n"
          "failure: w0 w1 orientation 10 best-distance 0\n"
          "failure: w0 w1 orientation 01 best-distance 0\n"
          "failure: w0 w1 orientation 11 best-distance 0\n");

    auto fam = run("completeness --depth 2 " + corpus().at("flat.family") +
                   " --radius 3");
    CHECK(fam.exit_code == 0);
    CHECK(fam.out == "depth: 2\ncomplete: yes\n");
}

TEST_CASE("cli witness subcommands") {
    auto strip = run("witness --eighth-flat --ray top --radius 8 " +
                     corpus().at("eighth.family"));
    CHECK(strip.exit_code == 0);
    CHECK(strip.out ==
          "ok: yes\nmax-gate-distance: 3\nhas-square: yes\nlabel: -\n"
          "strip-vertices: 15\n");

    auto tree = run("witness --eighth-flat --ray end:0 --radius 4 " +
                    corpus().at("tree3.family"));
    CHECK(tree.exit_code == 0);
    CHECK(tree.out ==
          "ok: yes\nmax-gate-distance: 3\nhas-square: no\nlabel: bounded-f\n"
          "strip-vertices: 5\n");

    auto grid = run("witness --orthant --rays \"axis:+x,axis:+y\" --radius 5 " +
                    corpus().at("flat.family"));
    CHECK(grid.exit_code == 0);
    CHECK(grid.out == "ok: yes\ndims: 5 5\ngrid: 36\n");

    auto bad = run("witness --orthant --rays \"end:0,end:1\" --radius 3 " +
                   corpus().at("tree3.family"));
    CHECK(bad.exit_code == 0);
    CHECK(bad.out ==
          "ok: no\nreason: walls of distinct rays fail to cross\npair: 0 1\n"
          "dims: 3 3\ngrid: 0\n");
}

TEST_CASE("cli exit codes for i/o, parse and domain failures") {
    CHECK(run("validate /nonexistent/file.complex", true).exit_code == 2);
    CHECK(run("validate " + corpus().at("bogus.txt"), true).exit_code == 2);
    CHECK(run("frobnicate x", true).exit_code == 2);
    CHECK(run("--help").exit_code == 0);

    auto noradius = run("validate " + corpus().at("flat.family"), true);
    CHECK(noradius.exit_code == 1);
    CHECK(noradius.out == "error: a family input needs --radius\n");

    auto fewradii = run("boundary --radii 4 " + corpus().at("flat.family"), true);
    CHECK(fewradii.exit_code == 1);
    CHECK(fewradii.out == "error: boundary approximation needs at least two radii\n");
}
