// Command-line front end: one complex, wallspace, or family file per
// invocation.  Exit codes: 0 success, 1 domain error (message names the
// violated precondition), 2 I/O or parse error.

#include "cubix/boundary.hpp"
#include "cubix/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace cubix;

namespace {

struct Input {
    std::optional<CubeComplex> complex;
    std::optional<Wallspace> wallspace;
    std::optional<TruncationSystem> family;
};

Input load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    std::istringstream head(text);
    std::string line, header;
    while (std::getline(head, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        header = line.substr(a);
        break;
    }

    Input input;
    std::istringstream body(text);
    if (header.rfind("cubix-complex", 0) == 0) {
        input.complex = parse_complex(body);
    } else if (header.rfind("cubix-wallspace", 0) == 0) {
        input.wallspace = parse_wallspace(body);
    } else if (header.rfind("cubix-family", 0) == 0) {
        input.family.emplace(parse_family(body));
    } else {
        throw parse_error("unrecognized input header: " + header);
    }
    return input;
}

// The complex a command operates on: either the file's complex or a family
// level selected with --radius.
const CubeComplex& complex_of(Input& input, const std::optional<std::size_t>& radius) {
    if (input.complex) return *input.complex;
    if (input.family) {
        if (!radius) throw domain_error("a family input needs --radius");
        return input.family->level(*radius);
    }
    throw domain_error("this command needs a complex or family input");
}

TruncationSystem& family_of(Input& input) {
    if (!input.family) throw domain_error("this command needs a family input");
    return *input.family;
}

std::vector<std::size_t> parse_size_list(const std::string& s, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw domain_error(std::string(what) + " list has a bad entry: " + tok);
        }
    }
    if (out.empty()) throw domain_error(std::string(what) + " list is empty");
    return out;
}

std::vector<std::size_t> walls_by_name(const CubeComplex& X, const std::string& list) {
    std::vector<std::size_t> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(X.wall_index(tok));
    if (out.empty()) throw domain_error("wall list is empty");
    return out;
}

std::string opt_num(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : "inf";
}

void print_check(const char* name, const CheckResult& c) {
    std::cout << name << ": " << (c.pass ? "pass" : "fail");
    if (!c.pass) std::cout << " (" << c.witness << ")";
    std::cout << "\n";
}

int cmd_validate(Input& input, const std::optional<std::size_t>& radius) {
    const CubeComplex& X = complex_of(input, radius);
    auto rep = validate(X);
    print_check("nonempty", rep.nonempty);
    print_check("connected", rep.connected);
    print_check("median-closed", rep.median_closed);
    print_check("isometric", rep.isometric);
    print_check("walls-nondegenerate", rep.walls_nondegenerate);
    std::cout << "method: " << rep.method << "\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_dual(Input& input) {
    if (input.wallspace) {
        write_complex(std::cout, dual_complex(*input.wallspace));
        return 0;
    }
    if (input.complex) {
        write_wallspace(std::cout, wallspace_of(*input.complex));
        return 0;
    }
    throw domain_error("dual needs a wallspace or complex input");
}

int cmd_hyperplanes(Input& input, const std::optional<std::size_t>& radius) {
    const CubeComplex& X = complex_of(input, radius);
    for (std::size_t i = 0; i < X.wall_count(); ++i) {
        std::size_t cr = 0, osc = 0;
        for (std::size_t j = 0; j < X.wall_count(); ++j) {
            if (i == j) continue;
            Contact c = contacts(X, i, j);
            if (c == Contact::Cross) ++cr;
            else if (c == Contact::Osculate) ++osc;
        }
        std::cout << "wall " << i << " name " << X.wall_name(i) << " crossings " << cr
                  << " osculations " << osc << "\n";
    }
    return 0;
}

int cmd_graph(Input& input, const std::optional<std::size_t>& radius, bool crossing,
              bool dot) {
    const CubeComplex& X = complex_of(input, radius);
    HypGraph G = crossing ? crossing_graph(X) : contact_graph(X);
    if (dot) {
        write_dot(std::cout, X, G);
        return 0;
    }
    std::cout << "graph " << (crossing ? "crossing" : "contact") << " walls " << G.n
              << "\n";
    for (std::size_t i = 0; i < G.n; ++i)
        for (std::size_t j = i + 1; j < G.n; ++j)
            if (G.edge(i, j))
                std::cout << "edge " << X.wall_name(i) << " " << X.wall_name(j) << "\n";
    return 0;
}

int cmd_diam(Input& input, const std::optional<std::size_t>& radius, bool crossing) {
    const CubeComplex& X = complex_of(input, radius);
    HypGraph G = crossing ? crossing_graph(X) : contact_graph(X);
    std::cout << opt_num(graph_diameter(G)) << "\n";
    return 0;
}

int cmd_decompose_product(Input& input, const std::optional<std::size_t>& radius) {
    const CubeComplex& X = complex_of(input, radius);
    auto parts = detect_join(X);
    if (!parts) throw domain_error("complex is not a product: crossing graph is not a join");
    auto rec = reconstruct_product(X, *parts);
    auto side = [&](const char* tag, const std::vector<std::size_t>& A) {
        std::cout << tag << ":";
        for (std::size_t w : A) std::cout << " " << X.wall_name(w);
        std::cout << "\n";
    };
    side("factor-1", parts->first);
    side("factor-2", parts->second);
    std::cout << "sizes: " << rec.Q1.size() << " x " << rec.Q2.size() << "\n";
    std::cout << "isomorphic: " << (rec.iso_verified ? "yes" : "no") << "\n";
    return 0;
}

int cmd_decompose_pseudo(Input& input, const std::optional<std::size_t>& radius,
                         const std::string& base, std::size_t k) {
    const CubeComplex& X = complex_of(input, radius);
    auto rep = pseudoproduct_layers(X, X.wall_index(base), k);
    std::cout << "base: " << base << "\nk: " << rep.k << "\ndepth: " << rep.depth
              << "\n";
    for (std::size_t i = 0; i < rep.layers.size(); ++i) {
        const auto& l = rep.layers[i];
        std::cout << "layer " << i << ": V1=" << l.V1.size() << " V2=" << l.V2.size()
                  << " max-grade=" << l.max_grade << " section="
                  << (l.section_ok ? "ok" : "fail") << " v2-large="
                  << (l.v2_large ? "yes" : "no") << " essential="
                  << (l.product_walls_essential ? "yes" : "no") << " crossings="
                  << (l.crossings_ok ? "ok" : "fail") << "\n";
    }
    std::cout << "carrier-terminal: " << (rep.carrier_terminal ? "yes" : "no") << "\n";
    std::cout << "all-flags: " << (rep.all_flags() ? "yes" : "no") << "\n";
    return 0;
}

Bitvec vertex_arg(const CubeComplex& X, const std::string& s) {
    Bitvec v = Bitvec::from_string(s);
    if (v.size() != X.wall_count())
        throw domain_error("vertex string length must equal the wall count");
    if (!X.contains(v)) throw domain_error("vertex not in the complex: " + s);
    return v;
}

int cmd_hull(Input& input, const std::optional<std::size_t>& radius,
             const std::vector<std::string>& verts) {
    const CubeComplex& X = complex_of(input, radius);
    std::vector<Bitvec> A;
    for (const auto& s : verts) A.push_back(vertex_arg(X, s));
    auto Y = convex_hull(X, A);
    std::cout << "vertices: " << Y.verts.size() << "\n";
    for (const auto& v : Y.verts) std::cout << v.to_string() << "\n";
    return 0;
}

int cmd_gate(Input& input, const std::optional<std::size_t>& radius,
             const std::string& from, const std::vector<std::string>& target) {
    const CubeComplex& X = complex_of(input, radius);
    Bitvec x = vertex_arg(X, from);
    std::vector<Bitvec> A;
    for (const auto& s : target) A.push_back(vertex_arg(X, s));
    auto Y = convex_hull(X, A);
    Bitvec g = gate(X, x, Y);
    std::cout << g.to_string() << "\n";
    std::cout << "distance: " << x.hamming(g) << "\n";
    return 0;
}

int cmd_geodesic(Input& input, const std::optional<std::size_t>& radius,
                 const std::string& from, const std::string& to) {
    const CubeComplex& X = complex_of(input, radius);
    Path P = bfs_geodesic(X, vertex_arg(X, from), vertex_arg(X, to));
    std::cout << "length: " << path_length(P) << "\n";
    for (const auto& v : P) std::cout << v.to_string() << "\n";
    return 0;
}

int cmd_divergence(Input& input, const std::string& ray_a, const std::string& ray_b,
                   std::size_t rmax, std::optional<std::size_t> radius, bool csv) {
    TruncationSystem& ts = family_of(input);
    std::size_t r = radius.value_or(rmax + 2);
    const CubeComplex& X = ts.level(r);
    Path g1 = canonical_ray(ts, ray_a, r);
    Path g2 = canonical_ray(ts, ray_b, r);
    auto prof = divergence_profile(X, g1, g2, rmax);
    if (csv) {
        write_csv(std::cout, prof);
        return 0;
    }
    for (std::size_t i = 0; i < prof.values.size(); ++i)
        std::cout << "r " << i << " dive " << opt_num(prof.values[i]) << "\n";
    return 0;
}

int cmd_trichotomy(Input& input, const std::string& ray, std::size_t radius,
                   const std::string& rrange, std::size_t p_cap) {
    TruncationSystem& ts = family_of(input);
    const CubeComplex& X = ts.level(radius);
    Path P = canonical_ray(ts, ray, radius);
    auto rep = trichotomy_report(X, P, parse_size_list(rrange, "R"), p_cap);
    std::cout << "qi-estimate: " << rep.qi_estimate << "\n";
    std::cout << "p: " << rep.p << " (" << (rep.p_exact ? "exact" : "lower-bound")
              << ")\n";
    for (auto [R, d] : rep.dwell) std::cout << "dwell R=" << R << ": " << d << "\n";
    return 0;
}

int cmd_boundary(Input& input, const std::string& radii, std::size_t theta,
                 std::size_t window) {
    TruncationSystem& ts = family_of(input);
    auto B = boundary_complex(ts, parse_size_list(radii, "radii"), theta, window);
    std::cout << "radii: " << radii << "\ntheta: " << B.theta << "\nwindow: "
              << B.window << "\nstatus: " << B.status << "\ncertificate: "
              << (B.certified ? "PRESENT" : "ABSENT") << "\nflag-property: "
              << (B.flag_property ? "yes" : "no") << "\nsimplices: "
              << B.simplices.size() << "\n";
    for (const auto& s : B.simplices) {
        std::cout << "\nsimplex: " << s.id << "\ndim: " << s.dim << "\nvertices:";
        for (std::size_t v : s.vertices) std::cout << " " << v;
        std::cout << "\nfaces:";
        if (s.faces.empty()) std::cout << " -";
        for (std::size_t f : s.faces) std::cout << " " << f;
        std::cout << "\nwalls: " << s.walls.size() << "\nsample:";
        for (const auto& n : s.wall_sample) std::cout << " " << n;
        std::cout << "\n";
    }
    return 0;
}

int cmd_eta(Input& input, std::size_t u, std::size_t v, const std::string& radii,
            std::size_t theta, std::size_t window) {
    TruncationSystem& ts = family_of(input);
    auto B = boundary_complex(ts, parse_size_list(radii, "radii"), theta, window);
    std::cout << opt_num(eta_distance(B, u, v)) << "\n";
    return 0;
}

int cmd_visibility(Input& input, const std::optional<std::size_t>& radius,
                   const std::string& walls, std::size_t threshold) {
    const CubeComplex& X = complex_of(input, radius);
    auto rep = visibility_report(X, walls_by_name(X, walls), threshold);
    std::cout << "stages: " << rep.stages.size() << "\nreached: " << rep.stages_reached
              << "\nfull-depth: " << (rep.full_depth ? "yes" : "no") << "\nmin-start:";
    for (std::size_t s : rep.min_start) {
        std::cout << " ";
        if (s == SIZE_MAX) std::cout << "-";
        else std::cout << s;
    }
    const char* verdict = rep.verdict == Visibility::VisibleAtScale ? "visible-at-scale"
                          : rep.verdict == Visibility::Escaping     ? "escaping"
                                                                    : "inconclusive";
    std::cout << "\nverdict: " << verdict << "\n";
    return 0;
}

int cmd_completeness(Input& input, const std::optional<std::size_t>& radius,
                     std::size_t depth) {
    CompletenessReport rep;
    const CubeComplex* X = nullptr;
    if (input.family) {
        if (!radius) throw domain_error("a family input needs --radius");
        X = &input.family->level(*radius);
        rep = completeness_check_two_level(*X, input.family->level(*radius + depth),
                                           depth);
    } else {
        X = &complex_of(input, radius);
        rep = completeness_check(*X, depth);
    }
    std::cout << "depth: " << rep.depth << "\ncomplete: "
              << (rep.complete() ? "yes" : "no") << "\n";
    for (const auto& f : rep.failures) {
        std::cout << "failure:";
        for (std::size_t w : f.clique) std::cout << " " << X->wall_name(w);
        std::cout << " orientation " << f.orientation.to_string() << " best-distance "
                  << f.best_distance << "\n";
    }
    return 0;
}

int cmd_witness_eighth(Input& input, const std::string& ray, std::size_t radius,
                       const std::string& base) {
    TruncationSystem& ts = family_of(input);
    const CubeComplex& X = ts.level(radius);
    Path P = canonical_ray(ts, ray, radius);
    std::size_t h0 = base.empty() ? path_walls(P).front() : X.wall_index(base);
    auto w = eighth_flat_witness(X, P, h0);
    std::cout << "ok: " << (w.ok ? "yes" : "no") << "\n";
    if (!w.ok) std::cout << "reason: " << w.reason << "\n";
    std::cout << "max-gate-distance: " << w.max_gate_dist << "\nhas-square: "
              << (w.has_square ? "yes" : "no") << "\nlabel: "
              << (w.label.empty() ? "-" : w.label) << "\nstrip-vertices: "
              << w.verts.size() << "\n";
    return 0;
}

int cmd_witness_orthant(Input& input, const std::string& rays, std::size_t radius) {
    TruncationSystem& ts = family_of(input);
    const CubeComplex& X = ts.level(radius);
    std::vector<Path> R;
    std::stringstream ss(rays);
    std::string tok;
    while (std::getline(ss, tok, ',')) R.push_back(canonical_ray(ts, tok, radius));
    auto w = orthant_witness(X, R);
    std::cout << "ok: " << (w.ok ? "yes" : "no") << "\n";
    if (!w.ok)
        std::cout << "reason: " << w.reason << "\npair: " << w.witness.first << " "
                  << w.witness.second << "\n";
    std::cout << "dims:";
    for (std::size_t d : w.dims) std::cout << " " << d;
    std::cout << "\ngrid: " << w.grid.size() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cube complex toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::optional<std::size_t> radius;
    auto add_input = [&](CLI::App* sub, bool with_radius = true) {
        sub->add_option("file", path, "input file")->required();
        if (with_radius)
            sub->add_option("--radius", radius, "truncation radius for family inputs");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the complex axioms");
    add_input(validate_cmd);

    auto* dual_cmd = app.add_subcommand("dual", "wallspace <-> complex duality");
    add_input(dual_cmd, false);

    auto* hyp_cmd = app.add_subcommand("hyperplanes", "list walls with contact counts");
    add_input(hyp_cmd);

    bool g_crossing = false, g_contact = false, g_dot = false;
    auto* graph_cmd = app.add_subcommand("graph", "contact or crossing graph");
    add_input(graph_cmd);
    graph_cmd->add_flag("--crossing", g_crossing, "crossing graph");
    graph_cmd->add_flag("--contact", g_contact, "contact graph");
    graph_cmd->add_flag("--dot", g_dot, "DOT output");

    bool d_crossing = false, d_contact = false;
    auto* diam_cmd = app.add_subcommand("diam", "graph diameter");
    add_input(diam_cmd);
    diam_cmd->add_flag("--crossing", d_crossing, "crossing graph");
    diam_cmd->add_flag("--contact", d_contact, "contact graph");

    bool dec_product = false, dec_pseudo = false;
    std::string dec_base;
    std::size_t dec_k = 3;
    auto* dec_cmd = app.add_subcommand("decompose", "product or pseudoproduct layers");
    add_input(dec_cmd);
    dec_cmd->add_flag("--product", dec_product, "join/product factorization");
    dec_cmd->add_flag("--pseudoproduct", dec_pseudo, "iterated pseudoproduct layers");
    dec_cmd->add_option("--base", dec_base, "base wall name");
    dec_cmd->add_option("-k", dec_k, "crossing threshold");

    std::vector<std::string> hull_verts;
    auto* hull_cmd = app.add_subcommand("hull", "convex hull of vertices");
    add_input(hull_cmd);
    hull_cmd->add_option("vertices", hull_verts, "0/1 vertex strings")->required();

    std::string gate_from;
    std::vector<std::string> gate_target;
    auto* gate_cmd = app.add_subcommand("gate", "gate of a vertex in a hull");
    add_input(gate_cmd);
    gate_cmd->add_option("vertex", gate_from, "source vertex")->required();
    gate_cmd->add_option("target", gate_target, "hull vertices")->required();

    std::string geo_from, geo_to;
    auto* geo_cmd = app.add_subcommand("geodesic", "breadth-first geodesic");
    add_input(geo_cmd);
    geo_cmd->add_option("from", geo_from, "start vertex")->required();
    geo_cmd->add_option("to", geo_to, "end vertex")->required();

    std::string div_a, div_b;
    std::size_t div_rmax = 0;
    bool div_csv = false;
    auto* div_cmd = app.add_subcommand("divergence", "r-avoiding divergence profile");
    add_input(div_cmd);
    div_cmd->add_option("--rayA", div_a, "first canonical ray")->required();
    div_cmd->add_option("--rayB", div_b, "second canonical ray")->required();
    div_cmd->add_option("--rmax", div_rmax, "largest radius")->required();
    div_cmd->add_flag("--csv", div_csv, "CSV output");

    std::string tri_ray, tri_rrange = "0,1,2";
    std::size_t tri_radius = 0, tri_pcap = 6;
    auto* tri_cmd = app.add_subcommand("trichotomy", "ray trichotomy measurements");
    add_input(tri_cmd, false);
    tri_cmd->add_option("--ray", tri_ray, "canonical ray name")->required();
    tri_cmd->add_option("--radius", tri_radius, "truncation radius")->required();
    tri_cmd->add_option("--rrange", tri_rrange, "dwell radii list");
    tri_cmd->add_option("--pcap", tri_pcap, "exhaustive bipartite search cap");

    std::string b_radii;
    std::size_t b_theta = 2, b_window = 3;
    auto* bdy_cmd = app.add_subcommand("boundary", "boundary complex approximation");
    add_input(bdy_cmd, false);
    bdy_cmd->add_option("--radii", b_radii, "comma list of radii")->required();
    bdy_cmd->add_option("--theta", b_theta, "tolerance");
    bdy_cmd->add_option("--window", b_window, "certification window");

    std::size_t eta_u = 0, eta_v = 0;
    std::string eta_radii;
    std::size_t eta_theta = 2, eta_window = 3;
    auto* eta_cmd = app.add_subcommand("eta", "simplicial boundary distance");
    eta_cmd->add_option("u", eta_u, "simplex id")->required();
    eta_cmd->add_option("v", eta_v, "simplex id")->required();
    eta_cmd->add_option("file", path, "family file")->required();
    eta_cmd->add_option("--radii", eta_radii, "comma list of radii")->required();
    eta_cmd->add_option("--theta", eta_theta, "tolerance");
    eta_cmd->add_option("--window", eta_window, "certification window");

    std::string vis_walls;
    std::size_t vis_threshold = 2;
    auto* vis_cmd = app.add_subcommand("visibility", "visibility filtration verdict");
    add_input(vis_cmd);
    vis_cmd->add_option("--walls", vis_walls, "comma list of wall names")->required();
    vis_cmd->add_option("--threshold", vis_threshold, "start threshold");

    std::size_t comp_depth = 1;
    auto* comp_cmd = app.add_subcommand("completeness", "geodesic completeness check");
    add_input(comp_cmd);
    comp_cmd->add_option("--depth", comp_depth, "reach depth")->required();

    bool wit_eighth = false, wit_orthant = false;
    std::string wit_ray, wit_base, wit_rays;
    std::size_t wit_radius = 0;
    auto* wit_cmd = app.add_subcommand("witness", "strip or orthant witness");
    add_input(wit_cmd, false);
    wit_cmd->add_flag("--eighth-flat", wit_eighth, "staircase strip witness");
    wit_cmd->add_flag("--orthant", wit_orthant, "crossing ray grid witness");
    wit_cmd->add_option("--ray", wit_ray, "canonical ray name");
    wit_cmd->add_option("--rays", wit_rays, "comma list of canonical rays");
    wit_cmd->add_option("--base", wit_base, "base wall name");
    wit_cmd->add_option("--radius", wit_radius, "truncation radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Input input;
        if (!path.empty()) input = load_input(path);

        if (validate_cmd->parsed()) return cmd_validate(input, radius);
        if (dual_cmd->parsed()) return cmd_dual(input);
        if (hyp_cmd->parsed()) return cmd_hyperplanes(input, radius);
        if (graph_cmd->parsed()) {
            if (g_crossing == g_contact)
                throw domain_error("choose exactly one of --contact and --crossing");
            return cmd_graph(input, radius, g_crossing, g_dot);
        }
        if (diam_cmd->parsed()) {
            if (d_crossing == d_contact)
                throw domain_error("choose exactly one of --contact and --crossing");
            return cmd_diam(input, radius, d_crossing);
        }
        if (dec_cmd->parsed()) {
            if (dec_product == dec_pseudo)
                throw domain_error("choose exactly one of --product and --pseudoproduct");
            if (dec_product) return cmd_decompose_product(input, radius);
            if (dec_base.empty())
                throw domain_error("--pseudoproduct needs --base <wall>");
            return cmd_decompose_pseudo(input, radius, dec_base, dec_k);
        }
        if (hull_cmd->parsed()) return cmd_hull(input, radius, hull_verts);
        if (gate_cmd->parsed()) return cmd_gate(input, radius, gate_from, gate_target);
        if (geo_cmd->parsed()) return cmd_geodesic(input, radius, geo_from, geo_to);
        if (div_cmd->parsed())
            return cmd_divergence(input, div_a, div_b, div_rmax, radius, div_csv);
        if (tri_cmd->parsed())
            return cmd_trichotomy(input, tri_ray, tri_radius, tri_rrange, tri_pcap);
        if (bdy_cmd->parsed()) return cmd_boundary(input, b_radii, b_theta, b_window);
        if (eta_cmd->parsed())
            return cmd_eta(input, eta_u, eta_v, eta_radii, eta_theta, eta_window);
        if (vis_cmd->parsed()) return cmd_visibility(input, radius, vis_walls, vis_threshold);
        if (comp_cmd->parsed()) return cmd_completeness(input, radius, comp_depth);
        if (wit_cmd->parsed()) {
            if (wit_eighth == wit_orthant)
                throw domain_error("choose exactly one of --eighth-flat and --orthant");
            if (wit_radius == 0) throw domain_error("witness needs --radius");
            if (wit_eighth) {
                if (wit_ray.empty()) throw domain_error("--eighth-flat needs --ray");
                return cmd_witness_eighth(input, wit_ray, wit_radius, wit_base);
            }
            if (wit_rays.empty()) throw domain_error("--orthant needs --rays");
            return cmd_witness_orthant(input, wit_rays, wit_radius);
        }
        throw domain_error("no subcommand selected");
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
