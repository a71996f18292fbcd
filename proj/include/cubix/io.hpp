#pragma once

// Text formats:
//   cubix-complex v1    — "walls m" then one 0/1 line per vertex
//   cubix-wallspace v1  — "points p1 p2 ..." then "wall <name>: p_i p_j ..."
// '#' starts a comment line; line order is not significant; ASCII only.

#include "cubix/complex.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cubix {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string strip(const std::string& line) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}
inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}
} // namespace detail

inline CubeComplex parse_complex(std::istream& in) {
    std::string line;
    long walls = -1;
    std::vector<Bitvec> verts;
    while (std::getline(in, line)) {
        line = detail::strip(line);
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::tokens(line);
        if (toks[0] == "cubix-complex") continue;
        if (toks[0] == "walls") {
            if (toks.size() != 2) throw parse_error("malformed walls line: " + line);
            try { walls = std::stol(toks[1]); }
            catch (...) { throw parse_error("malformed walls line: " + line); }
            continue;
        }
        if (toks.size() != 1 || toks[0].find_first_not_of("01") != std::string::npos)
            throw parse_error("expected a 0/1 vertex line, got: " + line);
        verts.push_back(Bitvec::from_string(toks[0]));
    }
    if (walls < 0) throw parse_error("missing 'walls m' header");
    for (const auto& v : verts)
        if (v.size() != static_cast<std::size_t>(walls))
            throw parse_error("vertex length does not match wall count");
    return CubeComplex(static_cast<std::size_t>(walls), std::move(verts));
}

inline void write_complex(std::ostream& out, const CubeComplex& X) {
    out << "cubix-complex v1\n";
    out << "walls " << X.wall_count() << "\n";
    for (const auto& v : X.vertices()) out << v.to_string() << "\n";
}

inline Wallspace parse_wallspace(std::istream& in) {
    std::string line;
    Wallspace ws;
    bool have_points = false;
    std::vector<std::pair<std::string, std::vector<std::string>>> raw_walls;
    while (std::getline(in, line)) {
        line = detail::strip(line);
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::tokens(line);
        if (toks[0] == "cubix-wallspace") continue;
        if (toks[0] == "points") {
            ws.points.assign(toks.begin() + 1, toks.end());
            have_points = true;
            continue;
        }
        if (toks[0] == "wall") {
            if (toks.size() < 2 || toks[1].back() != ':')
                throw parse_error("malformed wall line: " + line);
            std::string name = toks[1].substr(0, toks[1].size() - 1);
            raw_walls.emplace_back(name,
                                   std::vector<std::string>(toks.begin() + 2, toks.end()));
            continue;
        }
        throw parse_error("unrecognized line: " + line);
    }
    if (!have_points) throw parse_error("missing 'points' header");
    for (auto& [name, members] : raw_walls) {
        Bitvec h(ws.points.size());
        for (const auto& p : members) {
            bool found = false;
            for (std::size_t i = 0; i < ws.points.size(); ++i)
                if (ws.points[i] == p) { h.set(i, true); found = true; break; }
            if (!found) throw parse_error("wall " + name + " names unknown point " + p);
        }
        ws.wall_names.push_back(name);
        ws.halfspaces.push_back(h);
    }
    return ws;
}

inline void write_wallspace(std::ostream& out, const Wallspace& ws) {
    out << "cubix-wallspace v1\n";
    out << "points";
    for (const auto& p : ws.points) out << ' ' << p;
    out << "\n";
    for (std::size_t w = 0; w < ws.halfspaces.size(); ++w) {
        out << "wall " << (w < ws.wall_names.size() ? ws.wall_names[w]
                                                    : "w" + std::to_string(w))
            << ":";
        for (std::size_t i = 0; i < ws.points.size(); ++i)
            if (ws.halfspaces[w].get(i)) out << ' ' << ws.points[i];
        out << "\n";
    }
}

} // namespace cubix
