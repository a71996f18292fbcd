#pragma once

// Shared builders for the test suites.

#include "cubix/complex.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace testhelpers {

inline cubix::CubeComplex cc(std::size_t walls, std::initializer_list<const char*> verts) {
    std::vector<cubix::Bitvec> v;
    for (const char* s : verts) v.push_back(cubix::Bitvec::from_string(s));
    return cubix::CubeComplex(walls, std::move(v));
}

// Path with k walls: vertices 0^k, 10^{k-1}, ..., 1^k.
inline cubix::CubeComplex path_complex(std::size_t k) {
    std::vector<cubix::Bitvec> v;
    for (std::size_t i = 0; i <= k; ++i) {
        cubix::Bitvec b(k);
        for (std::size_t j = 0; j < i; ++j) b.set(j, true);
        v.push_back(b);
    }
    return cubix::CubeComplex(k, std::move(v));
}

// Grid with nv vertical and nh horizontal walls (a (nv+1) x (nh+1) vertex
// lattice).  Wall indices: verticals 0..nv-1, horizontals nv..nv+nh-1.
// Vertex (x, y) sets the first x vertical and first y horizontal bits.
inline cubix::Bitvec grid_vertex(std::size_t nv, std::size_t nh, std::size_t x,
                                 std::size_t y) {
    cubix::Bitvec b(nv + nh);
    for (std::size_t i = 0; i < x; ++i) b.set(i, true);
    for (std::size_t j = 0; j < y; ++j) b.set(nv + j, true);
    return b;
}

inline cubix::CubeComplex grid(std::size_t nv, std::size_t nh) {
    std::vector<cubix::Bitvec> v;
    for (std::size_t x = 0; x <= nv; ++x)
        for (std::size_t y = 0; y <= nh; ++y) v.push_back(grid_vertex(nv, nh, x, y));
    return cubix::CubeComplex(nv + nh, std::move(v));
}

// Star with k leaves: center 0^k, leaf i flips bit i (the tripod when k=3).
inline cubix::CubeComplex star_complex(std::size_t k) {
    std::vector<cubix::Bitvec> v;
    cubix::Bitvec center(k);
    v.push_back(center);
    for (std::size_t i = 0; i < k; ++i) v.push_back(center.with_flipped(i));
    return cubix::CubeComplex(k, std::move(v));
}

struct TreeBuild {
    cubix::CubeComplex X;
    // Ray from the root into each root subtree, always taking the first child.
    std::vector<std::vector<cubix::Bitvec>> root_rays;
};

// Rooted tree: the root has root_degree children, every other internal node
// has root_degree - 1 children, to the given depth.  One wall per edge;
// vertex bits are the edges on the root path.
inline TreeBuild tree_complex(std::size_t root_degree, std::size_t depth) {
    std::vector<std::vector<std::size_t>> node_paths{{}};
    std::size_t walls = 0;
    std::vector<std::vector<std::size_t>> first_child_chains(root_degree);
    auto build = [&](auto&& self, const std::vector<std::size_t>& path, std::size_t d,
                     std::size_t nchildren, std::vector<std::size_t>* chain) -> void {
        if (d == 0) return;
        for (std::size_t c = 0; c < nchildren; ++c) {
            std::size_t w = walls++;
            auto child = path;
            child.push_back(w);
            node_paths.push_back(child);
            std::vector<std::size_t>* child_chain = (c == 0) ? chain : nullptr;
            if (child_chain) child_chain->push_back(w);
            self(self, child, d - 1, root_degree - 1, child_chain);
        }
    };
    for (std::size_t c = 0; c < root_degree; ++c) {
        std::size_t w = walls++;
        std::vector<std::size_t> path{w};
        node_paths.push_back(path);
        first_child_chains[c].push_back(w);
        build(build, path, depth - 1, root_degree - 1, &first_child_chains[c]);
    }
    std::vector<cubix::Bitvec> verts;
    for (const auto& p : node_paths) {
        cubix::Bitvec b(walls);
        for (std::size_t w : p) b.set(w, true);
        verts.push_back(b);
    }
    TreeBuild out{cubix::CubeComplex(walls, std::move(verts)), {}};
    for (const auto& chain : first_child_chains) {
        std::vector<cubix::Bitvec> ray{cubix::Bitvec(walls)};
        cubix::Bitvec cur(walls);
        for (std::size_t w : chain) {
            cur.set(w, true);
            ray.push_back(cur);
        }
        out.root_rays.push_back(ray);
    }
    return out;
}

inline std::set<std::string> vert_strings(const cubix::CubeComplex& X) {
    std::set<std::string> out;
    for (const auto& v : X.vertices()) out.insert(v.to_string());
    return out;
}

} // namespace testhelpers
