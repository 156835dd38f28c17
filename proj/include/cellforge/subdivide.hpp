#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "complex.hpp"

namespace cellforge {

// Dual tetrahedra of a simple rank-3 complex: one per vertex, spanning the
// four cells meeting there.
inline std::vector<std::array<int, 4>> dual_tetrahedra(const Complex& cx) {
    if (cx.dim != 3) throw Error("dual_tetrahedra: rank-3 complex required");
    std::vector<std::vector<int>> stars(cx.count(0));
    for (int c = 0; c < cx.count(3); ++c)
        for (int f : cx.cells[3][c])
            for (int v : face_vertex_cycle(cx, f)) stars[v].push_back(c);
    std::vector<std::array<int, 4>> tets(stars.size());
    for (std::size_t v = 0; v < stars.size(); ++v) {
        auto& s = stars[v];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() != 4) throw Error("dual_tetrahedra: vertex not in exactly 4 cells");
        tets[v] = {s[0], s[1], s[2], s[3]};
    }
    return tets;
}

// Cut each tetrahedron into 4 corner tets and 4 inner tets, and lace each
// triangle with a 6-cycle of tets joining the two inner apexes. New vertices:
// two per edge (one near each endpoint) and one apex per tetrahedron.
inline std::pair<std::vector<std::array<int, 4>>, int> subdivide_tets(
    const std::vector<std::array<int, 4>>& tets_in, int nv) {
    std::vector<std::array<int, 4>> tets = tets_in;
    for (auto& t : tets) std::sort(t.begin(), t.end());

    std::vector<std::array<int, 2>> edges;
    for (const auto& t : tets)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.push_back({t[i], t[j]});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const int ne = static_cast<int>(edges.size());

    // point on edge {u, v} near u
    auto m = [&](int u, int v) {
        const std::array<int, 2> key{std::min(u, v), std::max(u, v)};
        const auto it = std::lower_bound(edges.begin(), edges.end(), key);
        const int e = static_cast<int>(it - edges.begin());
        return nv + 2 * e + ((u == key[0]) ? 0 : 1);
    };
    // apex inside tetrahedron ti
    auto z = [&](int ti) { return nv + 2 * ne + ti; };

    std::vector<std::array<int, 4>> sub;
    sub.reserve(tets.size() * 8);
    for (std::size_t ti = 0; ti < tets.size(); ++ti) {
        const auto& t = tets[ti];
        for (int a : t) {
            std::array<int, 4> corner{a, 0, 0, 0};
            std::array<int, 4> inner{z(static_cast<int>(ti)), 0, 0, 0};
            int p = 1;
            for (int x : t)
                if (x != a) {
                    corner[p] = m(a, x);
                    inner[p] = m(a, x);
                    ++p;
                }
            std::sort(corner.begin(), corner.end());
            std::sort(inner.begin(), inner.end());
            sub.push_back(corner);
            sub.push_back(inner);
        }
    }

    std::vector<std::pair<std::array<int, 3>, int>> tmap;
    tmap.reserve(tets.size() * 4);
    for (std::size_t ti = 0; ti < tets.size(); ++ti) {
        const auto& t = tets[ti];
        for (int i = 0; i < 4; ++i) {
            std::array<int, 3> tri;
            int p = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) tri[p++] = t[j];
            tmap.emplace_back(tri, static_cast<int>(ti));
        }
    }
    std::sort(tmap.begin(), tmap.end());
    for (std::size_t k = 0; k < tmap.size(); k += 2) {
        if (k + 1 >= tmap.size() || tmap[k].first != tmap[k + 1].first ||
            (k + 2 < tmap.size() && tmap[k + 2].first == tmap[k].first))
            throw Error("subdivide: triangle not in exactly 2 tetrahedra");
        const auto [a, b, c] = tmap[k].first;
        const int z0 = z(tmap[k].second), z1 = z(tmap[k + 1].second);
        const std::array<int, 6> hexv{m(a, b), m(b, a), m(b, c), m(c, b), m(c, a), m(a, c)};
        for (int i = 0; i < 6; ++i) {
            std::array<int, 4> lace{z0, z1, hexv[i], hexv[(i + 1) % 6]};
            std::sort(lace.begin(), lace.end());
            sub.push_back(lace);
        }
    }
    return {std::move(sub), nv + 2 * ne + static_cast<int>(tets.size())};
}

// Leapfrog-style thickening of a simple rank-3 complex: subdivide its dual
// simplicial sphere and dualize back. Cells of the result: one per cell of
// the input (same boundary combinatorics), two barrels per face, and one
// hexagon-carrying cell per vertex.
inline Complex subdivide_thicken(const Complex& cx) {
    if (cx.dim != 3) throw Error("subdivide: rank-3 complex required");
    auto tets = dual_tetrahedra(cx);
    auto [sub, nverts] = subdivide_tets(tets, cx.count(3));
    return dual3(simplicial_from_tets(sub, nverts));
}

}  // namespace cellforge
