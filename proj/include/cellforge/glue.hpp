#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "complex.hpp"

namespace cellforge {

// Result of gluing two complexes along a facet pair and flattening the seam.
// vmapA/vmapB send old vertex ids to new ones (-1 for vertices absorbed by the
// seam). topA/topB do the same for top-rank cells (faces for a rank-2 glue,
// 3-cells for a rank-3 glue); fused cells map to the id of the merged cell.
struct Glued {
    Complex cx;
    std::vector<int> vmapA, vmapB;
    std::vector<int> topA, topB;
};

namespace detail {

// Join two vertex cycles across one deleted edge each. delA = (x, y) adjacent
// in cycA, delB its image; the x-ends and the y-ends become adjacent. Result
// keeps everything except the four deleted endpoints.
inline std::vector<int> splice_cycles(std::vector<int> cycA, std::pair<int, int> delA,
                                      std::vector<int> cycB, std::pair<int, int> delB) {
    auto locate = [](std::vector<int>& cyc, std::pair<int, int> del) {
        const int g = static_cast<int>(cyc.size());
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < g; ++i) {
                if (cyc[i] == del.first && cyc[(i + 1) % g] == del.second) return i;
            }
            std::reverse(cyc.begin(), cyc.end());
        }
        throw Error("splice: edge not found in face cycle");
    };
    const int iA = locate(cycA, delA);
    const int iB = locate(cycB, delB);
    const int gA = static_cast<int>(cycA.size());
    const int gB = static_cast<int>(cycB.size());
    std::vector<int> out;
    out.reserve(gA + gB - 4);
    for (int k = 0; k < gA - 2; ++k) out.push_back(cycA[(iA + 2 + k) % gA]);
    for (int k = gB - 3; k >= 0; --k) out.push_back(cycB[(iB + 2 + k) % gB]);
    return out;
}

}  // namespace detail

// Glue rank-3 complexes A and B along the facet pair (tA, tB) and flatten:
// the facet pair is removed, cells fuse across its faces, faces splice across
// its edges, and its vertices disappear into fused edges.
// vmap sends each boundary vertex of cell tA to a boundary vertex of tB and
// must be a facet-boundary isomorphism.
inline Glued glue3(const Complex& cxA, int tA, const Complex& cxB, int tB,
                   const std::map<int, int>& vmap) {
    if (cxA.dim != 3 || cxB.dim != 3) throw Error("glue3: rank-3 complexes required");
    const int nvA = cxA.count(0), nfA = cxA.count(2), ncA = cxA.count(3);
    const int nvB = cxB.count(0), nfB = cxB.count(2), ncB = cxB.count(3);
    const int nverts = nvA + nvB, nfaces = nfA + nfB, ncells = ncA + ncB;

    std::vector<std::vector<int>> fcycs(nfaces);
    for (int f = 0; f < nfA; ++f) fcycs[f] = face_vertex_cycle(cxA, f);
    for (int f = 0; f < nfB; ++f) {
        fcycs[nfA + f] = face_vertex_cycle(cxB, f);
        for (int& v : fcycs[nfA + f]) v += nvA;
    }
    std::vector<std::vector<int>> cells(ncells);
    for (int c = 0; c < ncA; ++c) cells[c] = cxA.cells[3][c];
    for (int c = 0; c < ncB; ++c) {
        cells[ncA + c] = cxB.cells[3][c];
        for (int& f : cells[ncA + c]) f += nfA;
    }
    const int tBg = tB + ncA;

    std::vector<int> gmap(nverts, -1);  // seam vertex of A side -> partner on B side
    std::vector<char> dvert(nverts, 0);
    for (const auto& [a, b] : vmap) {
        gmap[a] = b + nvA;
        dvert[a] = 1;
        dvert[b + nvA] = 1;
    }

    std::vector<char> dface(nfaces, 0);
    for (int f : cells[tA]) dface[f] = 1;
    for (int f : cells[tBg]) dface[f] = 1;

    auto ekey = [](int u, int v) { return pack_pair(std::min(u, v), std::max(u, v)); };
    std::unordered_map<std::uint64_t, std::vector<int>> e2faces;
    for (int f = 0; f < nfaces; ++f) {
        const auto& cyc = fcycs[f];
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i) e2faces[ekey(cyc[i], cyc[(i + 1) % g])].push_back(f);
    }

    // seam edges of the A side, sorted for deterministic splicing
    std::vector<std::pair<int, int>> esA;
    {
        std::unordered_map<std::uint64_t, char> seen;
        for (int f : cells[tA]) {
            const auto& cyc = fcycs[f];
            const int g = static_cast<int>(cyc.size());
            for (int i = 0; i < g; ++i) {
                int u = cyc[i], v = cyc[(i + 1) % g];
                if (u > v) std::swap(u, v);
                if (!seen.emplace(pack_pair(u, v), 1).second) continue;
                esA.emplace_back(u, v);
            }
        }
        std::sort(esA.begin(), esA.end());
    }
    std::unordered_map<std::uint64_t, char> esB;
    for (int f : cells[tBg]) {
        const auto& cyc = fcycs[f];
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i) esB.emplace(ekey(cyc[i], cyc[(i + 1) % g]), 1);
    }
    for (const auto& [u, v] : esA) {
        if (gmap[u] < 0 || gmap[v] < 0) throw Error("glue3: vertex map misses a seam vertex");
        if (!esB.count(ekey(gmap[u], gmap[v]))) throw Error("glue3: edge map mismatch");
    }

    // match the facet pair's faces across the vertex map
    std::map<std::vector<int>, int> fsetB;
    for (int f : cells[tBg]) {
        std::vector<int> key = fcycs[f];
        std::sort(key.begin(), key.end());
        fsetB[std::move(key)] = f;
    }
    std::vector<std::pair<int, int>> fpart;
    for (int f : cells[tA]) {
        std::vector<int> key;
        for (int v : fcycs[f]) key.push_back(gmap[v]);
        std::sort(key.begin(), key.end());
        auto it = fsetB.find(key);
        if (it == fsetB.end()) throw Error("glue3: facet boundaries not isomorphic under map");
        fpart.emplace_back(f, it->second);
    }

    // cells fuse across deleted boundary faces
    std::vector<std::vector<int>> f2cells(nfaces);
    for (int c = 0; c < ncells; ++c)
        for (int f : cells[c]) f2cells[f].push_back(c);
    Dsu cuf(ncells);
    for (const auto& [fa, fb] : fpart) {
        int othA = -1, othB = -1;
        for (int c : f2cells[fa])
            if (c != tA) othA = (othA < 0) ? c : -2;
        for (int c : f2cells[fb])
            if (c != tBg) othB = (othB < 0) ? c : -2;
        if (othA < 0 || othB < 0) throw Error("glue3: facet face not interior to exactly two cells");
        cuf.unite(othA, othB);
    }

    // faces splice across deleted seam edges
    Dsu fuf(nfaces);
    std::unordered_map<int, std::vector<int>> newcyc;  // face root -> current cycle
    for (const auto& [x, y] : esA) {
        const int x2 = gmap[x], y2 = gmap[y];
        int fA = -1, fB = -1;
        for (int f : e2faces[ekey(x, y)])
            if (!dface[f]) fA = (fA < 0) ? f : -2;
        for (int f : e2faces[ekey(x2, y2)])
            if (!dface[f]) fB = (fB < 0) ? f : -2;
        if (fA < 0 || fB < 0) throw Error("glue3: seam edge not locally flat");
        const int rA = fuf.find(fA), rB = fuf.find(fB);
        if (rA == rB) throw Error("glue3: face would merge with itself");
        auto cycA = newcyc.count(rA) ? newcyc[rA] : fcycs[fA];
        auto cycB = newcyc.count(rB) ? newcyc[rB] : fcycs[fB];
        auto spl = detail::splice_cycles(std::move(cycA), {x, y}, std::move(cycB), {x2, y2});
        newcyc.erase(rA);
        fuf.unite(rA, rB);
        newcyc[fuf.find(rB)] = std::move(spl);
    }

    // emit surviving faces (one per fused class)
    std::vector<int> fid(nfaces, -1);
    std::vector<std::vector<int>> out_faces;
    for (int f = 0; f < nfaces; ++f) {
        if (dface[f]) continue;
        const int r = fuf.find(f);
        if (fid[r] < 0) {
            const auto& cyc = newcyc.count(r) ? newcyc[r] : fcycs[r];
            for (int v : cyc)
                if (dvert[v]) throw Error("glue3: deleted vertex survives in a face");
            fid[r] = static_cast<int>(out_faces.size());
            out_faces.push_back(cyc);
        }
        fid[f] = fid[r];
    }

    // compact vertices, rebuild edges from the spliced cycles
    std::vector<int> vnew(nverts, -1);
    int nv_out = 0;
    for (int v = 0; v < nverts; ++v)
        if (!dvert[v]) vnew[v] = nv_out++;
    std::unordered_map<std::uint64_t, int> eid;
    std::vector<std::vector<int>> elist;
    std::vector<std::vector<int>> face_edges(out_faces.size());
    for (std::size_t fo = 0; fo < out_faces.size(); ++fo) {
        const auto& cyc = out_faces[fo];
        const int g = static_cast<int>(cyc.size());
        face_edges[fo].assign(g, -1);
        for (int i = 0; i < g; ++i) {
            int u = vnew[cyc[i]], v = vnew[cyc[(i + 1) % g]];
            if (u == v) throw Error("glue3: edge collapsed to a loop");
            auto [it, fresh] = eid.emplace(ekey(u, v), static_cast<int>(elist.size()));
            if (fresh) elist.push_back({std::min(u, v), std::max(u, v)});
            face_edges[fo][(i + 1) % g] = it->second;
        }
    }

    // emit surviving cells (one per fused class)
    std::vector<int> cid(ncells, -1);
    std::vector<std::vector<int>> out_cells;
    std::vector<std::vector<int>> class_faces;
    for (int c = 0; c < ncells; ++c) {
        if (c == tA || c == tBg) continue;
        const int r = cuf.find(c);
        if (cid[r] < 0) {
            cid[r] = static_cast<int>(out_cells.size());
            out_cells.emplace_back();
        }
        cid[c] = cid[r];
        for (int f : cells[c])
            if (!dface[f]) out_cells[cid[r]].push_back(fid[f]);
    }
    for (auto& fs : out_cells) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }

    Glued res;
    res.cx = make_complex(3, {std::vector<std::vector<int>>(nv_out), std::move(elist),
                              std::move(face_edges), std::move(out_cells)});
    res.vmapA.assign(nvA, -1);
    res.vmapB.assign(nvB, -1);
    for (int v = 0; v < nvA; ++v) res.vmapA[v] = vnew[v];
    for (int v = 0; v < nvB; ++v) res.vmapB[v] = vnew[nvA + v];
    res.topA.assign(ncA, -1);
    res.topB.assign(ncB, -1);
    for (int c = 0; c < ncA; ++c)
        if (c != tA) res.topA[c] = cid[c];
    for (int c = 0; c < ncB; ++c)
        if (ncA + c != tBg) res.topB[c] = cid[ncA + c];
    return res;
}

// Rank-2 counterpart: glue surfaces A and B along the face pair (tA, tB) and
// flatten the seam one level down. topA/topB map face ids.
inline Glued glue2(const Complex& cxA, int tA, const Complex& cxB, int tB,
                   const std::map<int, int>& vmap) {
    if (cxA.dim != 2 || cxB.dim != 2) throw Error("glue2: rank-2 complexes required");
    const int nvA = cxA.count(0), nfA = cxA.count(2);
    const int nvB = cxB.count(0), nfB = cxB.count(2);
    const int nverts = nvA + nvB, nfaces = nfA + nfB;

    std::vector<std::vector<int>> fcycs(nfaces);
    for (int f = 0; f < nfA; ++f) fcycs[f] = face_vertex_cycle(cxA, f);
    for (int f = 0; f < nfB; ++f) {
        fcycs[nfA + f] = face_vertex_cycle(cxB, f);
        for (int& v : fcycs[nfA + f]) v += nvA;
    }
    const int tBg = tB + nfA;

    std::vector<int> gmap(nverts, -1);
    std::vector<char> dvert(nverts, 0);
    for (const auto& [a, b] : vmap) {
        gmap[a] = b + nvA;
        dvert[a] = 1;
        dvert[b + nvA] = 1;
    }

    auto ekey = [](int u, int v) { return pack_pair(std::min(u, v), std::max(u, v)); };
    std::unordered_map<std::uint64_t, std::vector<int>> e2faces;
    for (int f = 0; f < nfaces; ++f) {
        const auto& cyc = fcycs[f];
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i) e2faces[ekey(cyc[i], cyc[(i + 1) % g])].push_back(f);
    }

    const std::vector<int> cycT = fcycs[tA];
    const int gT = static_cast<int>(cycT.size());
    Dsu fuf(nfaces);
    std::unordered_map<int, std::vector<int>> newcyc;
    for (int i = 0; i < gT; ++i) {
        const int x = cycT[i], y = cycT[(i + 1) % gT];
        if (gmap[x] < 0 || gmap[y] < 0) throw Error("glue2: vertex map misses a seam vertex");
        const int x2 = gmap[x], y2 = gmap[y];
        auto itB = e2faces.find(ekey(x2, y2));
        if (itB == e2faces.end()) throw Error("glue2: edge map mismatch");
        int fA = -1, fB = -1;
        for (int f : e2faces[ekey(x, y)])
            if (f != tA) fA = (fA < 0) ? f : -2;
        for (int f : itB->second)
            if (f != tBg) fB = (fB < 0) ? f : -2;
        if (fA < 0 || fB < 0) throw Error("glue2: seam edge not locally flat");
        const int rA = fuf.find(fA), rB = fuf.find(fB);
        if (rA == rB) throw Error("glue2: face would merge with itself");
        auto cycA = newcyc.count(rA) ? newcyc[rA] : fcycs[fA];
        auto cycB = newcyc.count(rB) ? newcyc[rB] : fcycs[fB];
        auto spl = detail::splice_cycles(std::move(cycA), {x, y}, std::move(cycB), {x2, y2});
        newcyc.erase(rA);
        fuf.unite(rA, rB);
        newcyc[fuf.find(rB)] = std::move(spl);
    }

    std::vector<int> fid(nfaces, -1);
    std::vector<std::vector<int>> out_faces;
    for (int f = 0; f < nfaces; ++f) {
        if (f == tA || f == tBg) continue;
        const int r = fuf.find(f);
        if (fid[r] < 0) {
            const auto& cyc = newcyc.count(r) ? newcyc[r] : fcycs[r];
            for (int v : cyc)
                if (dvert[v]) throw Error("glue2: deleted vertex survives in a face");
            fid[r] = static_cast<int>(out_faces.size());
            out_faces.push_back(cyc);
        }
        fid[f] = fid[r];
    }

    std::vector<int> vnew(nverts, -1);
    int nv_out = 0;
    for (int v = 0; v < nverts; ++v)
        if (!dvert[v]) vnew[v] = nv_out++;
    std::vector<std::vector<int>> faces_out;
    for (auto& cyc : out_faces) {
        std::vector<int> c;
        for (int v : cyc) c.push_back(vnew[v]);
        faces_out.push_back(std::move(c));
    }

    Glued res;
    res.cx = from_faces(faces_out, nv_out);
    res.vmapA.assign(nvA, -1);
    res.vmapB.assign(nvB, -1);
    for (int v = 0; v < nvA; ++v) res.vmapA[v] = vnew[v];
    for (int v = 0; v < nvB; ++v) res.vmapB[v] = vnew[nvA + v];
    res.topA.assign(nfA, -1);
    res.topB.assign(nfB, -1);
    for (int f = 0; f < nfA; ++f)
        if (f != tA) res.topA[f] = fid[f];
    for (int f = 0; f < nfB; ++f)
        if (nfA + f != tBg) res.topB[f] = fid[nfA + f];
    return res;
}

// Sorted vertex set of one 3-cell's boundary.
inline std::vector<int> cell_vertices(const Complex& cx, int c) {
    std::vector<int> out;
    for (int f : cx.cells[3][c]) {
        auto cyc = face_vertex_cycle(cx, f);
        out.insert(out.end(), cyc.begin(), cyc.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Chain of n copies of the 120-cell: consecutive copies share a facet, and
// each copy's two seams sit on antipodal cells, so the chain is straight.
inline Complex chain_120cells(int n, const Built120& b) {
    if (n < 1) throw Error("chain_120cells: need n >= 1");
    Complex cur = b.cx;
    int far_cell = b.cneg[0];
    // surviving chain-end vertices, paired with their template ids
    std::vector<std::pair<int, int>> farmap;
    for (int v : cell_vertices(b.cx, far_cell)) farmap.emplace_back(v, v);
    for (int step = 1; step < n; ++step) {
        std::map<int, int> iso;  // current far-facet vertex -> fresh copy vertex
        for (const auto& [cur_v, tmpl_v] : farmap) iso[cur_v] = b.vneg[tmpl_v];
        Glued res = glue3(cur, far_cell, b.cx, 0, iso);
        far_cell = res.topB[b.cneg[0]];
        std::vector<std::pair<int, int>> next;
        for (const auto& [cur_v, tmpl_v] : farmap) {
            (void)cur_v;
            next.emplace_back(res.vmapB[tmpl_v], tmpl_v);
        }
        farmap = std::move(next);
        cur = std::move(res.cx);
    }
    return cur;
}

inline Complex chain_120cells(int n) { return chain_120cells(n, build_120cell()); }

// Chain of n dodecahedra glued cap to cap; isomorphic to the layered barrel
// with n - 1 middle bands.
inline Complex chain_dodecahedra(int n) {
    if (n < 1) throw Error("chain_dodecahedra: need n >= 1");
    const Complex dode = dodecahedron();
    Complex cur = dode;
    int far_face = 1;  // top cap
    for (int step = 1; step < n; ++step) {
        auto farcyc = face_vertex_cycle(cur, far_face);
        auto capcyc = face_vertex_cycle(dode, 0);
        std::map<int, int> iso;
        for (std::size_t i = 0; i < farcyc.size(); ++i) iso[farcyc[i]] = capcyc[i];
        Glued res = glue2(cur, far_face, dode, 0, iso);
        far_face = res.topB[1];
        cur = std::move(res.cx);
    }
    return cur;
}

}  // namespace cellforge
