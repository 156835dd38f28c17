#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "base.hpp"

namespace cellforge {

// Boundary-list incidence complex.
//
// cells[k][i] is the boundary of cell i at rank k:
//   rank 0: empty
//   rank 1: the two endpoint vertex ids, sorted
//   rank 2: the edge ids of the face in cyclic order, canonical rotation
//   rank 3: the face ids of the cell, sorted
// Canonical rotation of a cycle: the lexicographically least sequence over
// all rotations of the cycle and of its reversal.
struct Complex {
    int dim = 2;
    std::vector<std::vector<std::vector<int>>> cells;
    std::map<std::pair<int, int>, std::string> labels;

    int count(int k) const {
        if (k < 0 || k > dim) return 0;
        return static_cast<int>(cells[k].size());
    }
};

struct FVector {
    std::vector<long long> counts;
    long long p5 = 0;
    long long p6 = 0;
    long long p_other = 0;

    bool operator==(const FVector&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) os << ", ";
            os << counts[i];
        }
        os << ")";
        return os.str();
    }
};

inline std::vector<int> canon_cycle(const std::vector<int>& seq) {
    if (seq.empty()) return seq;
    const int n = static_cast<int>(seq.size());
    std::vector<int> best;
    std::vector<int> cand(n);
    const std::vector<int> rev(seq.rbegin(), seq.rend());
    for (const std::vector<int>* src : {&seq, &rev}) {
        for (int r = 0; r < n; ++r) {
            for (int i = 0; i < n; ++i) cand[i] = (*src)[(r + i) % n];
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

inline void normalize(Complex& cx) {
    for (int k = 0; k <= cx.dim; ++k) {
        for (auto& b : cx.cells[k]) {
            if (k == 2) {
                b = canon_cycle(b);
            } else {
                std::sort(b.begin(), b.end());
            }
        }
    }
}

inline Complex make_complex(int dim, std::vector<std::vector<std::vector<int>>> cells) {
    if (dim < 2 || dim > 3) throw Error("complex: only rank 2 and rank 3 supported");
    if (static_cast<int>(cells.size()) != dim + 1)
        throw Error("complex: need one boundary table per rank");
    Complex cx;
    cx.dim = dim;
    cx.cells = std::move(cells);
    normalize(cx);
    return cx;
}

inline FVector f_vector(const Complex& cx) {
    FVector fv;
    for (int k = 0; k <= cx.dim; ++k) fv.counts.push_back(cx.count(k));
    for (const auto& f : cx.cells[2]) {
        const auto g = f.size();
        if (g == 5)
            ++fv.p5;
        else if (g == 6)
            ++fv.p6;
        else
            ++fv.p_other;
    }
    return fv;
}

inline long long euler_characteristic(const Complex& cx) {
    long long chi = 0;
    int sign = 1;
    for (int k = 0; k <= cx.dim; ++k) {
        chi += sign * static_cast<long long>(cx.count(k));
        sign = -sign;
    }
    return chi;
}

inline std::map<int, long long> gonality_census(const Complex& cx) {
    std::map<int, long long> g;
    for (const auto& f : cx.cells[2]) ++g[static_cast<int>(f.size())];
    return g;
}

// Vertex cycle of face f: verts[i] is the vertex shared by boundary edges
// i and i+1, so boundary edge i joins verts[i-1] and verts[i].
inline std::vector<int> face_vertex_cycle(const Complex& cx, int f) {
    const auto& ecyc = cx.cells[2][f];
    const int g = static_cast<int>(ecyc.size());
    std::vector<int> verts(g);
    for (int i = 0; i < g; ++i) {
        const auto& a = cx.cells[1][ecyc[i]];
        const auto& b = cx.cells[1][ecyc[(i + 1) % g]];
        int common = -1, ncommon = 0;
        for (int u : a)
            for (int v : b)
                if (u == v) {
                    common = u;
                    ++ncommon;
                }
        if (ncommon != 1)
            throw Error("face " + std::to_string(f) + ": consecutive edges share " +
                        std::to_string(ncommon) + " vertices");
        verts[i] = common;
    }
    return verts;
}

// Builds a rank-2 complex from faces given as vertex cycles.
inline Complex from_faces(const std::vector<std::vector<int>>& faces, int nv = -1) {
    int maxv = -1;
    for (const auto& f : faces)
        for (int v : f) maxv = std::max(maxv, v);
    if (nv < 0) nv = maxv + 1;
    if (maxv >= nv) throw Error("from_faces: vertex id out of range");

    std::map<std::pair<int, int>, int> eid;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> fcells;
    for (const auto& f : faces) {
        const int g = static_cast<int>(f.size());
        std::vector<int> ecyc(g);
        for (int i = 0; i < g; ++i) {
            int u = f[i];
            int v = f[(i + 1) % g];
            if (u == v) throw Error("from_faces: loop edge in face");
            auto key = std::minmax(u, v);
            auto it = eid.find(key);
            if (it == eid.end()) {
                it = eid.emplace(key, static_cast<int>(edges.size())).first;
                edges.push_back({key.first, key.second});
            }
            // edge i of the cycle joins verts[i-1], verts[i]: the edge
            // (f[i], f[i+1]) sits at cycle position i+1.
            ecyc[(i + 1) % g] = it->second;
        }
        fcells.push_back(std::move(ecyc));
    }
    std::vector<std::vector<std::vector<int>>> cells(3);
    cells[0].assign(nv, {});
    cells[1] = std::move(edges);
    cells[2] = std::move(fcells);
    return make_complex(2, std::move(cells));
}

// Checks that every cell boundary references valid ids of the rank below.
inline void check_boundary_ids(const Complex& cx, std::vector<std::string>& out) {
    for (int k = 1; k <= cx.dim; ++k) {
        for (int i = 0; i < cx.count(k); ++i) {
            for (int b : cx.cells[k][i]) {
                if (b < 0 || b >= cx.count(k - 1)) {
                    out.push_back("rank " + std::to_string(k) + " cell " + std::to_string(i) +
                                  ": boundary id " + std::to_string(b) + " out of range");
                }
            }
        }
    }
}

// Validates the defining local conditions of a simple closed complex and
// returns a list of violations (empty when the complex passes).
//
// rank 2: every face has gonality >= 3 with distinct edges and vertices,
//         no loop edges, every edge lies in exactly 2 faces, every vertex
//         in exactly 3 edges.
// rank 3: additionally every face lies in exactly 2 cells, every edge in
//         exactly 3 faces, every vertex in exactly 4 edges.
inline std::vector<std::string> validate_simple_closed(const Complex& cx) {
    std::vector<std::string> out;
    check_boundary_ids(cx, out);
    if (!out.empty()) return out;

    const int nv = cx.count(0);
    const int ne = cx.count(1);
    const int nf = cx.count(2);

    std::vector<int> vdeg(nv, 0);
    for (int e = 0; e < ne; ++e) {
        const auto& b = cx.cells[1][e];
        if (b.size() != 2 || b[0] == b[1]) {
            out.push_back("edge " + std::to_string(e) + ": not a pair of distinct vertices");
            continue;
        }
        ++vdeg[b[0]];
        ++vdeg[b[1]];
    }
    if (!out.empty()) return out;

    std::vector<int> efaces(ne, 0);
    for (int f = 0; f < nf; ++f) {
        const auto& ecyc = cx.cells[2][f];
        if (ecyc.size() < 3) {
            out.push_back("face " + std::to_string(f) + ": gonality < 3");
            continue;
        }
        std::set<int> eset(ecyc.begin(), ecyc.end());
        if (eset.size() != ecyc.size()) {
            out.push_back("face " + std::to_string(f) + ": repeated edge");
            continue;
        }
        std::vector<int> vcyc;
        try {
            vcyc = face_vertex_cycle(cx, f);
        } catch (const Error& err) {
            out.push_back(err.what());
            continue;
        }
        std::set<int> vset(vcyc.begin(), vcyc.end());
        if (vset.size() != vcyc.size())
            out.push_back("face " + std::to_string(f) + ": repeated vertex");
        for (int e : ecyc) ++efaces[e];
    }

    const int want_vdeg = (cx.dim == 2) ? 3 : 4;
    for (int v = 0; v < nv; ++v)
        if (vdeg[v] != want_vdeg)
            out.push_back("vertex " + std::to_string(v) + ": in " + std::to_string(vdeg[v]) +
                          " edges, expected " + std::to_string(want_vdeg));

    if (cx.dim == 2) {
        for (int e = 0; e < ne; ++e)
            if (efaces[e] != 2)
                out.push_back("edge " + std::to_string(e) + ": in " + std::to_string(efaces[e]) +
                              " faces, expected 2");
    } else {
        for (int e = 0; e < ne; ++e)
            if (efaces[e] != 3)
                out.push_back("edge " + std::to_string(e) + ": in " + std::to_string(efaces[e]) +
                              " faces, expected 3");
        std::vector<int> fcells(nf, 0);
        for (int c = 0; c < cx.count(3); ++c) {
            const auto& b = cx.cells[3][c];
            std::set<int> fset(b.begin(), b.end());
            if (fset.size() != b.size())
                out.push_back("cell " + std::to_string(c) + ": repeated face");
            for (int f : b) ++fcells[f];
        }
        for (int f = 0; f < nf; ++f)
            if (fcells[f] != 2)
                out.push_back("face " + std::to_string(f) + ": in " + std::to_string(fcells[f]) +
                              " cells, expected 2");
    }
    return out;
}

inline bool is_fullerene(const Complex& cx) {
    if (!validate_simple_closed(cx).empty()) return false;
    for (const auto& f : cx.cells[2]) {
        const auto g = f.size();
        if (g != 5 && g != 6) return false;
    }
    return true;
}

// Cyclic order of (edge, face) pairs around a vertex of a rank-2 complex;
// returns the face cycle.
inline std::vector<std::vector<int>> vertex_face_cycles(const Complex& cx) {
    const int nv = cx.count(0);
    const int ne = cx.count(1);
    const int nf = cx.count(2);

    // edge -> its (up to) two faces
    std::vector<std::vector<int>> ef(ne);
    for (int f = 0; f < nf; ++f)
        for (int e : cx.cells[2][f]) ef[e].push_back(f);

    std::vector<std::vector<int>> vedges(nv);
    for (int e = 0; e < ne; ++e)
        for (int v : cx.cells[1][e]) vedges[v].push_back(e);

    // (v, f) -> the two edges of f at v
    std::map<std::pair<int, int>, std::vector<int>> vf_edges;
    for (int f = 0; f < nf; ++f) {
        const auto& ecyc = cx.cells[2][f];
        const int g = static_cast<int>(ecyc.size());
        auto vcyc = face_vertex_cycle(cx, f);
        for (int i = 0; i < g; ++i) {
            // vertex vcyc[i] lies on edges ecyc[i] and ecyc[i+1]
            auto& lst = vf_edges[{vcyc[i], f}];
            lst.push_back(ecyc[i]);
            lst.push_back(ecyc[(i + 1) % g]);
        }
    }

    std::vector<std::vector<int>> cycles(nv);
    for (int v = 0; v < nv; ++v) {
        if (vedges[v].empty()) throw Error("vertex " + std::to_string(v) + ": isolated");
        int e0 = vedges[v][0];
        if (ef[e0].size() != 2) throw Error("edge " + std::to_string(e0) + ": not in 2 faces");
        int f = ef[e0][0];
        int e = e0;
        std::vector<int> cyc;
        do {
            cyc.push_back(f);
            const auto& pairg = vf_edges.at({v, f});
            if (pairg.size() != 2)
                throw Error("vertex " + std::to_string(v) + ": face " + std::to_string(f) +
                            " visits it more than once");
            int enext = (pairg[0] == e) ? pairg[1] : pairg[0];
            const auto& two = ef[enext];
            if (two.size() != 2) throw Error("edge " + std::to_string(enext) + ": not in 2 faces");
            f = (two[0] == f) ? two[1] : two[0];
            e = enext;
        } while (e != e0 || f != ef[e0][0]);
        if (cyc.size() != vedges[v].size())
            throw Error("vertex " + std::to_string(v) + ": face link is not a single cycle");
        cycles[v] = std::move(cyc);
    }
    return cycles;
}

inline Complex dual2(const Complex& cx) {
    return from_faces(vertex_face_cycles(cx), cx.count(2));
}

// Dual of a closed rank-3 complex. Ids correspond positionally:
// dual vertex i = cell i, dual edge j = face j, dual face k = edge k,
// dual cell l = vertex l.
inline Complex dual3(const Complex& cx) {
    const int nv = cx.count(0);
    const int ne = cx.count(1);
    const int nf = cx.count(2);
    const int nc = cx.count(3);

    std::vector<std::vector<int>> fcells(nf);
    for (int c = 0; c < nc; ++c)
        for (int f : cx.cells[3][c]) fcells[f].push_back(c);

    std::vector<std::vector<int>> dedges(nf);
    for (int f = 0; f < nf; ++f) {
        if (fcells[f].size() != 2 || fcells[f][0] == fcells[f][1])
            throw Error("dual: face " + std::to_string(f) + " not in 2 distinct cells");
        dedges[f] = {fcells[f][0], fcells[f][1]};
        std::sort(dedges[f].begin(), dedges[f].end());
    }

    // (cell, edge) -> the faces of the cell containing the edge
    std::unordered_map<std::uint64_t, std::vector<int>> ce_faces;
    std::vector<std::vector<int>> efaces(ne);
    for (int f = 0; f < nf; ++f)
        for (int e : cx.cells[2][f]) efaces[e].push_back(f);
    for (int c = 0; c < nc; ++c)
        for (int f : cx.cells[3][c])
            for (int e : cx.cells[2][f]) ce_faces[pack_pair(c, e)].push_back(f);

    // dual face for edge e: walk cell -> other face of that cell at e -> next cell
    std::vector<std::vector<int>> dfaces(ne);
    for (int e = 0; e < ne; ++e) {
        if (efaces[e].empty()) throw Error("dual: edge " + std::to_string(e) + " in no face");
        const int f0 = efaces[e][0];
        const int c0 = fcells[f0][0];
        int f = f0;
        int c = c0;
        std::vector<int> cyc;
        do {
            cyc.push_back(f);
            const auto& two = ce_faces.at(pack_pair(c, e));
            if (two.size() != 2)
                throw Error("dual: cell " + std::to_string(c) + " has " + std::to_string(two.size()) +
                            " faces at edge " + std::to_string(e) + ", expected 2");
            int fnext = (two[0] == f) ? two[1] : two[0];
            const auto& cc = fcells[fnext];
            c = (cc[0] == c) ? cc[1] : cc[0];
            f = fnext;
        } while (f != f0 || c != c0);
        if (cyc.size() != efaces[e].size())
            throw Error("dual: link of edge " + std::to_string(e) + " is not a single cycle");
        dfaces[e] = std::move(cyc);
    }

    std::vector<std::vector<int>> dcells(nv);
    for (int e = 0; e < ne; ++e)
        for (int v : cx.cells[1][e]) dcells[v].push_back(e);

    std::vector<std::vector<std::vector<int>>> cells(4);
    cells[0].assign(nc, {});
    cells[1] = std::move(dedges);
    cells[2] = std::move(dfaces);
    cells[3] = std::move(dcells);
    return make_complex(3, std::move(cells));
}

inline Complex dual(const Complex& cx) {
    return cx.dim == 2 ? dual2(cx) : dual3(cx);
}

// The boundary surface of one cell of a rank-3 complex, reindexed as a
// standalone rank-2 complex.
inline Complex extract_cell(const Complex& cx, int c) {
    if (cx.dim != 3) throw Error("extract_cell: rank-3 complex required");
    std::map<int, int> vmap;
    std::vector<std::vector<int>> faces;
    for (int f : cx.cells[3][c]) {
        auto vcyc = face_vertex_cycle(cx, f);
        std::vector<int> local;
        for (int v : vcyc) {
            auto it = vmap.find(v);
            if (it == vmap.end()) it = vmap.emplace(v, static_cast<int>(vmap.size())).first;
            local.push_back(it->second);
        }
        faces.push_back(std::move(local));
    }
    return from_faces(faces, static_cast<int>(vmap.size()));
}

// Rebuilds a complex under fresh ids. perms[k], when present, maps old id ->
// new id at rank k and must be a bijection.
inline Complex relabel(const Complex& cx, const std::vector<std::vector<int>>& perms) {
    std::vector<std::vector<std::vector<int>>> cells(cx.dim + 1);
    auto perm_of = [&](int k) -> const std::vector<int>* {
        if (k < static_cast<int>(perms.size()) && !perms[k].empty()) {
            if (static_cast<int>(perms[k].size()) != cx.count(k))
                throw Error("relabel: permutation size mismatch at rank " + std::to_string(k));
            return &perms[k];
        }
        return nullptr;
    };
    for (int k = 0; k <= cx.dim; ++k) {
        const auto* pk = perm_of(k);
        const auto* pb = (k > 0) ? perm_of(k - 1) : nullptr;
        cells[k].resize(cx.count(k));
        for (int i = 0; i < cx.count(k); ++i) {
            int ni = pk ? (*pk)[i] : i;
            std::vector<int> b = cx.cells[k][i];
            if (pb)
                for (int& x : b) x = (*pb)[x];
            cells[k][ni] = std::move(b);
        }
    }
    return make_complex(cx.dim, std::move(cells));
}

}  // namespace cellforge
