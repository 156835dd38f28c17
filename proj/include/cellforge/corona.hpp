#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "complex.hpp"

namespace cellforge {

// Incremental cell assembly: cells are added with local vertex ids and face
// vertex cycles; pairing two faces identifies their boundaries. build() emits
// the resulting rank-3 complex, in which every paired face becomes a 2-face
// and every assembly cell a 3-cell.
class Assembly {
public:
    struct Cell {
        std::string label;
        std::vector<std::vector<int>> cycles;  // face vertex cycles, local ids
        int nverts;
        int offset;
    };
    struct Pairing {
        int cellA, fA, cellB, fB, r, s;
    };

    std::vector<Cell> cells;
    std::vector<Pairing> pairings;

    int add_cell(const std::vector<std::vector<int>>& cycles, std::string label) {
        int nv = 0;
        for (const auto& c : cycles)
            for (int v : c) nv = std::max(nv, v + 1);
        cells.push_back({std::move(label), cycles, nv, nglobal_});
        nglobal_ += nv;
        vuf_.grow(nglobal_);
        return static_cast<int>(cells.size()) - 1;
    }

    int g(int cell, int lv) const { return cells[cell].offset + lv; }

    int root(int cell, int lv) { return vuf_.find(g(cell, lv)); }

    int find_global(int gv) { return vuf_.find(gv); }

    std::vector<int> root_cycle(int cell, int face) {
        std::vector<int> out;
        for (int lv : cells[cell].cycles[face]) out.push_back(root(cell, lv));
        return out;
    }

    bool paired(int cell, int face) const { return pair_of_.count({cell, face}) != 0; }

    // Pair via an explicit local-vertex correspondence (at least two pairs;
    // the rest of the map must agree with the deduced cyclic alignment).
    void pair_explicit(int cellA, int fA, int cellB, int fB,
                       const std::vector<std::pair<int, int>>& vpairs) {
        const auto& la = cells[cellA].cycles[fA];
        const auto& lb = cells[cellB].cycles[fB];
        const int n = static_cast<int>(la.size());
        if (static_cast<int>(lb.size()) != n || vpairs.size() < 2)
            throw Error("pair_explicit: size mismatch");
        auto index = [](const std::vector<int>& v, int x) {
            auto it = std::find(v.begin(), v.end(), x);
            if (it == v.end()) throw Error("pair_explicit: vertex not on face");
            return static_cast<int>(it - v.begin());
        };
        const int i0 = index(la, vpairs[0].first), i1 = index(la, vpairs[1].first);
        const int j0 = index(lb, vpairs[0].second), j1 = index(lb, vpairs[1].second);
        const int s = (posmod(j1 - j0, n) == posmod(i1 - i0, n)) ? 1 : -1;
        const int r = posmod(j0 - s * i0, n);
        std::map<int, int> m(vpairs.begin(), vpairs.end());
        for (int i = 0; i < n; ++i) {
            auto it = m.find(la[i]);
            if (it != m.end() && lb[posmod(r + s * i, n)] != it->second)
                throw Error("pair_explicit: map not cyclic");
        }
        apply(cellA, fA, cellB, fB, r, s);
    }

    // Pair so that the given local vertices of face A land on the given
    // global vertex classes; exactly one alignment may satisfy the seeds.
    void pair_seeded(int cellA, int fA, int cellB, int fB,
                     const std::vector<std::pair<int, int>>& seeds) {
        const auto& la = cells[cellA].cycles[fA];
        const auto rb = root_cycle(cellB, fB);
        const int n = static_cast<int>(la.size());
        int goodr = -1, goods = 0, ngood = 0;
        for (int r = 0; r < n; ++r) {
            for (int s : {1, -1}) {
                bool ok = true;
                for (const auto& [lv, tgt] : seeds) {
                    auto it = std::find(la.begin(), la.end(), lv);
                    const int i = static_cast<int>(it - la.begin());
                    if (rb[posmod(r + s * i, n)] != vuf_.find(tgt)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    ++ngood;
                    goodr = r;
                    goods = s;
                }
            }
        }
        if (ngood != 1)
            throw Error("pair_seeded: " + cells[cellA].label + "#" + std::to_string(fA) + " -> " +
                        cells[cellB].label + "#" + std::to_string(fB) + ": " +
                        std::to_string(ngood) + " alignments");
        apply(cellA, fA, cellB, fB, goodr, goods);
    }

    // Pair along the alignment agreeing with the most already-identified
    // vertices; it must match at least 2 and win uniquely.
    void pair_anchored(int cellA, int fA, int cellB, int fB) {
        const auto ra = root_cycle(cellA, fA);
        const auto rb = root_cycle(cellB, fB);
        const int n = static_cast<int>(ra.size());
        if (static_cast<int>(rb.size()) != n) throw Error("pair_anchored: gonality mismatch");
        int best = -1, ties = 0, bestr = 0, bests = 0;
        for (int r = 0; r < n; ++r) {
            for (int s : {1, -1}) {
                int m = 0;
                for (int i = 0; i < n; ++i)
                    if (ra[i] == rb[posmod(r + s * i, n)]) ++m;
                if (m > best) {
                    best = m;
                    ties = 1;
                    bestr = r;
                    bests = s;
                } else if (m == best) {
                    ++ties;
                }
            }
        }
        if (best < 2 || ties != 1)
            throw Error("pair_anchored: " + cells[cellA].label + "#" + std::to_string(fA) +
                        " -> " + cells[cellB].label + "#" + std::to_string(fB) +
                        ": best=" + std::to_string(best) + " ties=" + std::to_string(ties));
        apply(cellA, fA, cellB, fB, bestr, bests);
    }

    // Anchored pairing against whichever candidate face matches best
    // (at least 3 shared vertices, unique winner). Returns the winner.
    std::pair<int, int> pair_best(int cellA, int fA,
                                  const std::vector<std::pair<int, int>>& targets) {
        const auto ra = root_cycle(cellA, fA);
        const int n = static_cast<int>(ra.size());
        int best = -1, ties = 0;
        int bc = -1, bf = -1, br = 0, bs = 0;
        for (const auto& [cellB, fB] : targets) {
            const auto rb = root_cycle(cellB, fB);
            for (int r = 0; r < n; ++r) {
                for (int s : {1, -1}) {
                    int m = 0;
                    for (int i = 0; i < n; ++i)
                        if (ra[i] == rb[posmod(r + s * i, n)]) ++m;
                    if (m > best) {
                        best = m;
                        ties = 1;
                        bc = cellB;
                        bf = fB;
                        br = r;
                        bs = s;
                    } else if (m == best) {
                        ++ties;
                    }
                }
            }
        }
        if (best < 3 || ties != 1)
            throw Error("pair_best: " + cells[cellA].label + "#" + std::to_string(fA) +
                        ": best=" + std::to_string(best) + " ties=" + std::to_string(ties));
        apply(cellA, fA, bc, bf, br, bs);
        return {bc, bf};
    }

    std::vector<std::pair<int, int>> unpaired() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t f = 0; f < cells[c].cycles.size(); ++f)
                if (!pair_of_.count({static_cast<int>(c), static_cast<int>(f)}))
                    out.emplace_back(static_cast<int>(c), static_cast<int>(f));
        return out;
    }

    // Match the remaining faces in pairs by their identified boundary cycles;
    // each cycle class must occur exactly twice with a unique full alignment.
    void pair_leftovers() {
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> groups;
        for (const auto& [c, f] : unpaired()) {
            auto rc = root_cycle(c, f);
            std::vector<int> srt = rc;
            std::sort(srt.begin(), srt.end());
            if (std::adjacent_find(srt.begin(), srt.end()) != srt.end())
                throw Error("pair_leftovers: repeated vertex in " + cells[c].label + "#" +
                            std::to_string(f));
            groups[canon_cycle(rc)].emplace_back(c, f);
        }
        for (const auto& [key, fs] : groups) {
            if (fs.size() != 2)
                throw Error("pair_leftovers: group of " + std::to_string(fs.size()) +
                            " faces sharing a boundary");
            const auto [ca, fa] = fs[0];
            const auto [cb, fb] = fs[1];
            const auto ra = root_cycle(ca, fa);
            const auto rb = root_cycle(cb, fb);
            const int n = static_cast<int>(ra.size());
            int goodr = -1, goods = 0, ngood = 0;
            for (int r = 0; r < n; ++r) {
                for (int s : {1, -1}) {
                    bool ok = true;
                    for (int i = 0; i < n && ok; ++i)
                        if (ra[i] != rb[posmod(r + s * i, n)]) ok = false;
                    if (ok) {
                        ++ngood;
                        goodr = r;
                        goods = s;
                    }
                }
            }
            if (ngood != 1)
                throw Error("pair_leftovers: " + std::to_string(ngood) + " alignments");
            apply(ca, fa, cb, fb, goodr, goods);
        }
    }

    Complex build() {
        if (!unpaired().empty())
            throw Error("build: " + std::to_string(unpaired().size()) + " faces unpaired");
        // compact vertex classes, in cell-then-local order
        std::unordered_map<int, int> vroot;
        for (const auto& cell : cells)
            for (int lv = 0; lv < cell.nverts; ++lv) {
                const int r = vuf_.find(cell.offset + lv);
                vroot.emplace(r, static_cast<int>(vroot.size()));
            }
        // compact edge classes; endpoints must be consistent across the class
        std::unordered_map<int, int> eroot;
        std::vector<std::vector<int>> edges;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (const auto& cyc : cells[c].cycles) {
                const int n = static_cast<int>(cyc.size());
                for (int i = 0; i < n; ++i) {
                    const int u = cyc[i], v = cyc[(i + 1) % n];
                    const int r = euf_.find(ekey_id(static_cast<int>(c), u, v));
                    const int ru = vroot.at(vuf_.find(g(static_cast<int>(c), u)));
                    const int rv = vroot.at(vuf_.find(g(static_cast<int>(c), v)));
                    if (ru == rv) throw Error("build: edge collapsed to a loop");
                    std::vector<int> ep{std::min(ru, rv), std::max(ru, rv)};
                    auto [it, fresh] = eroot.emplace(r, static_cast<int>(edges.size()));
                    if (fresh)
                        edges.push_back(std::move(ep));
                    else if (edges[it->second] != ep)
                        throw Error("build: edge class endpoint mismatch");
                }
            }
        }
        // one 2-face per pairing, one 3-cell per assembly cell
        std::vector<std::vector<int>> faces2;
        for (const auto& p : pairings) {
            const auto& cyc = cells[p.cellA].cycles[p.fA];
            const int n = static_cast<int>(cyc.size());
            std::vector<int> fe(n);
            for (int i = 0; i < n; ++i)
                fe[i] = eroot.at(euf_.find(ekey_id(p.cellA, cyc[i], cyc[(i + 1) % n])));
            faces2.push_back(std::move(fe));
        }
        std::vector<std::vector<int>> cells3;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::vector<int> fs;
            for (std::size_t f = 0; f < cells[c].cycles.size(); ++f)
                fs.push_back(pair_of_.at({static_cast<int>(c), static_cast<int>(f)}));
            std::sort(fs.begin(), fs.end());
            cells3.push_back(std::move(fs));
        }
        return make_complex(ceil_rank(),
                            {std::vector<std::vector<int>>(vroot.size()), std::move(edges),
                             std::move(faces2), std::move(cells3)});
    }

private:
    static int ceil_rank() { return 3; }

    int nglobal_ = 0;
    Dsu vuf_;
    Dsu euf_;
    std::unordered_map<std::uint64_t, int> ekeys_;
    std::map<std::pair<int, int>, int> pair_of_;

    int ekey_id(int cell, int u, int v) {
        int a = g(cell, u), b = g(cell, v);
        if (a > b) std::swap(a, b);
        auto [it, fresh] = ekeys_.emplace(pack_pair(a, b), euf_.size());
        if (fresh) euf_.add();
        return it->second;
    }

    void apply(int cellA, int fA, int cellB, int fB, int r, int s) {
        if (cellA == cellB && fA == fB) throw Error("apply: face paired with itself");
        if (pair_of_.count({cellA, fA}) || pair_of_.count({cellB, fB}))
            throw Error("apply: face already paired");
        const auto& la = cells[cellA].cycles[fA];
        const auto& lb = cells[cellB].cycles[fB];
        const int n = static_cast<int>(la.size());
        for (int i = 0; i < n; ++i) {
            const int j = posmod(r + s * i, n);
            const int j2 = posmod(r + s * (i + 1), n);
            vuf_.unite(g(cellA, la[i]), g(cellB, lb[j]));
            euf_.unite(ekey_id(cellA, la[i], la[(i + 1) % n]), ekey_id(cellB, lb[j], lb[j2]));
        }
        const int k = static_cast<int>(pairings.size());
        pair_of_[{cellA, fA}] = k;
        pair_of_[{cellB, fB}] = k;
        pairings.push_back({cellA, fA, cellB, fB, r, s});
    }
};

namespace detail {

// Combinatorics of a simple 3-valent closed surface, as corona input.
struct SurfaceInfo {
    std::vector<std::vector<int>> fcyc;
    std::unordered_map<std::uint64_t, int> ekey;  // (u,v) both orders -> edge id
    std::vector<std::vector<int>> ef;             // edge -> 2 faces
    std::vector<std::vector<int>> vf;             // vertex -> 3 faces
    std::vector<std::array<int, 2>> eends;
    int nv, ne, nf;

    explicit SurfaceInfo(const Complex& fx) {
        if (fx.dim != 2) throw Error("corona: rank-2 complex required");
        const auto bad = validate_simple_closed(fx);
        if (!bad.empty()) throw Error("corona: " + bad[0]);
        nv = fx.count(0);
        ne = fx.count(1);
        nf = fx.count(2);
        fcyc.resize(nf);
        ef.resize(ne);
        vf.resize(nv);
        eends.resize(ne);
        for (int e = 0; e < ne; ++e) {
            const int u = fx.cells[1][e][0], v = fx.cells[1][e][1];
            eends[e] = {u, v};
            ekey[pack_pair(u, v)] = e;
            ekey[pack_pair(v, u)] = e;
        }
        for (int f = 0; f < nf; ++f) {
            fcyc[f] = face_vertex_cycle(fx, f);
            const int gon = static_cast<int>(fcyc[f].size());
            for (int i = 0; i < gon; ++i) {
                ef[ekey.at(pack_pair(fcyc[f][i], fcyc[f][(i + 1) % gon]))].push_back(f);
                vf[fcyc[f][i]].push_back(f);
            }
        }
        for (int v = 0; v < nv; ++v)
            if (vf[v].size() != 3) throw Error("corona: surface must be 3-valent");
    }

    int edge_of(int f, int pos) const {
        const auto& cyc = fcyc[f];
        const int gon = static_cast<int>(cyc.size());
        return ekey.at(pack_pair(cyc[pos], cyc[(pos + 1) % gon]));
    }

    std::array<int, 3> vertex_edges(int a) const {
        std::vector<int> out;
        for (int f : vf[a]) {
            const auto& cyc = fcyc[f];
            const int gon = static_cast<int>(cyc.size());
            const int k = static_cast<int>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
            out.push_back(ekey.at(pack_pair(a, cyc[(k + 1) % gon])));
            out.push_back(ekey.at(pack_pair(cyc[posmod(k - 1, gon)], a)));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (out.size() != 3) throw Error("corona: corner is not trihedral");
        return {out[0], out[1], out[2]};
    }

    // (f0, f1, f2, e01, e12, e20) at vertex a: f0 the smallest incident face,
    // e01/e20 its two edges at a (e01 the smaller), f1 across e01, f2 the
    // remaining face, e12 the remaining edge.
    std::array<int, 6> corner_frame(int a) const {
        const int f0 = *std::min_element(vf[a].begin(), vf[a].end());
        const auto& cyc = fcyc[f0];
        const int gon = static_cast<int>(cyc.size());
        const int k = static_cast<int>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
        const int e_next = ekey.at(pack_pair(a, cyc[(k + 1) % gon]));
        const int e_prev = ekey.at(pack_pair(cyc[posmod(k - 1, gon)], a));
        const int e01 = std::min(e_next, e_prev);
        const int e20 = std::max(e_next, e_prev);
        const int f1 = (ef[e01][0] == f0) ? ef[e01][1] : ef[e01][0];
        int f2 = -1;
        for (int f : vf[a])
            if (f != f0 && f != f1) f2 = f;
        if (f2 < 0) throw Error("corona: corner frame inconsistent");
        int e12 = -1;
        for (int e : vertex_edges(a))
            if (e != e01 && e != e20) e12 = e;
        const auto& two = ef[e12];
        if (!((two[0] == f1 && two[1] == f2) || (two[0] == f2 && two[1] == f1)))
            throw Error("corona: corner frame inconsistent");
        return {f0, f1, f2, e01, e12, e20};
    }
};

// local vertex/face ids of barrel(g)
struct BarrelIds {
    int g;
    int bot(int j) const { return posmod(j, g); }
    int lm(int j) const { return g + posmod(j, g); }
    int hm(int j) const { return 2 * g + posmod(j, g); }
    int top(int j) const { return 3 * g + posmod(j, g); }
    static constexpr int cap = 0;
    static constexpr int topcap = 1;
    int BP(int j) const { return 2 + posmod(j, g); }
    int TP(int j) const { return g + 2 + posmod(j, g); }
};

inline const std::vector<std::vector<int>>& barrel_cycles(int g) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(g);
    if (it == cache.end()) {
        const Complex bx = barrel(g);
        std::vector<std::vector<int>> cycs;
        for (int f = 0; f < bx.count(2); ++f) cycs.push_back(face_vertex_cycle(bx, f));
        it = cache.emplace(g, std::move(cycs)).first;
    }
    return it->second;
}

}  // namespace detail

// Thicken a simple 3-valent 2-sphere F into a rank-3 complex carrying two
// copies of F as antipodal cells. Around each copy: a barrel over every face
// (cap inward), a dodecahedral cell at every corner, and a second barrel
// layer; one dodecahedral cell per edge of F closes the equator between the
// copies.
inline Assembly corona_assembly(const Complex& fx) {
    using detail::BarrelIds;
    const detail::SurfaceInfo F(fx);
    Assembly A;

    std::array<int, 2> FC;
    for (int c : {0, 1}) FC[c] = A.add_cell(F.fcyc, "F[" + std::to_string(c) + "]");
    std::vector<int> gon(F.nf);
    for (int f = 0; f < F.nf; ++f) gon[f] = static_cast<int>(F.fcyc[f].size());

    std::array<std::vector<int>, 2> U, C, D;
    for (int c : {0, 1}) {
        for (int f = 0; f < F.nf; ++f)
            U[c].push_back(A.add_cell(detail::barrel_cycles(gon[f]),
                                      "U[" + std::to_string(c) + "]f" + std::to_string(f)));
        for (int f = 0; f < F.nf; ++f)
            C[c].push_back(A.add_cell(detail::barrel_cycles(gon[f]),
                                      "C[" + std::to_string(c) + "]f" + std::to_string(f)));
        for (int a = 0; a < F.nv; ++a)
            D[c].push_back(A.add_cell(detail::barrel_cycles(5),
                                      "D[" + std::to_string(c) + "]a" + std::to_string(a)));
    }
    std::vector<int> W;
    for (int e = 0; e < F.ne; ++e)
        W.push_back(A.add_cell(detail::barrel_cycles(5), "W e" + std::to_string(e)));

    const BarrelIds b5{5};
    std::vector<std::array<int, 6>> frames;
    for (int a = 0; a < F.nv; ++a) frames.push_back(F.corner_frame(a));

    // TP face of U over face f at corner a
    auto T_face = [&](int f, int a) {
        const auto& cyc = F.fcyc[f];
        const int k = static_cast<int>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
        return std::pair<int, int>{BarrelIds{gon[f]}.TP(k - 1), k};
    };

    // corner-cell face roles at vertex a
    struct Slots {
        std::map<int, int> iface;  // edge of F -> face of D_a toward the other corner
        std::map<int, int> ring;   // face of F -> face of D_a toward C over it
        std::map<int, int> free;   // edge of F -> face of D_a toward W over it
    };
    std::vector<Slots> slots(F.nv);
    for (int a = 0; a < F.nv; ++a) {
        const auto [f0, f1, f2, e01, e12, e20] = frames[a];
        slots[a].iface = {{e01, b5.BP(1)}, {e12, b5.TP(4)}, {e20, b5.BP(3)}};
        slots[a].ring = {{f0, b5.BP(2)}, {f1, b5.TP(0)}, {f2, b5.TP(3)}};
        slots[a].free = {{e01, b5.TP(1)}, {e12, BarrelIds::topcap}, {e20, b5.TP(2)}};
    }

    for (int c : {0, 1}) {
        // faces of F take U bottomcaps
        for (int f = 0; f < F.nf; ++f) {
            std::vector<std::pair<int, int>> pairs;
            for (int j = 0; j < gon[f]; ++j) pairs.emplace_back(F.fcyc[f][j], j);
            A.pair_explicit(FC[c], f, U[c][f], 0, pairs);
        }
        // U flanks meet across each edge of F
        for (int e = 0; e < F.ne; ++e) {
            const int fa = F.ef[e][0], fb = F.ef[e][1];
            int ja = -1, jb = -1;
            for (int i = 0; i < gon[fa]; ++i)
                if (F.edge_of(fa, i) == e) ja = i;
            for (int i = 0; i < gon[fb]; ++i)
                if (F.edge_of(fb, i) == e) jb = i;
            A.pair_anchored(U[c][fa], 2 + ja, U[c][fb], 2 + jb);
        }
        // corner cells
        for (int a = 0; a < F.nv; ++a) {
            const auto [f0, f1, f2, e01, e12, e20] = frames[a];
            const auto [tf0, k0] = T_face(f0, a);
            const BarrelIds bg{gon[f0]};
            const int aprime = A.g(U[c][f0], bg.lm(k0));
            int j01 = -1, j20 = -1;
            for (int i = 0; i < gon[f0]; ++i) {
                if (F.edge_of(f0, i) == e01) j01 = i;
                if (F.edge_of(f0, i) == e20) j20 = i;
            }
            const int m01 = A.g(U[c][f0], bg.hm(j01));
            const int m20 = A.g(U[c][f0], bg.hm(j20));
            A.pair_seeded(D[c][a], BarrelIds::cap, U[c][f0], tf0,
                          {{b5.bot(0), aprime}, {b5.bot(1), m01}});
            if (A.root(D[c][a], b5.bot(4)) != A.find_global(m20))
                throw Error("corona: corner cap orientation");
            A.pair_anchored(D[c][a], b5.BP(0), U[c][f1], T_face(f1, a).first);
            A.pair_anchored(D[c][a], b5.BP(4), U[c][f2], T_face(f2, a).first);
        }
        // corner-corner interfaces
        for (int e = 0; e < F.ne; ++e) {
            const int a = F.eends[e][0], b = F.eends[e][1];
            A.pair_anchored(D[c][a], slots[a].iface.at(e), D[c][b], slots[b].iface.at(e));
        }
        // second barrel layer over each face
        for (int f = 0; f < F.nf; ++f) {
            const BarrelIds bg{gon[f]};
            std::vector<std::pair<int, int>> pairs;
            for (int j = 0; j < gon[f]; ++j) pairs.emplace_back(bg.bot(j), bg.top(j));
            A.pair_explicit(C[c][f], 0, U[c][f], 1, pairs);
        }
        for (int f = 0; f < F.nf; ++f) {
            for (int j = 0; j < gon[f]; ++j) {
                const int a = F.fcyc[f][(j + 1) % gon[f]];
                A.pair_anchored(C[c][f], 2 + j, D[c][a], slots[a].ring.at(f));
            }
        }
    }
    // the two copies meet over every face
    for (int f = 0; f < F.nf; ++f) {
        const BarrelIds bg{gon[f]};
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < gon[f]; ++j) pairs.emplace_back(bg.top(j), bg.top(j));
        A.pair_explicit(C[0][f], 1, C[1][f], 1, pairs);
    }

    // the root pair shared by the free and interface faces of D_a at edge e,
    // ordered so the first endpoint lies on D_a's ring face over fmin
    auto eta = [&](int c, int a, int e, int fmin) {
        const auto rc_free = A.root_cycle(D[c][a], slots[a].free.at(e));
        const auto rc_if = A.root_cycle(D[c][a], slots[a].iface.at(e));
        auto epairs = [](const std::vector<int>& rc) {
            std::unordered_set<std::uint64_t> out;
            const int n = static_cast<int>(rc.size());
            for (int i = 0; i < n; ++i) {
                const int u = rc[i], v = rc[(i + 1) % n];
                out.insert(pack_pair(std::min(u, v), std::max(u, v)));
            }
            return out;
        };
        const auto pf = epairs(rc_free);
        const auto pi = epairs(rc_if);
        std::uint64_t common = 0;
        int ncommon = 0;
        for (auto k : pf)
            if (pi.count(k)) {
                common = k;
                ++ncommon;
            }
        if (ncommon != 1) throw Error("corona: " + std::to_string(ncommon) + " equator edges");
        int x = static_cast<int>(common >> 32), y = static_cast<int>(common & 0xffffffffu);
        const auto rring = A.root_cycle(D[c][a], slots[a].ring.at(fmin));
        const bool inx = std::find(rring.begin(), rring.end(), x) != rring.end();
        const bool iny = std::find(rring.begin(), rring.end(), y) != rring.end();
        if (inx == iny) throw Error("corona: equator endpoint ambiguity");
        return inx ? std::pair<int, int>{x, y} : std::pair<int, int>{y, x};
    };

    // the unique unpaired TP face of C over f containing the given class
    auto ctop = [&](int f, int c, int root) {
        root = A.find_global(root);
        const BarrelIds bg{gon[f]};
        int hit = -1, nhits = 0;
        for (int j = 0; j < gon[f]; ++j) {
            if (A.paired(C[c][f], bg.TP(j))) continue;
            const auto rc = A.root_cycle(C[c][f], bg.TP(j));
            if (std::find(rc.begin(), rc.end(), root) != rc.end()) {
                hit = bg.TP(j);
                ++nhits;
            }
        }
        if (nhits != 1) throw Error("corona: " + std::to_string(nhits) + " cap candidates");
        return hit;
    };

    // edge cells close the equator
    for (int e = 0; e < F.ne; ++e) {
        const int a = F.eends[e][0], b = F.eends[e][1];
        const int fmin = std::min(F.ef[e][0], F.ef[e][1]);
        const int fmax = std::max(F.ef[e][0], F.ef[e][1]);
        const auto [x0, y0] = eta(0, a, e, fmin);
        A.pair_seeded(W[e], b5.BP(0), D[0][a], slots[a].free.at(e),
                      {{b5.bot(1), x0}, {b5.lm(1), y0}});
        A.pair_anchored(W[e], b5.BP(1), D[0][b], slots[b].free.at(e));
        A.pair_anchored(W[e], BarrelIds::cap, C[0][fmin], ctop(fmin, 0, x0));
        A.pair_anchored(W[e], b5.TP(0), C[0][fmax], ctop(fmax, 0, y0));
        // far side: the equator classes planted so far force these two
        const auto [x1, y1] = eta(1, a, e, fmin);
        A.pair_anchored(W[e], BarrelIds::topcap, C[1][fmax], ctop(fmax, 1, y1));
        A.pair_anchored(W[e], b5.BP(3), C[1][fmin], ctop(fmin, 1, x1));
        std::vector<std::pair<int, int>> frees1 = {{D[1][a], slots[a].free.at(e)},
                                                   {D[1][b], slots[b].free.at(e)}};
        const auto hit = A.pair_best(W[e], b5.TP(2), frees1);
        const auto other = (frees1[0] == hit) ? frees1[1] : frees1[0];
        A.pair_anchored(W[e], b5.TP(3), other.first, other.second);
    }
    A.pair_leftovers();
    return A;
}

inline Complex corona(const Complex& fx) { return corona_assembly(fx).build(); }

}  // namespace cellforge
