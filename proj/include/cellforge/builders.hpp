#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "complex.hpp"

namespace cellforge {

inline int posmod(int a, int m) { return ((a % m) + m) % m; }

// Barrel B_i: two i-gonal caps separated by a belt of 2i pentagons.
// Vertices: bot j, lower-middle i+j, higher-middle 2i+j, top 3i+j.
// Faces: 0 bottom cap, 1 top cap, 2+j lower belt BP_j, i+2+j upper belt TP_j.
inline Complex barrel(int i) {
    if (i < 3) throw Error("barrel: need i >= 3");
    auto bot = [i](int j) { return posmod(j, i); };
    auto lm = [i](int j) { return i + posmod(j, i); };
    auto hm = [i](int j) { return 2 * i + posmod(j, i); };
    auto top = [i](int j) { return 3 * i + posmod(j, i); };
    std::vector<std::vector<int>> faces;
    std::vector<int> cap(i), topcap(i);
    for (int j = 0; j < i; ++j) cap[j] = bot(j);
    for (int j = 0; j < i; ++j) topcap[j] = top(j);
    faces.push_back(cap);
    faces.push_back(topcap);
    for (int j = 0; j < i; ++j) faces.push_back({bot(j), bot(j + 1), lm(j + 1), hm(j), lm(j)});
    for (int j = 0; j < i; ++j) faces.push_back({top(j), top(j + 1), hm(j + 1), lm(j + 1), hm(j)});
    return from_faces(faces, 4 * i);
}

inline Complex dodecahedron() { return barrel(5); }

// Simplicial 2-sphere: two-capped pile of m pentagonal antiprisms
// (the icosahedron at m = 1).
inline Complex antiprism_pile(int m) {
    if (m < 1) throw Error("antiprism_pile: need m >= 1");
    auto r = [](int k, int j) { return 5 * k + posmod(j, 5); };
    const int A = 5 * (m + 1);
    const int B = A + 1;
    std::vector<std::vector<int>> faces;
    for (int j = 0; j < 5; ++j) faces.push_back({A, r(0, j), r(0, j + 1)});
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < 5; ++j) {
            faces.push_back({r(k, j), r(k, j + 1), r(k + 1, j)});
            faces.push_back({r(k + 1, j), r(k + 1, j + 1), r(k, j + 1)});
        }
    }
    for (int j = 0; j < 5; ++j) faces.push_back({B, r(m, j + 1), r(m, j)});
    return from_faces(faces, B + 1);
}

// Layered fullerene F_{20+10i}: the dodecahedron with i extra pentagon rings.
inline Complex layered_dodecahedron(int i) {
    if (i < 0) throw Error("layered_dodecahedron: need i >= 0");
    return dual2(antiprism_pile(i + 1));
}

// The unique antipodal vertex involution of an odd barrel. Even barrels have
// none: their point group is D_id with i even, which contains no fixed-point
// free central element.
inline std::vector<int> barrel_sigma(int i) {
    if (i % 2 == 0) throw Error("barrel_sigma: even barrels have no antipodal involution");
    const int k = (i - 1) / 2;
    std::vector<int> out(4 * i, -1);
    for (int j = 0; j < i; ++j) {
        out[j] = 3 * i + posmod(j + k, i);
        out[3 * i + j] = posmod(j + k + 1, i);
        out[i + j] = 2 * i + posmod(j + k, i);
        out[2 * i + j] = i + posmod(j + k + 1, i);
    }
    return out;
}

// F_32 with D_3d symmetry: two blocks of six pentagons separated by a ring of
// six hexagons. Centrally symmetric, so it folds.
inline Complex f32_d3d() {
    auto a = [](int i) { return 1 + posmod(i, 3); };
    auto b = [](int i) { return 4 + posmod(i, 3); };
    auto c = [](int i) { return 7 + posmod(i, 3); };
    auto m = [](int i) { return 10 + posmod(i, 3); };
    auto n = [](int i) { return 13 + posmod(i, 3); };
    const int x = 0;
    const int P = 16;
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 3; ++i) {
        faces.push_back({x, a(i), b(i), c(i), a(i + 1)});
        faces.push_back({c(i), a(i + 1), b(i + 1), n(i), m(i)});
        faces.push_back({x + P, a(i) + P, b(i) + P, c(i) + P, a(i + 1) + P});
        faces.push_back({c(i) + P, a(i + 1) + P, b(i + 1) + P, n(i) + P, m(i) + P});
        faces.push_back({n(i - 1), b(i), c(i), m(i), m(-i) + P, n(-i) + P});
        faces.push_back({n(i - 1) + P, b(i) + P, c(i) + P, m(i) + P, m(-i), n(-i)});
    }
    return from_faces(faces, 32);
}

inline std::vector<int> f32_sigma() {
    auto a = [](int i) { return 1 + posmod(i, 3); };
    auto b = [](int i) { return 4 + posmod(i, 3); };
    auto c = [](int i) { return 7 + posmod(i, 3); };
    auto m = [](int i) { return 10 + posmod(i, 3); };
    auto n = [](int i) { return 13 + posmod(i, 3); };
    const int P = 16;
    std::vector<int> s(32, -1);
    s[0] = P;
    s[P] = 0;
    for (int i = 0; i < 3; ++i) {
        s[a(i)] = a(-i) + P;
        s[a(-i) + P] = a(i);
        s[b(i)] = c(-i - 1) + P;
        s[c(-i - 1) + P] = b(i);
        s[c(i)] = b(-i - 1) + P;
        s[b(-i - 1) + P] = c(i);
        s[m(i)] = n(-i - 2) + P;
        s[n(-i - 2) + P] = m(i);
        s[n(i)] = m(-i - 2) + P;
        s[m(-i - 2) + P] = n(i);
    }
    return s;
}

// The 26-vertex fullerene with three hexagons (D_3h).
inline Complex f26() {
    return from_faces(
        {{1, 2, 3, 4, 5, 0},
         {0, 8, 7, 6, 5},
         {0, 8, 9, 10, 1},
         {1, 10, 11, 12, 2},
         {2, 12, 13, 14, 3},
         {3, 14, 15, 16, 4},
         {5, 6, 17, 16, 4},
         {6, 17, 18, 21, 22, 7},
         {8, 9, 23, 22, 7},
         {10, 11, 24, 23, 9},
         {12, 13, 20, 25, 24, 11},
         {14, 15, 19, 20, 13},
         {16, 17, 18, 19, 15},
         {18, 19, 20, 25, 21},
         {22, 23, 24, 25, 21}},
        26);
}

// The 28-vertex fullerene with tetrahedral symmetry: four pairwise
// non-adjacent hexagons.
inline Complex f28_td() {
    return from_faces(
        {{1, 2, 3, 4, 5, 0},
         {0, 8, 7, 6, 5},
         {0, 8, 9, 10, 1},
         {1, 10, 11, 12, 2},
         {2, 12, 13, 14, 3},
         {3, 14, 15, 16, 4},
         {5, 6, 17, 16, 4},
         {6, 17, 18, 20, 21, 7},
         {8, 9, 22, 21, 7},
         {10, 11, 24, 23, 22, 9},
         {12, 13, 25, 24, 11},
         {14, 15, 19, 26, 25, 13},
         {16, 17, 18, 19, 15},
         {18, 19, 26, 27, 20},
         {21, 22, 23, 27, 20},
         {24, 25, 26, 27, 23}},
        28);
}

inline Complex cube() {
    return from_faces({{0, 1, 2, 3},
                       {7, 6, 5, 4},
                       {0, 4, 5, 1},
                       {1, 5, 6, 2},
                       {2, 6, 7, 3},
                       {3, 7, 4, 0}},
                      8);
}

inline Complex tetrahedron_surface() {
    return from_faces({{0, 1, 2}, {1, 0, 3}, {2, 1, 3}, {0, 2, 3}}, 4);
}

// Rank-3 incidence complex of a simplicial closed 3-manifold given by its
// tetrahedra (as vertex 4-sets).
inline Complex simplicial_from_tets(const std::vector<std::array<int, 4>>& tets_in, int nv) {
    std::vector<std::array<int, 4>> tets = tets_in;
    for (auto& t : tets) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
            throw Error("simplicial_from_tets: degenerate tetrahedron");
    }

    std::vector<std::array<int, 2>> edges;
    for (const auto& t : tets)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.push_back({t[i], t[j]});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto eid = [&](int u, int v) {
        std::array<int, 2> key{std::min(u, v), std::max(u, v)};
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        return static_cast<int>(it - edges.begin());
    };

    std::vector<std::array<int, 3>> tris;
    for (const auto& t : tets)
        for (int i = 0; i < 4; ++i) {
            std::array<int, 3> tri;
            int p = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) tri[p++] = t[j];
            tris.push_back(tri);
        }
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    auto tid = [&](std::array<int, 3> tri) {
        std::sort(tri.begin(), tri.end());
        auto it = std::lower_bound(tris.begin(), tris.end(), tri);
        return static_cast<int>(it - tris.begin());
    };

    std::vector<std::vector<std::vector<int>>> cells(4);
    cells[0].assign(nv, {});
    cells[1].reserve(edges.size());
    for (const auto& e : edges) cells[1].push_back({e[0], e[1]});
    cells[2].reserve(tris.size());
    for (const auto& tri : tris)
        cells[2].push_back({eid(tri[0], tri[1]), eid(tri[1], tri[2]), eid(tri[0], tri[2])});
    cells[3].reserve(tets.size());
    for (const auto& t : tets) {
        std::vector<int> b;
        for (int i = 0; i < 4; ++i) {
            std::array<int, 3> tri;
            int p = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) tri[p++] = t[j];
            b.push_back(tid(tri));
        }
        cells[3].push_back(std::move(b));
    }
    return make_complex(3, std::move(cells));
}

// Boundary of the 4-simplex: the smallest simple closed rank-3 complex.
inline Complex simplex4_boundary() {
    std::vector<std::array<int, 4>> tets;
    for (int skip = 0; skip < 5; ++skip) {
        std::array<int, 4> t;
        int p = 0;
        for (int v = 0; v < 5; ++v)
            if (v != skip) t[p++] = v;
        tets.push_back(t);
    }
    return simplicial_from_tets(tets, 5);
}

// ---------------------------------------------------------------------------
// The 600-cell from icosian arithmetic, and the 120-cell as its dual.
//
// Numbers a + b*sqrt(5) are integer pairs; vertex coordinates are scaled by 4
// so that all 120 unit quaternions of the binary icosahedral group have
// integer-pair components. Two vertices are joined exactly when their inner
// product is 4 + 4*sqrt(5).
// ---------------------------------------------------------------------------

struct Built600 {
    Complex cx;
    std::vector<std::array<std::array<int, 2>, 4>> coords;
    std::vector<int> vneg;                    // vertex -> antipodal vertex
    std::vector<std::array<int, 4>> tets;     // cell -> sorted vertex ids
};

inline Built600 build_600cell() {
    using Num = std::array<int, 2>;
    using Vec = std::array<Num, 4>;

    std::vector<Vec> pts;
    // 8 permutations of (+-4, 0, 0, 0)
    for (int pos = 0; pos < 4; ++pos)
        for (int sg : {4, -4}) {
            Vec v{};
            v[pos] = {sg, 0};
            pts.push_back(v);
        }
    // 16 of (+-2, +-2, +-2, +-2)
    for (int mask = 0; mask < 16; ++mask) {
        Vec v{};
        for (int i = 0; i < 4; ++i) v[i] = {(mask >> i) & 1 ? -2 : 2, 0};
        pts.push_back(v);
    }
    // 96 even permutations of (0, +-2, +-(sqrt5 - 1), +-(sqrt5 + 1))
    {
        const Num base[4] = {{0, 0}, {2, 0}, {-1, 1}, {1, 1}};
        int idx[4] = {0, 1, 2, 3};
        std::vector<std::array<int, 4>> evens;
        std::sort(idx, idx + 4);
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (idx[i] > idx[j]) ++inv;
            if (inv % 2 == 0) evens.push_back({idx[0], idx[1], idx[2], idx[3]});
        } while (std::next_permutation(idx, idx + 4));
        for (const auto& p : evens) {
            for (int mask = 0; mask < 8; ++mask) {
                Vec v{};
                int bit = 0;
                for (int slot = 0; slot < 4; ++slot) {
                    Num x = base[p[slot]];
                    if (p[slot] != 0) {
                        if ((mask >> bit) & 1) x = {-x[0], -x[1]};
                        ++bit;
                    }
                    v[slot] = x;
                }
                pts.push_back(v);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() != 120) throw Error("600-cell: expected 120 vertices, got " + std::to_string(pts.size()));

    auto dot = [](const Vec& x, const Vec& y) {
        long long A = 0, B = 0;
        for (int i = 0; i < 4; ++i) {
            const long long a = x[i][0], b = x[i][1], c = y[i][0], d = y[i][1];
            A += a * c + 5 * b * d;
            B += a * d + b * c;
        }
        return std::array<long long, 2>{A, B};
    };

    const int n = 120;
    std::vector<std::array<std::uint64_t, 2>> nbr(n, {0, 0});
    std::vector<std::vector<int>> adj(n);
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto d = dot(pts[i], pts[j]);
            if (d[0] == 4 && d[1] == 4) {
                edges.push_back({i, j});
                adj[i].push_back(j);
                adj[j].push_back(i);
                nbr[i][j >> 6] |= 1ULL << (j & 63);
                nbr[j][i >> 6] |= 1ULL << (i & 63);
            }
        }
    if (edges.size() != 720) throw Error("600-cell: expected 720 edges, got " + std::to_string(edges.size()));
    auto linked = [&](int i, int j) { return (nbr[i][j >> 6] >> (j & 63)) & 1; };

    std::vector<std::array<int, 3>> tris;
    for (const auto& e : edges)
        for (int w : adj[e[1]])
            if (w > e[1] && linked(e[0], w)) tris.push_back({e[0], e[1], w});
    if (tris.size() != 1200) throw Error("600-cell: expected 1200 triangles, got " + std::to_string(tris.size()));

    std::vector<std::array<int, 4>> tets;
    for (const auto& t : tris)
        for (int x : adj[t[2]])
            if (x > t[2] && linked(t[0], x) && linked(t[1], x)) tets.push_back({t[0], t[1], t[2], x});
    if (tets.size() != 600) throw Error("600-cell: expected 600 tetrahedra, got " + std::to_string(tets.size()));

    Built600 out;
    out.cx = simplicial_from_tets(tets, n);
    out.coords.resize(n);
    for (int i = 0; i < n; ++i) out.coords[i] = pts[i];
    out.vneg.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Vec neg;
        for (int k = 0; k < 4; ++k) neg[k] = {-pts[i][k][0], -pts[i][k][1]};
        auto it = std::lower_bound(pts.begin(), pts.end(), neg);
        if (it == pts.end() || *it != neg) throw Error("600-cell: negation image missing");
        out.vneg[i] = static_cast<int>(it - pts.begin());
    }
    out.tets = std::move(tets);
    return out;
}

// The 120-cell with the antipodal involution carried over from the 600-cell:
// its cells correspond to 600-cell vertices and its vertices to 600-cell
// tetrahedra (positionally, via the dual).
struct Built120 {
    Complex cx;
    std::vector<int> vneg;  // vertex involution induced by central inversion
    std::vector<int> cneg;  // cell involution
};

inline Built120 build_120cell() {
    Built600 six = build_600cell();
    Built120 out;
    out.cx = dual3(six.cx);
    out.cneg = six.vneg;
    std::map<std::array<int, 4>, int> tix;
    for (int t = 0; t < static_cast<int>(six.tets.size()); ++t) tix[six.tets[t]] = t;
    out.vneg.assign(six.tets.size(), -1);
    for (int t = 0; t < static_cast<int>(six.tets.size()); ++t) {
        std::array<int, 4> img;
        for (int k = 0; k < 4; ++k) img[k] = six.vneg[six.tets[t][k]];
        std::sort(img.begin(), img.end());
        auto it = tix.find(img);
        if (it == tix.end()) throw Error("120-cell: tetrahedron negation image missing");
        out.vneg[t] = it->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hexagonal-tiling quotients: fullerenes on the torus and the Klein bottle.
//
// Hexagons sit on Z^2. Vertex classes: U(x,y) shared by hexagons (x,y),
// (x+1,y), (x,y+1); D(x,y) shared by (x+1,y), (x,y+1), (x+1,y+1). The cycle
// around hexagon (a,b) is U(a,b), D(a,b-1), U(a,b-1), D(a-1,b-1), U(a-1,b),
// D(a-1,b), with neighbor directions (1,0),(1,-1),(0,-1),(-1,0),(-1,1),(0,1).
//
// Torus group: the lattice spanned by two integer vectors. Klein group: the
// lattice spanned by (s,s) and (b,-b) together with the glide
// gamma(x,y) = (y, x+s). Quotients whose 1-skeleton degenerates (loops,
// parallel edges, face pairs sharing several edges) are refused with a
// diagnostic; this happens exactly when the quotient has fewer than seven
// hexagons.
// ---------------------------------------------------------------------------

namespace polyhex {

using Pt = std::array<int, 2>;

struct Hnf {
    int d1 = 0, d2 = 0, e = 0;
};

inline long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Hnf hnf(Pt v1, Pt v2) {
    long long a = v1[0], b = v1[1], c = v2[0], d = v2[1];
    while (b != 0) {
        long long q = floordiv(d, b);
        c -= q * a;
        d -= q * b;
        std::swap(a, c);
        std::swap(b, d);
    }
    if (d < 0) {
        c = -c;
        d = -d;
    }
    if (a < 0) a = -a;
    if (a == 0 || d == 0) throw Error("polyhex: degenerate lattice basis");
    Hnf h;
    h.d1 = static_cast<int>(a);
    h.d2 = static_cast<int>(d);
    h.e = static_cast<int>(((c % a) + a) % a);
    return h;
}

struct Torus {
    Hnf h;
    Torus(Pt v1, Pt v2) : h(hnf(v1, v2)) {}
    Pt rep(Pt p) const {
        long long x = p[0], y = p[1];
        long long k = floordiv(y, h.d2);
        y -= k * h.d2;
        x -= k * h.e;
        x = ((x % h.d1) + h.d1) % h.d1;
        return {static_cast<int>(x), static_cast<int>(y)};
    }
    int nfaces() const { return h.d1 * h.d2; }
};

struct Klein {
    int b, s;
    Torus lat;
    Klein(int b_, int s_) : b(b_), s(s_), lat(Pt{s_, s_}, Pt{b_, -b_}) {
        if (b == 0 || s == 0) throw Error("polyhex: Klein parameters must be nonzero");
    }
    Pt gamma(Pt p) const { return {p[1], p[0] + s}; }
    Pt rep(Pt p) const { return std::min(lat.rep(p), lat.rep(gamma(p))); }
    int nfaces() const { return std::abs(b * s); }
};

constexpr std::array<Pt, 6> DIRS{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

struct Defects {
    long long loops = 0, parallel = 0, bad_pairs = 0, degenerate_faces = 0;
    bool clean() const { return loops == 0 && parallel == 0 && bad_pairs == 0 && degenerate_faces == 0; }
};

// Degeneracies of the 1-skeleton that make a face set fail to be a complex.
inline Defects skeleton_defects(const Complex& cx) {
    Defects d;
    const int ne = cx.count(1);
    const int nf = cx.count(2);
    std::map<std::pair<int, int>, int> epairs;
    for (int e = 0; e < ne; ++e) {
        const auto& b = cx.cells[1][e];
        if (b[0] == b[1]) {
            ++d.loops;
            continue;
        }
        ++epairs[{b[0], b[1]}];
    }
    for (const auto& [k, c] : epairs)
        if (c > 1) d.parallel += c - 1;

    std::vector<std::set<int>> fe(nf);
    std::vector<std::set<int>> fv(nf);
    std::vector<bool> fbad(nf, false);
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = cx.cells[2][f];
        fe[f] = {cyc.begin(), cyc.end()};
        if (fe[f].size() != cyc.size()) {
            fbad[f] = true;
            ++d.degenerate_faces;
            continue;
        }
        try {
            auto vc = face_vertex_cycle(cx, f);
            fv[f] = {vc.begin(), vc.end()};
            if (fv[f].size() != vc.size()) {
                fbad[f] = true;
                ++d.degenerate_faces;
            }
        } catch (const Error&) {
            fbad[f] = true;
            ++d.degenerate_faces;
        }
    }
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            if (fbad[i] || fbad[j]) {
                ++d.bad_pairs;
                continue;
            }
            std::vector<int> se;
            std::set_intersection(fe[i].begin(), fe[i].end(), fe[j].begin(), fe[j].end(),
                                  std::back_inserter(se));
            std::vector<int> sv;
            std::set_intersection(fv[i].begin(), fv[i].end(), fv[j].begin(), fv[j].end(),
                                  std::back_inserter(sv));
            if (se.size() > 1)
                ++d.bad_pairs;
            else if (se.size() == 1) {
                if (sv.size() != 2) ++d.bad_pairs;
            } else if (sv.size() > 1) {
                ++d.bad_pairs;
            }
        }
    return d;
}

using VClass = std::array<int, 3>;  // type (0=U, 1=D), x, y

template <class Grp>
inline Complex build(const Grp& grp) {
    const bool is_klein = std::is_same_v<Grp, Klein>;
    const Torus& lat = [&]() -> const Torus& {
        if constexpr (is_klein)
            return grp.lat;
        else
            return grp;
    }();

    // face orbit representatives
    std::map<Pt, int> frep;
    {
        int B = 4 * (std::abs(lat.h.d1) + std::abs(lat.h.d2) + 8);
        for (int x = -B; x <= B && static_cast<int>(frep.size()) < grp.nfaces(); ++x)
            for (int y = -B; y <= B && static_cast<int>(frep.size()) < grp.nfaces(); ++y) {
                Pt r = grp.rep({x, y});
                if (!frep.count(r)) frep.emplace(r, static_cast<int>(frep.size()));
            }
        if (static_cast<int>(frep.size()) != grp.nfaces())
            throw Error("polyhex: face orbit scan incomplete");
    }

    // edge orbit key: min over group images of the ordered endpoint pair,
    // translated so the first point sits at its lattice representative
    using EKey = std::array<int, 4>;
    auto erep = [&](Pt p, Pt ddir) {
        Pt q{p[0] + ddir[0], p[1] + ddir[1]};
        std::vector<std::pair<Pt, Pt>> images{{p, q}, {q, p}};
        if constexpr (is_klein) {
            images.push_back({grp.gamma(p), grp.gamma(q)});
            images.push_back({grp.gamma(q), grp.gamma(p)});
        }
        EKey best{};
        bool first = true;
        for (const auto& [a, bb] : images) {
            Pt ra = lat.rep(a);
            int dx = ra[0] - a[0], dy = ra[1] - a[1];
            EKey cand{ra[0], ra[1], bb[0] + dx, bb[1] + dy};
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        return best;
    };

    auto vrep = [&](int typ, Pt p) -> VClass {
        if constexpr (is_klein) {
            Pt r = std::min(grp.lat.rep(p), grp.lat.rep(grp.gamma(p)));
            return {typ, r[0], r[1]};
        } else {
            Pt r = grp.rep(p);
            return {typ, r[0], r[1]};
        }
    };

    std::map<EKey, int> eids;
    std::map<VClass, int> vids;
    std::vector<std::vector<int>> edges;   // endpoint vertex ids (filled below)
    std::vector<std::vector<int>> faces;

    std::vector<Pt> face_pts(frep.size());
    for (const auto& [r, fi] : frep) face_pts[fi] = r;

    for (const auto& r : face_pts) {
        std::vector<int> cyc;
        for (const auto& dd : DIRS) {
            EKey key = erep(r, dd);
            auto it = eids.find(key);
            if (it == eids.end()) {
                it = eids.emplace(key, static_cast<int>(edges.size())).first;
                edges.push_back({});
            }
            cyc.push_back(it->second);
        }
        faces.push_back(std::move(cyc));
    }

    auto vcycle = [&](Pt r) {
        const int a = r[0], b = r[1];
        return std::array<VClass, 6>{vrep(0, {a, b}),     vrep(1, {a, b - 1}),
                                     vrep(0, {a, b - 1}), vrep(1, {a - 1, b - 1}),
                                     vrep(0, {a - 1, b}), vrep(1, {a - 1, b})};
    };

    for (std::size_t fi = 0; fi < face_pts.size(); ++fi) {
        const Pt r = face_pts[fi];
        auto V = vcycle(r);
        for (int k = 0; k < 6; ++k) {
            EKey key = erep(r, DIRS[k]);
            int ei = eids.at(key);
            std::vector<int> pr;
            for (const VClass* vc : {&V[k], &V[(k + 1) % 6]}) {
                auto it = vids.find(*vc);
                if (it == vids.end()) it = vids.emplace(*vc, static_cast<int>(vids.size())).first;
                pr.push_back(it->second);
            }
            std::sort(pr.begin(), pr.end());
            if (edges[ei].empty())
                edges[ei] = pr;
            else if (edges[ei] != pr)
                throw Error("polyhex: edge endpoint mismatch");
        }
    }

    std::vector<std::vector<std::vector<int>>> cells(3);
    cells[0].assign(vids.size(), {});
    cells[1] = std::move(edges);
    cells[2] = std::move(faces);
    return make_complex(2, std::move(cells));
}

}  // namespace polyhex

inline Complex build_polyhex_checked(const Complex& cx, const std::string& what) {
    auto d = polyhex::skeleton_defects(cx);
    if (!d.clean()) {
        throw Error(what + ": quotient is not a complex (" + std::to_string(d.loops) +
                    " loop edges, " + std::to_string(d.parallel) + " parallel edge pairs, " +
                    std::to_string(d.bad_pairs) + " face pairs sharing more than one edge, " +
                    std::to_string(d.degenerate_faces) +
                    " degenerate faces); hexagonal quotients need at least 7 faces");
    }
    auto bad = validate_simple_closed(cx);
    if (!bad.empty()) throw Error(what + ": " + bad[0]);
    return cx;
}

// Toroidal polyhex fullerene: quotient of the hexagonal tiling by the lattice
// spanned by u and v.
inline Complex polyhex_torus(std::array<int, 2> u, std::array<int, 2> v) {
    polyhex::Torus t(u, v);
    return build_polyhex_checked(polyhex::build(t), "polyhex_torus");
}

// Klein-bottle polyhex fullerene: lattice of (s,s),(b,-b) plus a glide.
inline Complex polyhex_klein(int b, int s) {
    polyhex::Klein k(b, s);
    return build_polyhex_checked(polyhex::build(k), "polyhex_klein");
}

// The 7-hexagon torus fullerene whose skeleton is the Heawood graph (dual K_7).
inline Complex heawood_torus() { return polyhex_torus({7, 0}, {2, 1}); }

// The 9-hexagon Klein-bottle fullerene whose dual is K_{3,3,3}.
inline Complex klein_k333() { return polyhex_klein(3, 3); }

}  // namespace cellforge
