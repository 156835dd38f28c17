#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "flags.hpp"

namespace cellforge {

// Face vertex cycles rotated/reflected into a global orientation: every edge
// is traversed in opposite directions by its two faces.
inline std::vector<std::vector<int>> orient_faces(const Complex& cx) {
    if (cx.dim != 2) throw Error("orient_faces: rank-2 complex required");
    const int nf = cx.count(2);
    std::vector<std::vector<int>> fcycles(nf);
    for (int f = 0; f < nf; ++f) fcycles[f] = face_vertex_cycle(cx, f);

    std::map<std::pair<int, int>, std::vector<int>> ef;  // sorted edge -> faces
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = fcycles[f];
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i)
            ef[std::minmax(cyc[i], cyc[(i + 1) % g])].push_back(f);
    }
    for (const auto& [e, fs] : ef)
        if (fs.size() != 2) throw Error("orient_faces: edge not in exactly 2 faces");

    auto has_dart = [](const std::vector<int>& cyc, int a, int b) {
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i)
            if (cyc[posmod(i - 1, g)] == a && cyc[i] == b) return true;
        return false;
    };

    std::vector<std::vector<int>> oriented(nf);
    std::vector<char> done(nf, 0);
    oriented[0] = fcycles[0];
    done[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        const auto& cyc = oriented[f];
        const int g = static_cast<int>(cyc.size());
        for (int i = 0; i < g; ++i) {
            const int a = cyc[posmod(i - 1, g)], b = cyc[i];
            const auto& fs = ef.at(std::minmax(a, b));
            const int nb = (fs[0] == f) ? fs[1] : fs[0];
            if (!done[nb]) {
                std::vector<int> c2 = fcycles[nb];
                if (!has_dart(c2, b, a)) std::reverse(c2.begin(), c2.end());
                if (!has_dart(c2, b, a)) throw Error("orient_faces: edge missing from neighbor");
                oriented[nb] = std::move(c2);
                done[nb] = 1;
                stack.push_back(nb);
            } else if (!has_dart(oriented[nb], b, a)) {
                throw Error("orient_faces: complex is not orientable");
            }
        }
    }
    for (int f = 0; f < nf; ++f)
        if (!done[f]) throw Error("orient_faces: complex is disconnected");
    return oriented;
}

// Quotient of a closed surface by a fixed-point-free vertex involution that
// is an automorphism; faces identified in pairs, duplicates dropped.
inline Complex fold(const Complex& cx, const std::vector<int>& sigma) {
    if (cx.dim != 2) throw Error("fold: rank-2 complex required");
    const int nv = cx.count(0);
    if (static_cast<int>(sigma.size()) != nv) throw Error("fold: involution size mismatch");
    for (int v = 0; v < nv; ++v) {
        if (sigma[v] < 0 || sigma[v] >= nv || sigma[sigma[v]] != v)
            throw Error("fold: map is not an involution");
        if (sigma[v] == v) throw Error("fold: involution has a fixed vertex");
    }
    std::vector<int> newid(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        const int r = std::min(v, sigma[v]);
        if (newid[r] < 0) newid[r] = next++;
        newid[v] = newid[r];
    }
    std::map<std::vector<int>, char> seen;
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < cx.count(2); ++f) {
        std::vector<int> vc;
        for (int v : face_vertex_cycle(cx, f)) vc.push_back(newid[v]);
        if (!seen.emplace(canon_cycle(vc), 1).second) continue;
        faces.push_back(std::move(vc));
    }
    try {
        return from_faces(faces, next);
    } catch (const Error& e) {
        throw NonRegularError(std::string("fold: quotient is not an incidence complex: ") +
                              e.what());
    }
}

// ---------------------------------------------------------------------------
// Facet-pairing quotient of a solid whose boundary is the given surface:
// boundary faces are identified in pairs along a fixed-point-free involutive
// automorphism sigma, each pair twisted by t steps in the target's oriented
// order. The result is a rank-4 flag system (usually not an incidence
// complex, so no Complex is produced).
// ---------------------------------------------------------------------------

namespace detail {

inline void check_pairing_map(const Complex& cx, const std::vector<int>& sigma) {
    const int nv = cx.count(0);
    if (static_cast<int>(sigma.size()) != nv)
        throw Error("quotient: pairing map size mismatch");
    for (int v = 0; v < nv; ++v) {
        if (sigma[v] < 0 || sigma[v] >= nv || sigma[sigma[v]] != v)
            throw Error("quotient: pairing map is not an involution");
        if (sigma[v] == v) throw Error("quotient: pairing map has a fixed vertex");
    }
    std::map<std::pair<int, int>, char> eset;
    for (const auto& e : cx.cells[1]) eset.emplace(std::minmax(e[0], e[1]), 1);
    for (const auto& e : cx.cells[1])
        if (!eset.count(std::minmax(sigma[e[0]], sigma[e[1]])))
            throw Error("quotient: pairing map is not an automorphism");
}

}  // namespace detail

// twist_of(f, g) must give the twist for the face pair {f, g}, read on the
// f -> g map; it is consulted once per unordered pair, for the lower rep.
template <class TwistFn>
    requires std::invocable<TwistFn&, int, int>
inline FlagSystem solid_pairing_quotient(const Complex& cx, const std::vector<int>& sigma,
                                         TwistFn&& twist_of) {
    if (cx.dim != 2) throw Error("quotient: rank-2 complex required");
    const auto bad = validate_simple_closed(cx);
    if (!bad.empty()) throw Error("quotient: " + bad[0]);
    detail::check_pairing_map(cx, sigma);

    const int nf = cx.count(2);
    const auto fcycles = orient_faces(cx);

    std::map<std::pair<int, int>, int> ekey;
    for (int e = 0; e < cx.count(1); ++e)
        ekey[std::minmax(cx.cells[1][e][0], cx.cells[1][e][1])] = e;

    std::map<std::vector<int>, int> fkey;
    for (int f = 0; f < nf; ++f) fkey[canon_cycle(fcycles[f])] = f;
    auto face_image = [&](int f) {
        std::vector<int> img;
        for (int v : fcycles[f]) img.push_back(sigma[v]);
        auto it = fkey.find(canon_cycle(img));
        if (it == fkey.end()) throw Error("quotient: pairing map is not an automorphism");
        return it->second;
    };

    std::vector<std::vector<int>> fedges(nf);
    for (int f = 0; f < nf; ++f) {
        const auto& vc = fcycles[f];
        const int g = static_cast<int>(vc.size());
        for (int i = 0; i < g; ++i)
            fedges[f].push_back(ekey.at(std::minmax(vc[posmod(i - 1, g)], vc[i])));
    }

    // flags (v, e, f) of the boundary, read off the oriented cycles
    std::map<std::array<int, 3>, int> index;
    std::vector<std::array<int, 3>> flags;
    for (int f = 0; f < nf; ++f) {
        const auto& vc = fcycles[f];
        const int g = static_cast<int>(vc.size());
        for (int i = 0; i < g; ++i)
            for (int v : {vc[posmod(i - 1, g)], vc[i]}) {
                const std::array<int, 3> key{v, fedges[f][i], f};
                if (index.emplace(key, static_cast<int>(flags.size())).second)
                    flags.push_back(key);
            }
    }
    const int nfl = static_cast<int>(flags.size());

    FlagSystem fs;
    fs.rank = 4;
    fs.adj.assign(4, std::vector<int>(nfl, -1));
    fs.chain.resize(nfl);

    std::map<int, std::vector<int>> ef;
    for (int f = 0; f < nf; ++f)
        for (int e : fedges[f]) ef[e].push_back(f);

    for (int idx = 0; idx < nfl; ++idx) {
        const auto [v, e, f] = flags[idx];
        fs.chain[idx] = {v, e, f, 0};
        const int u = (cx.cells[1][e][0] == v) ? cx.cells[1][e][1] : cx.cells[1][e][0];
        fs.adj[0][idx] = index.at({u, e, f});
        const auto& vc = fcycles[f];
        const int g = static_cast<int>(vc.size());
        int e2 = -1;
        for (int i = 0; i < g; ++i) {
            if (vc[posmod(i - 1, g)] != v && vc[i] != v) continue;
            if (fedges[f][i] != e) e2 = fedges[f][i];
        }
        fs.adj[1][idx] = index.at({v, e2, f});
        const auto& two = ef.at(e);
        const int f2 = (two[0] == f) ? two[1] : two[0];
        fs.adj[2][idx] = index.at({v, e, f2});
    }

    // pairing maps: sigma composed with a t-step rotation in the target's
    // oriented order
    std::vector<std::vector<int>> vmaps(nf);
    std::vector<char> donef(nf, 0);
    for (int f = 0; f < nf; ++f) {
        if (donef[f]) continue;
        const int g = face_image(f);
        if (g == f) throw Error("quotient: pairing fixes a face");
        donef[f] = donef[g] = 1;
        const auto& W = fcycles[f];
        const auto& U = fcycles[g];
        const int gon = static_cast<int>(W.size());
        const int t = twist_of(f, g);
        std::vector<int> pos(cx.count(0), -1);
        for (int k = 0; k < gon; ++k) pos[U[k]] = k;
        vmaps[f].assign(cx.count(0), -1);
        vmaps[g].assign(cx.count(0), -1);
        for (int k = 0; k < gon; ++k) {
            const int img = U[posmod(pos[sigma[W[k]]] + t, gon)];
            vmaps[f][W[k]] = img;
            vmaps[g][img] = W[k];
        }
    }
    for (int idx = 0; idx < nfl; ++idx) {
        const auto [v, e, f] = flags[idx];
        const auto& phi = vmaps[f];
        const int g = face_image(f);
        const int pu = phi[cx.cells[1][e][0]], pw = phi[cx.cells[1][e][1]];
        auto it = ekey.find(std::minmax(pu, pw));
        if (it == ekey.end()) throw Error("quotient: pairing does not respect edges");
        fs.adj[3][idx] = index.at({phi[v], it->second, g});
    }

    validate_flags(fs);
    return fs;
}

inline FlagSystem solid_pairing_quotient(const Complex& cx, const std::vector<int>& sigma,
                                         int twist) {
    return solid_pairing_quotient(cx, sigma, [twist](int, int) { return twist; });
}

inline FlagSystem solid_pairing_quotient(const Complex& cx, const std::vector<int>& sigma,
                                         const std::map<std::pair<int, int>, int>& twists) {
    return solid_pairing_quotient(cx, sigma, [&](int f, int g) {
        auto it = twists.find({f, g});
        if (it == twists.end()) it = twists.find({g, f});
        if (it == twists.end()) throw Error("quotient: no twist given for a face pair");
        return it->second;
    });
}

}  // namespace cellforge
