#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "census.hpp"
#include "complex.hpp"
#include "flags.hpp"

namespace cellforge {

enum class SurfaceClass { Sphere, Torus, ProjectivePlane, KleinBottle, Other };

struct SurfaceReport {
    SurfaceClass cls = SurfaceClass::Other;
    long long chi = 0;
    bool orientable = false;
    long long p5 = 0;
    long long p6 = 0;

    std::string name() const {
        switch (cls) {
            case SurfaceClass::Sphere: return "S^2";
            case SurfaceClass::Torus: return "T^2";
            case SurfaceClass::ProjectivePlane: return "P^2";
            case SurfaceClass::KleinBottle: return "K^2";
            default: break;
        }
        if (orientable) return "orientable genus " + std::to_string((2 - chi) / 2);
        return "nonorientable genus " + std::to_string(2 - chi);
    }
};

// Topological type of a closed surface complex.
inline SurfaceReport classify_surface(const Complex& cx) {
    if (cx.dim != 2) throw Error("classify_surface: rank-2 complex required");
    const auto bad = validate_simple_closed(cx);
    if (!bad.empty()) throw Error("classify_surface: " + bad[0]);
    SurfaceReport rep;
    rep.chi = euler_characteristic(cx);
    rep.orientable = orientable(cx);
    const FVector fv = f_vector(cx);
    rep.p5 = fv.p5;
    rep.p6 = fv.p6;
    if (rep.chi == 2 && rep.orientable)
        rep.cls = SurfaceClass::Sphere;
    else if (rep.chi == 0 && rep.orientable)
        rep.cls = SurfaceClass::Torus;
    else if (rep.chi == 1 && !rep.orientable)
        rep.cls = SurfaceClass::ProjectivePlane;
    else if (rep.chi == 0 && !rep.orientable)
        rep.cls = SurfaceClass::KleinBottle;
    else
        rep.cls = SurfaceClass::Other;
    return rep;
}

namespace detail {

// -1 if sigma is no automorphism; otherwise a bitmask of fixed-cell defects:
// 1 = fixed vertex, 2 = fixed edge, 4 = fixed face, 8 = not an involution.
inline int central_symmetry_defects(const Complex& cx, const std::vector<int>& sigma) {
    const int nv = cx.count(0);
    if (static_cast<int>(sigma.size()) != nv) return -1;
    std::vector<char> hit(nv, 0);
    for (int v = 0; v < nv; ++v) {
        if (sigma[v] < 0 || sigma[v] >= nv || hit[sigma[v]]) return -1;
        hit[sigma[v]] = 1;
    }
    std::map<std::pair<int, int>, int> ekey;
    for (int e = 0; e < cx.count(1); ++e)
        ekey[std::minmax(cx.cells[1][e][0], cx.cells[1][e][1])] = e;
    for (const auto& [e, id] : ekey)
        if (!ekey.count(std::minmax(sigma[e.first], sigma[e.second]))) return -1;
    std::map<std::vector<int>, int> fkey;
    for (int f = 0; f < cx.count(2); ++f) fkey[canon_cycle(face_vertex_cycle(cx, f))] = f;

    int defects = 0;
    for (int v = 0; v < nv; ++v) {
        if (sigma[sigma[v]] != v) defects |= 8;
        if (sigma[v] == v) defects |= 1;
    }
    for (const auto& [e, id] : ekey)
        if (ekey.at(std::minmax(sigma[e.first], sigma[e.second])) == id) defects |= 2;
    for (const auto& [key, f] : fkey) {
        std::vector<int> img;
        for (int v : key) img.push_back(sigma[v]);
        auto it = fkey.find(canon_cycle(img));
        if (it == fkey.end()) return -1;
        if (it->second == f) defects |= 4;
    }
    return defects;
}

}  // namespace detail

// True when sigma is an automorphism acting freely on vertices, edges, and
// faces as a central symmetry would; throws when it is no automorphism at all.
inline bool check_centrally_symmetric(const Complex& cx, const std::vector<int>& sigma) {
    if (cx.dim != 2) throw Error("check_centrally_symmetric: rank-2 complex required");
    const int d = detail::central_symmetry_defects(cx, sigma);
    if (d < 0) throw Error("check_centrally_symmetric: map is not an automorphism");
    return d == 0;
}

// All fixed-point-free involutive automorphisms without fixed edges or faces.
inline std::vector<std::vector<int>> antipodal_involutions(const Complex& cx) {
    std::vector<std::vector<int>> good;
    for (const auto& s : automorphisms(cx))
        if (detail::central_symmetry_defects(cx, s) == 0) good.push_back(s);
    return good;
}

inline bool is_centrally_symmetric(const Complex& cx) {
    return !antipodal_involutions(cx).empty();
}

}  // namespace cellforge
