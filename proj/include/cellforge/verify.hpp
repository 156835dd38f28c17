#pragma once

#include <string>

#include "complex.hpp"

namespace cellforge {

// The four counting identities every closed simple rank-3 complex with
// 5/6-gonal 2-faces satisfies.
struct IdentityReport {
    long long v = 0, e = 0, p = 0, q = 0;
    long long p5 = 0, p6 = 0;
    long long chi = 0;
    bool edges_twice_vertices = false;  // e = 2v
    bool faces_vertices_cells = false;  // p = v + q
    bool pentagons_six_cells = false;   // p5 = 6q
    bool euler_zero = false;            // chi = 0
    bool gonalities_56 = false;

    bool all_ok() const {
        return edges_twice_vertices && faces_vertices_cells && pentagons_six_cells &&
               euler_zero && gonalities_56;
    }

    std::string str() const {
        auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
        return "v=" + std::to_string(v) + " e=" + std::to_string(e) + " p=" + std::to_string(p) +
               " q=" + std::to_string(q) + " p5=" + std::to_string(p5) +
               " p6=" + std::to_string(p6) + " | e=2v:" + mark(edges_twice_vertices) +
               " p=v+q:" + mark(faces_vertices_cells) + " p5=6q:" + mark(pentagons_six_cells) +
               " chi=0:" + mark(euler_zero) + " gon in {5,6}:" + mark(gonalities_56);
    }
};

inline IdentityReport check_identities(const Complex& cx) {
    if (cx.dim != 3) throw Error("check_identities: rank-3 complex required");
    IdentityReport r;
    const FVector fv = f_vector(cx);
    r.v = fv.counts[0];
    r.e = fv.counts[1];
    r.p = fv.counts[2];
    r.q = fv.counts[3];
    r.p5 = fv.p5;
    r.p6 = fv.p6;
    r.chi = euler_characteristic(cx);
    r.edges_twice_vertices = (r.e == 2 * r.v);
    r.faces_vertices_cells = (r.p == r.v + r.q);
    r.pentagons_six_cells = (r.p5 == 6 * r.q);
    r.euler_zero = (r.chi == 0);
    r.gonalities_56 = (fv.p_other == 0);
    return r;
}

}  // namespace cellforge
