#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "builders.hpp"
#include "complex.hpp"
#include "flags.hpp"
#include "glue.hpp"

namespace cellforge {

// Canonical certificate: two complexes are isomorphic exactly when their
// certificates (of the same scheme) are equal.
struct Certificate {
    std::string scheme;
    std::vector<int> code;

    bool operator==(const Certificate&) const = default;
    auto operator<=>(const Certificate&) const = default;

    std::string bytes() const {
        std::string out = scheme;
        out.push_back(':');
        for (int v : code) {
            for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
        }
        return out;
    }
};

namespace detail {

// One BFS over the colored flag graph from the given root. Emits, per visited
// flag and color in order, the discovery number of the neighbor. Compares the
// emitted stream against `best` on the fly: returns +1/0/-1 as the stream is
// worse/equal/better, filling `cand` only while still viable.
inline int flag_code_from(const FlagSystem& fs, int root, const std::vector<int>& best,
                          std::vector<int>& cand, std::vector<int>& num, std::vector<int>& order) {
    const int n = fs.nflags();
    const int ncol = fs.rank;
    std::fill(num.begin(), num.end(), -1);
    order.clear();
    cand.clear();
    order.push_back(root);
    num[root] = 0;
    bool strictly_better = best.empty();
    std::size_t k = 0;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const int x = order[qi];
        for (int c = 0; c < ncol; ++c) {
            const int y = fs.adj[c][x];
            if (num[y] < 0) {
                num[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
            const int v = num[y];
            if (!strictly_better) {
                const int b = best[k];
                if (v > b) return 1;
                if (v < b) strictly_better = true;
            }
            cand.push_back(v);
            ++k;
        }
    }
    return strictly_better ? -1 : 0;
}

}  // namespace detail

// Scheme "flg1": minimum rooted BFS code of the colored flag graph.
inline Certificate certificate_flags(const FlagSystem& fs) {
    const int n = fs.nflags();
    if (n == 0) throw Error("certificate: empty flag system");
    std::vector<int> best, cand, num(n), order;
    order.reserve(n);
    cand.reserve(static_cast<std::size_t>(n) * fs.rank);
    // The first BFS runs with no reference code, so it cannot abort early and
    // its traversal is the connectivity witness. Later roots only replace it
    // via complete runs: an abort means "worse", never "better".
    detail::flag_code_from(fs, 0, best, cand, num, order);
    if (static_cast<int>(order.size()) != n)
        throw Error("certificate: flag graph is disconnected");
    best = cand;
    for (int root = 1; root < n; ++root) {
        if (detail::flag_code_from(fs, root, best, cand, num, order) < 0) best = cand;
    }
    return {"flg1", std::move(best)};
}

inline Certificate certificate(const Complex& cx) { return certificate_flags(to_flags(cx)); }

inline bool isomorphic(const Complex& a, const Complex& b) {
    if (a.dim != b.dim) return false;
    return certificate(a) == certificate(b);
}

// Number of automorphisms of a connected flag system = number of roots
// attaining the minimal code (the action on flags is free).
inline long long automorphism_count(const FlagSystem& fs) {
    const int n = fs.nflags();
    Certificate cert = certificate_flags(fs);
    std::vector<int> cand, num(n), order;
    long long cnt = 0;
    for (int root = 0; root < n; ++root)
        if (detail::flag_code_from(fs, root, cert.code, cand, num, order) == 0) ++cnt;
    return cnt;
}

// All automorphisms of a rank-2 complex as vertex permutations.
inline std::vector<std::vector<int>> automorphisms(const Complex& cx) {
    if (cx.dim != 2) throw Error("automorphisms: rank-2 complex required");
    FlagSystem fs = to_flags2(cx);
    const int n = fs.nflags();
    std::vector<int> num(n), order0, order, code0, code;

    auto bfs = [&](int root, std::vector<int>& ord, std::vector<int>& cd) {
        std::fill(num.begin(), num.end(), -1);
        ord.clear();
        cd.clear();
        ord.push_back(root);
        num[root] = 0;
        for (std::size_t qi = 0; qi < ord.size(); ++qi) {
            const int x = ord[qi];
            for (int c = 0; c < fs.rank; ++c) {
                const int y = fs.adj[c][x];
                if (num[y] < 0) {
                    num[y] = static_cast<int>(ord.size());
                    ord.push_back(y);
                }
                cd.push_back(num[y]);
            }
        }
    };

    bfs(0, order0, code0);
    const int nv = cx.count(0);
    std::vector<std::vector<int>> perms;
    for (int root = 0; root < n; ++root) {
        bfs(root, order, code);
        if (code != code0) continue;
        std::vector<int> vmap(nv, -1);
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            const int v0 = fs.chain[order0[k]][0];
            const int v1 = fs.chain[order[k]][0];
            if (vmap[v0] < 0)
                vmap[v0] = v1;
            else if (vmap[v0] != v1)
                ok = false;
        }
        if (ok) perms.push_back(std::move(vmap));
    }
    return perms;
}

// Scheme "sfc1": an independent certificate for closed rank-2 complexes.
// Rooted breadth-first face walk; vertices are numbered on first visit and
// each face emits its gonality followed by its vertex labels in walk order.
inline Certificate certificate_surface(const Complex& cx) {
    if (cx.dim != 2) throw Error("certificate_surface: rank-2 complex required");
    const int nf = cx.count(2);
    const int nv = cx.count(0);
    if (nf == 0) throw Error("certificate_surface: no faces");

    std::vector<std::vector<int>> vcycs(nf);
    for (int f = 0; f < nf; ++f) vcycs[f] = face_vertex_cycle(cx, f);

    // (sorted vertex pair) -> the two (face, position-of-first-endpoint) slots
    std::map<std::pair<int, int>, std::vector<int>> efaces;
    for (int f = 0; f < nf; ++f) {
        const int g = static_cast<int>(vcycs[f].size());
        for (int i = 0; i < g; ++i) {
            int u = vcycs[f][i], v = vcycs[f][(i + 1) % g];
            efaces[std::minmax(u, v)].push_back(f);
        }
    }
    for (const auto& [k, v] : efaces)
        if (v.size() != 2) throw Error("certificate_surface: edge not in exactly 2 faces");

    std::vector<int> vnum(nv);
    std::vector<char> fvis(nf);
    std::vector<std::array<int, 3>> queue;  // face, start position, direction

    auto walk = [&](int f0, int i0, int d0, const std::vector<int>& best, std::vector<int>& cand) {
        std::fill(vnum.begin(), vnum.end(), -1);
        std::fill(fvis.begin(), fvis.end(), 0);
        queue.clear();
        cand.clear();
        queue.push_back({f0, i0, d0});
        fvis[f0] = 1;
        int next = 0;
        bool strictly_better = best.empty();
        std::size_t k = 0;
        auto emit = [&](int v) {
            if (!strictly_better) {
                const int b = best[k];
                if (v > b) return false;
                if (v < b) strictly_better = true;
            }
            cand.push_back(v);
            ++k;
            return true;
        };
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const auto [f, i0f, dir] = queue[qi];
            const auto& vc = vcycs[f];
            const int g = static_cast<int>(vc.size());
            if (!emit(g)) return 1;
            for (int step = 0; step < g; ++step) {
                const int v = vc[posmod(i0f + dir * step, g)];
                if (vnum[v] < 0) vnum[v] = next++;
                if (!emit(vnum[v])) return 1;
            }
            for (int step = 0; step < g; ++step) {
                const int a = vc[posmod(i0f + dir * step, g)];
                const int b = vc[posmod(i0f + dir * (step + 1), g)];
                const auto& two = efaces.at(std::minmax(a, b));
                const int f2 = (two[0] == f) ? two[1] : two[0];
                if (fvis[f2]) continue;
                fvis[f2] = 1;
                // enter f2 at b, first step retracing the shared edge to a
                const auto& vc2 = vcycs[f2];
                const int g2 = static_cast<int>(vc2.size());
                int p = -1, d2 = 0;
                for (int t = 0; t < g2; ++t) {
                    if (vc2[t] != b) continue;
                    if (vc2[(t + 1) % g2] == a) {
                        p = t;
                        d2 = 1;
                    } else if (vc2[posmod(t - 1, g2)] == a) {
                        p = t;
                        d2 = -1;
                    }
                }
                if (p < 0) throw Error("certificate_surface: neighbor face misses shared edge");
                queue.push_back({f2, p, d2});
            }
        }
        if (static_cast<int>(queue.size()) != nf)
            throw Error("certificate_surface: complex is disconnected");
        return strictly_better ? -1 : 0;
    };

    std::vector<int> best, cand;
    for (int f = 0; f < nf; ++f) {
        const int g = static_cast<int>(vcycs[f].size());
        for (int i = 0; i < g; ++i)
            for (int d : {1, -1})
                if (walk(f, i, d, best, cand) < 0) best = cand;
    }
    return {"sfc1", std::move(best)};
}

// ---------------------------------------------------------------------------
// Cell census: identify each 3-cell of a rank-3 complex against a catalog of
// named boundary surfaces.
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, Certificate>>& cell_catalog() {
    static const std::vector<std::pair<std::string, Certificate>> catalog = [] {
        std::vector<std::pair<std::string, Certificate>> cat;
        auto put = [&cat](const std::string& name, const Complex& cx) {
            cat.emplace_back(name, certificate_surface(cx));
        };
        put("tetrahedron", tetrahedron_surface());
        put("cube", cube());
        put("Do", dodecahedron());
        put("B_3", barrel(3));
        put("B_4", barrel(4));
        put("B_6", barrel(6));
        put("B_7", barrel(7));
        put("B_8", barrel(8));
        put("F_26", f26());
        put("F_28", f28_td());
        put("F_32", f32_d3d());
        {
            // elongated hexagonal barrel: two B_6 glued cap to cap
            const Complex b6 = barrel(6);
            auto cyc = face_vertex_cycle(b6, 0);
            std::map<int, int> iso;
            for (int v : cyc) iso[v] = v;
            put("F_36", glue2(b6, 0, b6, 0, iso).cx);
        }
        put("F_30", layered_dodecahedron(1));
        put("F_40", layered_dodecahedron(2));
        put("F_50", layered_dodecahedron(3));
        put("F_60", layered_dodecahedron(4));
        return cat;
    }();
    return catalog;
}

inline std::string identify_surface(const Complex& cx) {
    Certificate cert = certificate_surface(cx);
    for (const auto& [name, c] : cell_catalog())
        if (c == cert) return name;
    return "unknown" + f_vector(cx).str();
}

struct CensusEntry {
    std::string name;
    FVector fv;
    long long count = 0;
};

struct CensusReport {
    std::vector<CensusEntry> entries;
    long long total = 0;

    long long count_of(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return e.count;
        return 0;
    }
};

// Certificate-keyed census of the 3-cells of a rank-3 complex.
inline CensusReport census_cells(const Complex& cx) {
    if (cx.dim != 3) throw Error("census: rank-3 complex required");
    std::map<std::string, CensusEntry> acc;
    for (int c = 0; c < cx.count(3); ++c) {
        Complex surf = extract_cell(cx, c);
        Certificate cert = certificate_surface(surf);
        auto key = cert.bytes();
        auto it = acc.find(key);
        if (it == acc.end()) {
            CensusEntry e;
            e.fv = f_vector(surf);
            e.name = "unknown" + e.fv.str();
            for (const auto& [name, cc] : cell_catalog())
                if (cc == cert) {
                    e.name = name;
                    break;
                }
            e.count = 1;
            acc.emplace(key, std::move(e));
        } else {
            ++it->second.count;
        }
    }
    CensusReport rep;
    for (auto& [k, e] : acc) rep.entries.push_back(std::move(e));
    std::sort(rep.entries.begin(), rep.entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.name < b.name;
    });
    rep.total = cx.count(3);
    return rep;
}

}  // namespace cellforge
