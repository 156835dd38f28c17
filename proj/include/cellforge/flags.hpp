#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"

namespace cellforge {

// Connected system of flags with one fixed-point-free involution per color.
// Colors 0..rank-1 correspond to ranks vertex, edge, face(, cell).
// adj[i] and adj[j] commute whenever |i-j| >= 2.
struct FlagSystem {
    int rank = 3;
    std::vector<std::vector<int>> adj;
    // chain[x] = {v, e, f, c} ids of flag x in the source complex (c = -1 at
    // rank 3 == dim 2). Empty for flag systems not built from a complex.
    std::vector<std::array<int, 4>> chain;

    int nflags() const { return adj.empty() ? 0 : static_cast<int>(adj[0].size()); }
};

inline void validate_flags(const FlagSystem& fs) {
    const int n = fs.nflags();
    if (static_cast<int>(fs.adj.size()) != fs.rank) throw Error("flags: one involution per color required");
    for (int c = 0; c < fs.rank; ++c) {
        if (static_cast<int>(fs.adj[c].size()) != n) throw Error("flags: ragged adjacency");
        for (int x = 0; x < n; ++x) {
            int y = fs.adj[c][x];
            if (y < 0 || y >= n) throw Error("flags: color " + std::to_string(c) + " out of range");
            if (y == x)
                throw Error("flags: color " + std::to_string(c) + " fixes flag " + std::to_string(x));
            if (fs.adj[c][y] != x)
                throw Error("flags: color " + std::to_string(c) + " not an involution at flag " +
                            std::to_string(x));
        }
    }
    for (int i = 0; i < fs.rank; ++i)
        for (int j = i + 2; j < fs.rank; ++j)
            for (int x = 0; x < n; ++x)
                if (fs.adj[i][fs.adj[j][x]] != fs.adj[j][fs.adj[i][x]])
                    throw Error("flags: colors " + std::to_string(i) + " and " + std::to_string(j) +
                                " do not commute at flag " + std::to_string(x));
}

namespace detail {

// Positions of value x in cycle (x must occur exactly once).
inline int cycle_index(const std::vector<int>& cyc, int x, const char* what) {
    int pos = -1;
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
        if (cyc[i] == x) {
            if (pos >= 0) throw Error(std::string(what) + ": repeated entry");
            pos = i;
        }
    }
    if (pos < 0) throw Error(std::string(what) + ": entry missing");
    return pos;
}

}  // namespace detail

// Flags of a rank-2 complex: one flag per (face, cycle position, endpoint).
// adj0 swaps the endpoint of the current edge, adj1 the edge at the current
// vertex within the face, adj2 the face across the current edge.
inline FlagSystem to_flags2(const Complex& cx) {
    const int nf = cx.count(2);
    std::vector<std::vector<int>> ecycs(nf), vcycs(nf);
    std::vector<int> base(nf + 1, 0);
    for (int f = 0; f < nf; ++f) {
        ecycs[f] = cx.cells[2][f];
        vcycs[f] = face_vertex_cycle(cx, f);
        base[f + 1] = base[f] + 2 * static_cast<int>(ecycs[f].size());
    }
    const int n = base[nf];

    // edge -> list of (face, position)
    std::unordered_map<std::uint64_t, std::array<int, 2>> eslot;
    std::vector<std::vector<std::array<int, 2>>> einc(cx.count(1));
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < static_cast<int>(ecycs[f].size()); ++i)
            einc[ecycs[f][i]].push_back({f, i});

    FlagSystem fs;
    fs.rank = 3;
    fs.adj.assign(3, std::vector<int>(n, -1));
    fs.chain.resize(n);

    auto id = [&](int f, int i, int side) {
        const int g = static_cast<int>(ecycs[f].size());
        return base[f] + 2 * ((i % g + g) % g) + side;
    };

    for (int f = 0; f < nf; ++f) {
        const int g = static_cast<int>(ecycs[f].size());
        for (int i = 0; i < g; ++i) {
            const int e = ecycs[f][i];
            for (int side = 0; side < 2; ++side) {
                const int x = id(f, i, side);
                const int v = (side == 0) ? vcycs[f][(i + g - 1) % g] : vcycs[f][i];
                fs.chain[x] = {v, e, f, -1};
                fs.adj[0][x] = id(f, i, side ^ 1);
                fs.adj[1][x] = (side == 1) ? id(f, i + 1, 0) : id(f, i - 1, 1);
                const auto& inc = einc[e];
                if (inc.size() != 2)
                    throw Error("to_flags: edge " + std::to_string(e) + " in " +
                                std::to_string(inc.size()) + " faces, expected 2");
                const auto other = (inc[0][0] == f && inc[0][1] == i) ? inc[1] : inc[0];
                const int f2 = other[0], i2 = other[1];
                const int g2 = static_cast<int>(ecycs[f2].size());
                const int side2 = (vcycs[f2][i2] == v) ? 1 : 0;
                if (side2 == 0 && vcycs[f2][(i2 + g2 - 1) % g2] != v)
                    throw Error("to_flags: inconsistent edge endpoints");
                fs.adj[2][x] = id(f2, i2, side2);
            }
        }
    }
    validate_flags(fs);
    return fs;
}

// Flags of a closed rank-3 complex: one flag per (cell, face, position,
// endpoint). adj3 swaps the cell across the current face; adj2 swaps the
// face within the cell across the current edge.
inline FlagSystem to_flags3(const Complex& cx) {
    const int nf = cx.count(2);
    const int nc = cx.count(3);
    std::vector<std::vector<int>> ecycs(nf), vcycs(nf);
    std::vector<int> base(nf + 1, 0);
    for (int f = 0; f < nf; ++f) {
        ecycs[f] = cx.cells[2][f];
        vcycs[f] = face_vertex_cycle(cx, f);
        base[f + 1] = base[f] + 4 * static_cast<int>(ecycs[f].size());
    }
    const int n = base[nf];

    std::vector<std::vector<int>> fcells(nf);
    for (int c = 0; c < nc; ++c)
        for (int f : cx.cells[3][c]) fcells[f].push_back(c);
    for (int f = 0; f < nf; ++f)
        if (fcells[f].size() != 2 || fcells[f][0] == fcells[f][1])
            throw Error("to_flags: face " + std::to_string(f) + " not in 2 distinct cells");

    // (cell, edge) -> the two (face, position) slots of that cell at the edge
    std::unordered_map<std::uint64_t, std::vector<std::array<int, 2>>> ce;
    for (int c = 0; c < nc; ++c)
        for (int f : cx.cells[3][c])
            for (int i = 0; i < static_cast<int>(ecycs[f].size()); ++i)
                ce[pack_pair(c, ecycs[f][i])].push_back({f, i});

    FlagSystem fs;
    fs.rank = 4;
    fs.adj.assign(4, std::vector<int>(n, -1));
    fs.chain.resize(n);

    auto id = [&](int f, int i, int side, int cp) {
        const int g = static_cast<int>(ecycs[f].size());
        return base[f] + 4 * ((i % g + g) % g) + 2 * side + cp;
    };

    for (int f = 0; f < nf; ++f) {
        const int g = static_cast<int>(ecycs[f].size());
        for (int i = 0; i < g; ++i) {
            const int e = ecycs[f][i];
            for (int side = 0; side < 2; ++side) {
                const int v = (side == 0) ? vcycs[f][(i + g - 1) % g] : vcycs[f][i];
                for (int cp = 0; cp < 2; ++cp) {
                    const int c = fcells[f][cp];
                    const int x = id(f, i, side, cp);
                    fs.chain[x] = {v, e, f, c};
                    fs.adj[0][x] = id(f, i, side ^ 1, cp);
                    fs.adj[1][x] = (side == 1) ? id(f, i + 1, 0, cp) : id(f, i - 1, 1, cp);
                    fs.adj[3][x] = id(f, i, side, cp ^ 1);
                    const auto& slots = ce.at(pack_pair(c, e));
                    if (slots.size() != 2)
                        throw Error("to_flags: cell " + std::to_string(c) + " has " +
                                    std::to_string(slots.size()) + " faces at edge " +
                                    std::to_string(e) + ", expected 2");
                    const auto other =
                        (slots[0][0] == f && slots[0][1] == i) ? slots[1] : slots[0];
                    const int f2 = other[0], i2 = other[1];
                    const int g2 = static_cast<int>(ecycs[f2].size());
                    const int side2 = (vcycs[f2][i2] == v) ? 1 : 0;
                    if (side2 == 0 && vcycs[f2][(i2 + g2 - 1) % g2] != v)
                        throw Error("to_flags: inconsistent edge endpoints");
                    const int cp2 = (fcells[f2][0] == c) ? 0 : 1;
                    if (fcells[f2][cp2] != c) throw Error("to_flags: cell missing at face");
                    fs.adj[2][x] = id(f2, i2, side2, cp2);
                }
            }
        }
    }
    validate_flags(fs);
    return fs;
}

inline FlagSystem to_flags(const Complex& cx) {
    return cx.dim == 2 ? to_flags2(cx) : to_flags3(cx);
}

namespace detail {

// Connected components of the union of the given colors; returns (component
// id per flag, component count).
inline std::pair<std::vector<int>, int> flag_orbits(const FlagSystem& fs, const std::vector<int>& colors) {
    const int n = fs.nflags();
    std::vector<int> comp(n, -1);
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c : colors) {
                int y = fs.adj[c][x];
                if (comp[y] < 0) {
                    comp[y] = nc;
                    stack.push_back(y);
                }
            }
        }
        ++nc;
    }
    return {comp, nc};
}

}  // namespace detail

// Cell counts per rank: k-cells are orbits of all colors except k.
inline std::vector<long long> flag_fvector(const FlagSystem& fs) {
    std::vector<long long> out;
    for (int k = 0; k < fs.rank; ++k) {
        std::vector<int> colors;
        for (int c = 0; c < fs.rank; ++c)
            if (c != k) colors.push_back(c);
        out.push_back(detail::flag_orbits(fs, colors).second);
    }
    return out;
}

inline long long flag_euler_characteristic(const FlagSystem& fs) {
    auto fv = flag_fvector(fs);
    long long chi = 0;
    int sign = 1;
    for (long long c : fv) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

// A flag system is orientable exactly when its flag graph is bipartite.
inline bool flag_orientable(const FlagSystem& fs) {
    const int n = fs.nflags();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c = 0; c < fs.rank; ++c) {
                int y = fs.adj[c][x];
                if (color[y] < 0) {
                    color[y] = color[x] ^ 1;
                    stack.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool orientable(const Complex& cx) { return flag_orientable(to_flags(cx)); }

// Rebuilds the incidence complex underlying a flag system. Fails with a
// diagnostic when the flag system is not the flag system of a complex
// (quotients whose cells self-identify, loop edges, repeated boundaries).
inline Complex from_flags(const FlagSystem& fs) {
    validate_flags(fs);
    const int n = fs.nflags();
    if (n == 0) throw Error("from_flags: empty flag system");
    const int dim = fs.rank - 1;
    if (dim != 2 && dim != 3) throw Error("from_flags: rank must be 3 or 4");

    std::vector<std::vector<int>> orbit(fs.rank);  // per rank: flag -> cell id
    std::vector<int> counts(fs.rank);
    for (int k = 0; k < fs.rank; ++k) {
        std::vector<int> colors;
        for (int c = 0; c < fs.rank; ++c)
            if (c != k) colors.push_back(c);
        auto [comp, ncomp] = detail::flag_orbits(fs, colors);
        orbit[k] = std::move(comp);
        counts[k] = ncomp;
    }

    // edges
    std::vector<std::vector<int>> edges(counts[1]);
    for (int x = 0; x < n; ++x) {
        int e = orbit[1][x];
        int v = orbit[0][x];
        auto& b = edges[e];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
    }
    for (int e = 0; e < counts[1]; ++e) {
        if (edges[e].size() != 2)
            throw NonRegularError("from_flags: edge orbit " + std::to_string(e) + " has " +
                                  std::to_string(edges[e].size()) +
                                  " distinct endpoints, expected 2 (quotient identifies an edge with itself)");
        std::sort(edges[e].begin(), edges[e].end());
    }

    // faces: trace the boundary cycle with alternating colors 0 and 1
    std::vector<std::vector<int>> faces(counts[2]);
    std::vector<int> fseen(counts[2], 0);
    for (int x0 = 0; x0 < n; ++x0) {
        int f = orbit[2][x0];
        if (fseen[f]) continue;
        fseen[f] = 1;
        std::vector<int> ecyc;
        std::set<int> used;
        int x = x0;
        do {
            int e = orbit[1][x];
            if (used.count(e))
                throw NonRegularError("from_flags: face orbit " + std::to_string(f) +
                                      " meets edge orbit " + std::to_string(e) +
                                      " more than once (quotient folds a face onto itself)");
            used.insert(e);
            ecyc.push_back(e);
            x = fs.adj[1][fs.adj[0][x]];
        } while (x != x0);
        if (ecyc.size() < 3)
            throw NonRegularError("from_flags: face orbit " + std::to_string(f) + " has gonality " +
                                  std::to_string(ecyc.size()));
        faces[f] = std::move(ecyc);
    }
    // every flag of the face orbit must map into the traced polygon
    {
        std::vector<std::set<int>> fedges(counts[2]);
        for (int f = 0; f < counts[2]; ++f) fedges[f] = {faces[f].begin(), faces[f].end()};
        for (int x = 0; x < n; ++x)
            if (!fedges[orbit[2][x]].count(orbit[1][x]))
                throw NonRegularError("from_flags: face orbit " + std::to_string(orbit[2][x]) +
                                      " is not a single polygon");
    }

    std::vector<std::vector<std::vector<int>>> cells;
    if (dim == 2) {
        cells.resize(3);
        cells[0].assign(counts[0], {});
        cells[1] = std::move(edges);
        cells[2] = std::move(faces);
    } else {
        // cells of rank 3 and the face -> cell incidence
        std::vector<std::set<int>> cfaces(counts[3]);
        std::vector<std::set<int>> fcells(counts[2]);
        for (int x = 0; x < n; ++x) {
            cfaces[orbit[3][x]].insert(orbit[2][x]);
            fcells[orbit[2][x]].insert(orbit[3][x]);
        }
        for (int f = 0; f < counts[2]; ++f)
            if (fcells[f].size() != 2)
                throw NonRegularError("from_flags: face orbit " + std::to_string(f) + " lies in " +
                                      std::to_string(fcells[f].size()) +
                                      " distinct cells, expected 2 (quotient glues a cell to itself)");
        cells.resize(4);
        cells[0].assign(counts[0], {});
        cells[1] = std::move(edges);
        cells[2] = std::move(faces);
        cells[3].resize(counts[3]);
        for (int c = 0; c < counts[3]; ++c) cells[3][c] = {cfaces[c].begin(), cfaces[c].end()};
    }
    Complex cx = make_complex(dim, std::move(cells));
    // Coherence: the rebuilt complex must produce a flag system of the same
    // size. This catches residual degeneracies without imposing simplicity.
    try {
        if (to_flags(cx).nflags() != n)
            throw Error("flag count changed");
    } catch (const Error& err) {
        throw NonRegularError(std::string("from_flags: rebuilt complex incoherent: ") + err.what());
    }
    return cx;
}

}  // namespace cellforge
