// Acceptance gate: one line per criterion, exact integer comparisons
// throughout. Exit status is the number of failed criteria. Pass --deep to
// include the second subdivision round, which takes a couple of minutes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <cellforge.hpp>

using namespace cellforge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int num, const std::string& what, bool ok, double secs = -1.0) {
    std::string line = ok ? "PASS" : "FAIL";
    line += "  criterion " + std::to_string(num) + ": " + what;
    if (secs >= 0.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
        line += buf;
    }
    std::puts(line.c_str());
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int num, const std::string& what, Fn fn) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = e.what();
    }
    report(num, what + (note.empty() ? "" : " [" + note + "]"), ok, secs_since(t0));
}

std::map<std::string, long long> census_map(const Complex& cx) {
    std::map<std::string, long long> m;
    for (const auto& e : census_cells(cx).entries) m[e.name] = e.count;
    return m;
}

std::vector<long long> fv_counts(const Complex& cx) { return f_vector(cx).counts; }

// Four hexagons, no two sharing an edge.
bool hexagons_pairwise_apart(const Complex& cell) {
    std::vector<std::vector<int>> hexes;
    for (const auto& f : cell.cells[2])
        if (f.size() == 6) hexes.push_back(f);
    if (hexes.size() != 4) return false;
    for (auto& h : hexes) std::sort(h.begin(), h.end());
    for (std::size_t i = 0; i < hexes.size(); ++i)
        for (std::size_t j = i + 1; j < hexes.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(hexes[i].begin(), hexes[i].end(), hexes[j].begin(),
                                  hexes[j].end(), std::back_inserter(common));
            if (!common.empty()) return false;
        }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    bool deep = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--deep") == 0) deep = true;

    Built120 b120;
    Certificate dode_cert = certificate(dodecahedron());

    criterion(1, "120-cell: f-vector, pentagon faces, dodecahedral cells", [&] {
        const auto t0 = Clock::now();
        b120 = build_120cell();
        if (fv_counts(b120.cx) != std::vector<long long>{600, 1200, 720, 120}) return false;
        for (const auto& f : b120.cx.cells[2])
            if (f.size() != 5) return false;
        for (int c = 0; c < 120; ++c)
            if (certificate(extract_cell(b120.cx, c)) != dode_cert) return false;
        if (!validate_simple_closed(b120.cx).empty()) return false;
        return secs_since(t0) < 5.0;
    });

    criterion(2, "chains of 120-cells: f-vectors, censuses, face counts", [&] {
        const auto t0 = Clock::now();
        for (long long n = 1; n <= 3; ++n) {
            Complex chain = chain_120cells(static_cast<int>(n), b120);
            if (fv_counts(chain) != std::vector<long long>{560 * n + 40, 1120 * n + 80,
                                                           666 * n + 54, 106 * n + 14})
                return false;
            FVector fv = f_vector(chain);
            if (fv.p6 != 30 * n - 30) return false;
            if (fv.p5 != 6 * fv.counts[3]) return false;
            auto cm = census_map(chain);
            std::map<std::string, long long> want{{"Do", 94 * n + 26}};
            if (n > 1) want["F_30"] = 12 * n - 12;
            if (cm != want) return false;
        }
        return secs_since(t0) < 10.0;
    });

    criterion(3, "chains of dodecahedra match the layered family", [&] {
        for (int i = 1; i <= 4; ++i)
            if (certificate(chain_dodecahedra(i + 1)) != certificate(layered_dodecahedron(i)))
                return false;
        return true;
    });

    criterion(4, "corona of the dodecahedron is the 120-cell", [&] {
        const auto t0 = Clock::now();
        Complex c = corona(dodecahedron());
        if (certificate(c) != certificate(b120.cx)) return false;
        return secs_since(t0) < 10.0;
    });

    criterion(5, "corona f-vectors and censuses scale with the seed", [&] {
        const std::vector<Complex> seeds = {dodecahedron(), barrel(6), f26(), f28_td()};
        for (const Complex& seed : seeds) {
            const long long v = f_vector(seed).counts[0];
            Complex c = corona(seed);
            if (fv_counts(c) != std::vector<long long>{30 * v, 60 * v, 71 * v / 2 + 10,
                                                       11 * v / 2 + 10})
                return false;
            std::map<std::string, long long> want;
            want[identify_surface(seed)] += 2;
            if (2 * v - 40 > 0) want["B_6"] += 2 * v - 40;
            want["Do"] += 7 * v / 2 + 48;
            if (census_map(c) != want) return false;
        }
        return true;
    });

    criterion(6, "corona of the cube", [&] {
        Complex c = corona(cube());
        if (fv_counts(c) != std::vector<long long>{240, 480, 294, 54}) return false;
        return census_map(c) ==
               std::map<std::string, long long>{{"cube", 2}, {"B_4", 24}, {"Do", 28}};
    });

    Complex thick1;
    criterion(7, "subdivision thickening of the 120-cell", [&] {
        const auto t0 = Clock::now();
        thick1 = subdivide_thicken(b120.cx);
        if (f_vector(thick1).counts[0] != 12000) return false;
        if (f_vector(thick1).counts[2] != 14160) return false;
        if (!is_fullerene(thick1)) return false;
        auto cm = census_map(thick1);
        if (cm != std::map<std::string, long long>{{"Do", 1560}, {"F_28", 600}}) return false;
        Certificate f28_cert = certificate(f28_td());
        long long big = 0;
        for (int c = 0; c < thick1.count(3); ++c) {
            Complex cell = extract_cell(thick1, c);
            if (cell.count(0) != 28) continue;
            ++big;
            if (certificate(cell) != f28_cert) return false;
            if (!hexagons_pairwise_apart(cell)) return false;
        }
        if (big != 600) return false;
        return secs_since(t0) < 60.0;
    });

    if (deep) {
        criterion(7, "second subdivision round (deep)", [&] {
            Complex thick2 = subdivide_thicken(thick1);
            FVector fv = f_vector(thick2);
            if (fv.counts[0] != 240000) return false;
            if (fv.counts[2] != 282480) return false;
            if (fv.counts[3] != 42480) return false;
            if (!check_identities(thick2).all_ok()) return false;
            return census_map(thick2) == std::map<std::string, long long>{
                                             {"Do", 27480}, {"B_6", 2400}, {"F_28", 12600}};
        });
    }

    criterion(8, "solid pairing quotients of the dodecahedron", [&] {
        const std::vector<std::vector<long long>> expected = {{10, 15, 6, 1},
                                                              {1, 6, 6, 1},
                                                              {5, 10, 6, 1},
                                                              {5, 10, 6, 1},
                                                              {1, 6, 6, 1}};
        auto sigma = barrel_sigma(5);
        for (int t = 0; t < 5; ++t) {
            FlagSystem fs = solid_pairing_quotient(dodecahedron(), sigma, t);
            if (flag_fvector(fs) != expected[t]) return false;
            if (flag_euler_characteristic(fs) != 0) return false;
            if (!flag_orientable(fs)) return false;
        }
        return true;
    });

    criterion(9, "fold of the dodecahedron", [&] {
        Complex q = fold(dodecahedron(), barrel_sigma(5));
        if (fv_counts(q) != std::vector<long long>{10, 15, 6}) return false;
        SurfaceReport rep = classify_surface(q);
        return rep.cls == SurfaceClass::ProjectivePlane && !rep.orientable && rep.p5 == 6;
    });

    criterion(10, "surface classifier and pentagon defect count", [&] {
        struct Row {
            Complex cx;
            SurfaceClass cls;
            long long p5;
        };
        std::vector<Row> rows;
        rows.push_back({dodecahedron(), SurfaceClass::Sphere, 12});
        rows.push_back({heawood_torus(), SurfaceClass::Torus, 0});
        rows.push_back({klein_k333(), SurfaceClass::KleinBottle, 0});
        rows.push_back({fold(dodecahedron(), barrel_sigma(5)), SurfaceClass::ProjectivePlane, 6});
        rows.push_back({barrel(6), SurfaceClass::Sphere, 12});
        rows.push_back({f32_d3d(), SurfaceClass::Sphere, 12});
        rows.push_back({fold(f32_d3d(), f32_sigma()), SurfaceClass::ProjectivePlane, 6});
        for (const Row& row : rows) {
            SurfaceReport rep = classify_surface(row.cx);
            if (rep.cls != row.cls || rep.p5 != row.p5) return false;
            if (rep.p5 != 6 * rep.chi) return false;
        }
        return true;
    });

    criterion(11, "structural identities and certificate invariance", [&] {
        // Every closed rank-3 construction above is trivalent with zero Euler
        // characteristic; the pentagon count law additionally binds whenever
        // all faces are pentagons or hexagons.
        std::vector<Complex> outputs;
        outputs.push_back(b120.cx);
        outputs.push_back(chain_120cells(2, b120));
        outputs.push_back(corona(cube()));
        outputs.push_back(corona(barrel(6)));
        outputs.push_back(subdivide_thicken(simplex4_boundary()));
        outputs.push_back(std::move(thick1));
        for (const Complex& cx : outputs) {
            IdentityReport rep = check_identities(cx);
            if (!rep.edges_twice_vertices || !rep.faces_vertices_cells || !rep.euler_zero)
                return false;
            if (rep.gonalities_56 && !rep.pentagons_six_cells) return false;
        }

        // Certificates do not depend on labeling.
        std::vector<Complex> solids = {dodecahedron(), cube(),  tetrahedron_surface(),
                                       barrel(3),      barrel(4), barrel(6),
                                       barrel(7),      barrel(8), f26(),
                                       f28_td(),       f32_d3d(), layered_dodecahedron(1),
                                       layered_dodecahedron(2)};
        std::vector<Certificate> flg, sfc;
        for (const Complex& cx : solids) {
            flg.push_back(certificate(cx));
            sfc.push_back(certificate_surface(cx));
        }
        std::mt19937 rng(271828);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t i = trial % solids.size();
            const Complex& cx = solids[i];
            std::vector<std::vector<int>> perms(cx.dim + 1);
            for (int k = 0; k <= cx.dim; ++k) {
                perms[k].resize(cx.count(k));
                std::iota(perms[k].begin(), perms[k].end(), 0);
                std::shuffle(perms[k].begin(), perms[k].end(), rng);
            }
            Complex shuf = relabel(cx, perms);
            if (certificate(shuf) != flg[i]) return false;
            if (certificate_surface(shuf) != sfc[i]) return false;
        }
        return true;
    });

    if (failures == 0)
        std::puts("all criteria passed");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
