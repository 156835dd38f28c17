#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace cellforge;

TEST_CASE("barrels have the expected shape") {
    for (int i : {3, 4, 5, 6, 7, 8}) {
        Complex b = barrel(i);
        FVector fv = f_vector(b);
        CHECK(fv.counts == std::vector<long long>{4 * i, 6 * i, 2 * i + 2});
        // 2i lateral pentagons; the two caps are i-gons.
        CHECK(fv.p5 == 2 * i + (i == 5 ? 2 : 0));
        CHECK(gonality_census(b)[i] >= 2);
        CHECK(validate_simple_closed(b).empty());
        CHECK(euler_characteristic(b) == 2);
    }
    CHECK(isomorphic(barrel(5), dodecahedron()));
    CHECK_THROWS_AS(barrel(2), Error);
}

TEST_CASE("layered dodecahedra") {
    for (int i : {1, 2, 3, 4}) {
        Complex c = layered_dodecahedron(i);
        FVector fv = f_vector(c);
        CHECK(fv.counts == std::vector<long long>{20 + 10LL * i, 30 + 15LL * i, 12 + 5LL * i});
        CHECK(fv.p5 == 12);
        CHECK(fv.p6 == 5 * i);
        CHECK(validate_simple_closed(c).empty());
    }
    CHECK(isomorphic(layered_dodecahedron(0), dodecahedron()));
}

TEST_CASE("small fullerene solids") {
    CHECK(f_vector(f26()).counts == std::vector<long long>{26, 39, 15});
    CHECK(f_vector(f26()).p6 == 3);
    CHECK(f_vector(f28_td()).counts == std::vector<long long>{28, 42, 16});
    CHECK(f_vector(f28_td()).p6 == 4);
    CHECK(f_vector(f32_d3d()).counts == std::vector<long long>{32, 48, 18});
    CHECK(f_vector(f32_d3d()).p6 == 6);
    for (const Complex& cx : {f26(), f28_td(), f32_d3d()}) {
        CHECK(validate_simple_closed(cx).empty());
        CHECK(is_fullerene(cx));
    }
    // Distinct solids, and none is a barrel.
    CHECK(!isomorphic(f26(), f28_td()));
    CHECK(!isomorphic(f28_td(), barrel(7)));
    CHECK(!isomorphic(f32_d3d(), barrel(8)));
}

TEST_CASE("600-cell") {
    Built600 six = build_600cell();
    CHECK(f_vector(six.cx).counts == std::vector<long long>{120, 720, 1200, 600});
    // Every cell is a tetrahedron, every vertex in 20 cells.
    for (const auto& c : six.cx.cells[3]) CHECK(c.size() == 4);
    std::vector<int> deg(120, 0);
    for (int c = 0; c < 600; ++c)
        for (int v : cell_vertices(six.cx, c)) ++deg[v];
    for (int v = 0; v < 120; ++v) CHECK(deg[v] == 20);
    // vneg is a fixed-point-free involution respecting adjacency.
    for (int v = 0; v < 120; ++v) {
        CHECK(six.vneg[v] != v);
        CHECK(six.vneg[six.vneg[v]] == v);
    }
}

TEST_CASE("120-cell") {
    Built120 b = build_120cell();
    CHECK(f_vector(b.cx).counts == std::vector<long long>{600, 1200, 720, 120});
    CHECK(is_fullerene(b.cx));
    for (const auto& f : b.cx.cells[2]) CHECK(f.size() == 5);
    // Antipodal maps are fixed-point-free involutions.
    for (int v = 0; v < 600; ++v) {
        CHECK(b.vneg[v] != v);
        CHECK(b.vneg[b.vneg[v]] == v);
    }
    for (int c = 0; c < 120; ++c) {
        CHECK(b.cneg[c] != c);
        CHECK(b.cneg[b.cneg[c]] == c);
        // Antipodal cells share no vertices.
        auto va = cell_vertices(b.cx, c);
        auto vb = cell_vertices(b.cx, b.cneg[c]);
        std::vector<int> both;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(both));
        CHECK(both.empty());
    }
    CHECK(check_identities(b.cx).all_ok());
}

TEST_CASE("hexagonal quotient lattices") {
    Complex hw = heawood_torus();
    CHECK(f_vector(hw).counts == std::vector<long long>{14, 21, 7});
    CHECK(euler_characteristic(hw) == 0);
    CHECK(orientable(hw));
    // Dual of the Heawood surface is the complete graph on 7 vertices.
    Complex dual_hw = dual2(hw);
    CHECK(f_vector(dual_hw).counts == std::vector<long long>{7, 21, 14});

    Complex kl = klein_k333();
    CHECK(f_vector(kl).counts == std::vector<long long>{18, 27, 9});
    CHECK(euler_characteristic(kl) == 0);
    CHECK(!orientable(kl));
}

TEST_CASE("degenerate hexagonal quotients are refused") {
    // Too little area: some face becomes degenerate or the skeleton is not
    // simple, and the builder says which defect it hit.
    CHECK_THROWS_AS(polyhex_torus({1, 0}, {0, 1}), Error);
    CHECK_THROWS_AS(polyhex_torus({2, 0}, {0, 2}), Error);
    CHECK_THROWS_AS(polyhex_klein(1, 1), Error);
    CHECK_THROWS_AS(polyhex_torus({0, 0}, {0, 1}), Error);
}

TEST_CASE("exhaustive small hexagonal quotients") {
    // All torus quotients arise from a Hermite normal form (d1,0),(e,d2) with
    // d1*d2 = p6, 0 <= e < d1; Klein quotients from (b,0),(0,s) with |b*s| =
    // p6. Counting survivors of the validity checks for each face budget:
    const std::vector<int> expected = {0, 0, 0, 0, 0, 0, 2, 3};
    for (int p6 = 1; p6 <= 8; ++p6) {
        int found = 0;
        for (int d1 = 1; d1 <= p6; ++d1) {
            if (p6 % d1) continue;
            for (int e = 0; e < d1; ++e) {
                try {
                    polyhex_torus({d1, 0}, {e, p6 / d1});
                    ++found;
                } catch (const Error&) {
                }
            }
        }
        for (int b = -p6; b <= p6; ++b) {
            for (int s = -p6; s <= p6; ++s) {
                if (b * s == 0 || std::abs(b * s) != p6) continue;
                try {
                    polyhex_klein(b, s);
                    ++found;
                } catch (const Error&) {
                }
            }
        }
        CHECK(found == expected[p6 - 1]);
    }
    // The 7-face survivors are both isomorphic to the Heawood surface.
    CHECK(isomorphic(polyhex_torus({7, 0}, {2, 1}), heawood_torus()));
    CHECK(isomorphic(polyhex_torus({7, 0}, {4, 1}), heawood_torus()));
}

TEST_CASE("barrel_sigma is the antipodal map of odd barrels") {
    for (int i : {3, 5, 7}) {
        Complex b = barrel(i);
        CHECK(check_centrally_symmetric(b, barrel_sigma(i)));
    }
    CHECK(check_centrally_symmetric(f32_d3d(), f32_sigma()));
}
