#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace cellforge;

namespace {

// Identity vertex map between face tA of cxA and face tB of cxB, built by
// walking both vertex cycles in step.
std::map<int, int> aligned_vmap(const Complex& cxA, int tA, const Complex& cxB, int tB,
                                int shift = 0, bool flip = false) {
    auto a = face_vertex_cycle(cxA, tA);
    auto b = face_vertex_cycle(cxB, tB);
    REQUIRE(a.size() == b.size());
    const int n = static_cast<int>(a.size());
    std::map<int, int> m;
    for (int i = 0; i < n; ++i) {
        int j = flip ? posmod(shift - i, n) : posmod(shift + i, n);
        m[a[i]] = b[j];
    }
    return m;
}

}  // namespace

TEST_CASE("glue2 joins two dodecahedra into F_30") {
    Complex dode = dodecahedron();
    Glued g = glue2(dode, 0, dode, 0, aligned_vmap(dode, 0, dode, 0, 0, true));
    CHECK(f_vector(g.cx).counts == std::vector<long long>{30, 45, 17});
    CHECK(validate_simple_closed(g.cx).empty());
    CHECK(isomorphic(g.cx, layered_dodecahedron(1)));
    // The glued faces are gone; survivors are tracked.
    CHECK(g.topA[0] == -1);
    CHECK(g.topB[0] == -1);
    for (int f = 1; f < 12; ++f) {
        CHECK(g.topA[f] >= 0);
        CHECK(g.topB[f] >= 0);
    }
}

TEST_CASE("glue2 joins two hexagonal barrels into F_36") {
    Complex b6 = barrel(6);
    Glued g = glue2(b6, 0, b6, 0, aligned_vmap(b6, 0, b6, 0, 0, true));
    FVector fv = f_vector(g.cx);
    CHECK(fv.counts == std::vector<long long>{36, 54, 20});
    CHECK(fv.p5 == 12);
    CHECK(fv.p6 == 8);
    CHECK(identify_surface(g.cx) == "F_36");
}

TEST_CASE("glue2 rejects a non-matching vertex map") {
    Complex dode = dodecahedron();
    auto bad = aligned_vmap(dode, 0, dode, 0);
    auto it = bad.begin();
    std::swap(it->second, std::next(it)->second);
    CHECK_THROWS_AS(glue2(dode, 0, dode, 0, bad), Error);
}

TEST_CASE("glue3 merges two 120-cells along a cell") {
    Built120 b = build_120cell();
    std::map<int, int> iso;
    for (int v : cell_vertices(b.cx, 0)) iso[v] = v;
    Glued g = glue3(b.cx, 0, b.cx, 0, iso);
    FVector fv = f_vector(g.cx);
    CHECK(fv.counts == std::vector<long long>{1160, 2320, 1386, 226});
    CHECK(check_identities(g.cx).all_ok());
    // Cells bounding the removed one fused pairwise across the seam.
    auto cm = cftest::census_map(g.cx);
    CHECK(cm["Do"] == 214);
    CHECK(cm["F_30"] == 12);
}

TEST_CASE("glue3 rejects maps that miss the target boundary") {
    Built120 b = build_120cell();
    auto va = cell_vertices(b.cx, 0);
    // Send the seam onto the vertices of an unrelated cell: edges no longer
    // land on edges.
    auto vb = cell_vertices(b.cx, 7);
    std::map<int, int> wrong;
    for (std::size_t i = 0; i < va.size(); ++i) wrong[va[i]] = vb[i];
    CHECK_THROWS_AS(glue3(b.cx, 0, b.cx, 0, wrong), Error);
    // A partial map leaves seam vertices unmatched.
    std::map<int, int> partial;
    partial[va[0]] = va[0];
    CHECK_THROWS_AS(glue3(b.cx, 0, b.cx, 0, partial), Error);
}

TEST_CASE("chains of dodecahedra match the layered family") {
    for (int i = 1; i <= 4; ++i)
        CHECK(isomorphic(chain_dodecahedra(i + 1), layered_dodecahedron(i)));
}

TEST_CASE("chains of 120-cells") {
    Built120 b = build_120cell();
    for (int n = 1; n <= 3; ++n) {
        Complex chain = chain_120cells(n, b);
        FVector fv = f_vector(chain);
        CHECK(fv.counts == std::vector<long long>{560LL * n + 40, 1120LL * n + 80,
                                                  666LL * n + 54, 106LL * n + 14});
        CHECK(fv.p6 == 30 * n - 30);
        CHECK(check_identities(chain).all_ok());
        auto cm = cftest::census_map(chain);
        CHECK(cm["Do"] == 94 * n + 26);
        if (n > 1) CHECK(cm["F_30"] == 12 * n - 12);
    }
}

TEST_CASE("corona of the dodecahedron is the 120-cell") {
    Complex c = corona(dodecahedron());
    CHECK(f_vector(c).counts == std::vector<long long>{600, 1200, 720, 120});
    CHECK(isomorphic(c, build_120cell().cx));
}

TEST_CASE("corona censuses") {
    struct Row {
        Complex seed;
        std::vector<long long> fv;
        std::map<std::string, long long> census;
    };
    const std::vector<Row> rows = {
        {cube(), {240, 480, 294, 54}, {{"cube", 2}, {"B_4", 24}, {"Do", 28}}},
        {barrel(6), {720, 1440, 862, 142}, {{"B_6", 10}, {"Do", 132}}},
        {f26(), {780, 1560, 933, 153}, {{"F_26", 2}, {"B_6", 12}, {"Do", 139}}},
        {f28_td(), {840, 1680, 1004, 164}, {{"F_28", 2}, {"B_6", 16}, {"Do", 146}}},
    };
    for (const auto& row : rows) {
        Complex c = corona(row.seed);
        CHECK(f_vector(c).counts == row.fv);
        CHECK(cftest::census_map(c) == row.census);
        // The counting identities only hold when every face is a pentagon or
        // hexagon, which a square-faced seed rules out.
        if (f_vector(row.seed).p_other == 0) CHECK(check_identities(c).all_ok());
    }
}

TEST_CASE("corona census scales linearly for pentagon-hexagon seeds") {
    // v vertices in the seed: 30v vertices, 60v edges, 71v/2+10 faces,
    // 11v/2+10 cells; two seed copies, 2v-40 hexagonal barrels, 7v/2+48
    // dodecahedra (names overlap when the seed is itself one of those).
    for (const Complex& seed : {dodecahedron(), barrel(6), f26(), f28_td()}) {
        const long long v = f_vector(seed).counts[0];
        Complex c = corona(seed);
        CHECK(f_vector(c).counts ==
              std::vector<long long>{30 * v, 60 * v, 71 * v / 2 + 10, 11 * v / 2 + 10});
        std::map<std::string, long long> want;
        want[identify_surface(seed)] += 2;
        if (2 * v - 40 > 0) want["B_6"] += 2 * v - 40;
        want["Do"] += 7 * v / 2 + 48;
        CHECK(cftest::census_map(c) == want);
    }
}

TEST_CASE("corona refuses non-trivalent seeds") {
    CHECK_THROWS_WITH(corona(dual2(cube())),
                      Catch::Matchers::ContainsSubstring("expected 3"));
}

TEST_CASE("subdivision thickening of a toy solid") {
    // Boundary of the 4-simplex: 5 tetrahedra. One round of subdivision
    // thickening turns it into a pentagon/hexagon cell pile.
    Complex s = simplex4_boundary();
    CHECK(f_vector(s).counts == std::vector<long long>{5, 10, 10, 5});
    Complex t = subdivide_thicken(s);
    CHECK(f_vector(t).counts == std::vector<long long>{100, 200, 130, 30});
    auto cm = cftest::census_map(t);
    CHECK(cm["B_3"] == 20);
    CHECK(cm["F_28"] == 5);
    CHECK(cm["tetrahedron"] == 5);
}

TEST_CASE("subdivision thickening of the 120-cell") {
    Complex t = subdivide_thicken(build_120cell().cx);
    FVector fv = f_vector(t);
    CHECK(fv.counts == std::vector<long long>{12000, 24000, 14160, 2160});
    CHECK(is_fullerene(t));
    auto cm = cftest::census_map(t);
    CHECK(cm["Do"] == 1560);
    CHECK(cm["F_28"] == 600);
    CHECK(check_identities(t).all_ok());
}

TEST_CASE("solid pairing quotients of the dodecahedron") {
    Complex dode = dodecahedron();
    auto sigma = barrel_sigma(5);
    // twist : flag orbit counts (v, e, f, cells)
    const std::vector<std::vector<long long>> expected = {
        {10, 15, 6, 1}, {1, 6, 6, 1}, {5, 10, 6, 1}, {5, 10, 6, 1}, {1, 6, 6, 1}};
    for (int t = 0; t < 5; ++t) {
        FlagSystem fs = solid_pairing_quotient(dode, sigma, t);
        validate_flags(fs);
        CHECK(flag_fvector(fs) == expected[t]);
        CHECK(flag_euler_characteristic(fs) == 0);
        CHECK(flag_orientable(fs));
        // None of these quotients is a regular incidence complex: the single
        // cell is glued to itself.
        CHECK_THROWS_AS(from_flags(fs), NonRegularError);
    }
}

TEST_CASE("solid pairing quotient accepts per-pair twists") {
    Complex dode = dodecahedron();
    auto sigma = barrel_sigma(5);
    // Same twist on every face pair, supplied as an explicit map keyed by
    // either orientation of the pair.
    std::map<std::pair<int, int>, int> twists;
    for (int f = 0; f < 12; ++f) {
        // Image face under sigma: the face whose vertex set is the image.
        auto verts = face_vertex_cycle(dode, f);
        std::set<int> img;
        for (int v : verts) img.insert(sigma[v]);
        for (int g = 0; g < 12; ++g) {
            auto w = face_vertex_cycle(dode, g);
            if (std::set<int>(w.begin(), w.end()) == img && f < g) twists[{f, g}] = 2;
        }
    }
    REQUIRE(twists.size() == 6);
    FlagSystem fs = solid_pairing_quotient(dode, sigma, twists);
    CHECK(flag_fvector(fs) == std::vector<long long>{5, 10, 6, 1});
    // A missing pair is an error.
    twists.erase(twists.begin());
    CHECK_THROWS_AS(solid_pairing_quotient(dode, sigma, twists), Error);
}

TEST_CASE("solid pairing quotient rejects bad maps") {
    Complex dode = dodecahedron();
    // Identity: fixes every vertex.
    std::vector<int> ident(20);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK_THROWS_AS(solid_pairing_quotient(dode, ident, 0), Error);
    // Not a permutation.
    std::vector<int> junk(20, 3);
    CHECK_THROWS_AS(solid_pairing_quotient(dode, junk, 0), Error);
}

TEST_CASE("folds") {
    Complex q = fold(dodecahedron(), barrel_sigma(5));
    FVector fv = f_vector(q);
    CHECK(fv.counts == std::vector<long long>{10, 15, 6});
    CHECK(fv.p5 == 6);
    CHECK(validate_simple_closed(q).empty());
    CHECK(euler_characteristic(q) == 1);
    CHECK(!orientable(q));

    CHECK(f_vector(fold(barrel(3), barrel_sigma(3))).counts ==
          std::vector<long long>{6, 9, 4});
    CHECK(f_vector(fold(barrel(7), barrel_sigma(7))).counts ==
          std::vector<long long>{14, 21, 8});
    CHECK(f_vector(fold(f32_d3d(), f32_sigma())).counts ==
          std::vector<long long>{16, 24, 9});
}

TEST_CASE("fold rejects maps that are not free involutions") {
    Complex dode = dodecahedron();
    std::vector<int> ident(20);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK_THROWS_AS(fold(dode, ident), Error);
    std::vector<int> shift(20);
    for (int v = 0; v < 20; ++v) shift[v] = (v + 1) % 20;
    CHECK_THROWS_AS(fold(dode, shift), Error);
}
