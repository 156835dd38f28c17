#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace cellforge;

TEST_CASE("make_complex normalizes boundaries") {
    // A single square: edge cycles are stored in canonical rotation, higher
    // boundaries sorted, so equivalent inputs collapse to one representation.
    std::vector<std::vector<std::vector<int>>> cells(3);
    cells[0].resize(4);
    cells[1] = {{1, 0}, {2, 1}, {3, 2}, {0, 3}};
    cells[2] = {{2, 1, 0, 3}, {3, 0, 1, 2}};
    Complex cx = make_complex(2, cells);
    CHECK(cx.cells[1][0] == std::vector<int>{0, 1});
    CHECK(cx.cells[2][0] == cx.cells[2][1]);
}

TEST_CASE("validate_simple_closed accepts the reference solids") {
    CHECK(validate_simple_closed(dodecahedron()).empty());
    CHECK(validate_simple_closed(cube()).empty());
    CHECK(validate_simple_closed(tetrahedron_surface()).empty());
    for (int i : {3, 4, 6, 7, 8}) CHECK(validate_simple_closed(barrel(i)).empty());
    CHECK(validate_simple_closed(f26()).empty());
    CHECK(validate_simple_closed(f28_td()).empty());
    CHECK(validate_simple_closed(f32_d3d()).empty());
}

TEST_CASE("validate_simple_closed reports defects") {
    SECTION("open disk") {
        // One pentagon alone: every edge lies in one face.
        Complex cx = from_faces({{0, 1, 2, 3, 4}});
        const auto bad = validate_simple_closed(cx);
        REQUIRE(!bad.empty());
        CHECK(bad[0].find("edge") != std::string::npos);
    }
    SECTION("doubled face") {
        // Two pentagons on the same vertex cycle: a sphere, but the two faces
        // meet along their whole boundary, which the adjacency checks reject.
        Complex cx = from_faces({{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}});
        CHECK(!validate_simple_closed(cx).empty());
    }
}

TEST_CASE("face_vertex_cycle follows the edge cycle") {
    Complex dode = dodecahedron();
    for (int f = 0; f < dode.count(2); ++f) {
        auto verts = face_vertex_cycle(dode, f);
        REQUIRE(verts.size() == 5);
        // verts[i] is the common vertex of consecutive edges, so consecutive
        // verts span the edges of the face.
        std::set<std::vector<int>> have;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int u = verts[i], v = verts[(i + 1) % verts.size()];
            have.insert({std::min(u, v), std::max(u, v)});
        }
        std::set<std::vector<int>> want;
        for (int e : dode.cells[2][f]) want.insert(dode.cells[1][e]);
        CHECK(have == want);
    }
}

TEST_CASE("from_faces rejects malformed input") {
    CHECK_THROWS_AS(from_faces({{0, 1, 1, 2}}), Error);
    CHECK_THROWS_AS(from_faces({{0, 1, 2}}, 2), Error);
}

TEST_CASE("f_vector and gonality census") {
    Complex dode = dodecahedron();
    FVector fv = f_vector(dode);
    CHECK(fv.counts == std::vector<long long>{20, 30, 12});
    CHECK(fv.p5 == 12);
    CHECK(fv.p6 == 0);
    CHECK(euler_characteristic(dode) == 2);

    auto gons = gonality_census(f32_d3d());
    CHECK(gons == std::map<int, long long>{{5, 12}, {6, 6}});
}

TEST_CASE("dual2 is an involution on polyhedra") {
    Complex oct = dual2(cube());
    CHECK(f_vector(oct).counts == std::vector<long long>{6, 12, 8});
    CHECK(isomorphic(dual2(oct), cube()));
}

TEST_CASE("dual3 is an involution on the 120-cell") {
    Built120 b = build_120cell();
    Complex d = dual3(b.cx);
    CHECK(f_vector(d).counts == std::vector<long long>{120, 720, 1200, 600});
    CHECK(isomorphic(dual3(d), b.cx));
}

TEST_CASE("extract_cell pulls out a standalone polyhedron") {
    Built120 b = build_120cell();
    Complex cell = extract_cell(b.cx, 17);
    CHECK(f_vector(cell).counts == std::vector<long long>{20, 30, 12});
    CHECK(validate_simple_closed(cell).empty());
    CHECK(isomorphic(cell, dodecahedron()));
}

TEST_CASE("flag systems round-trip through from_flags") {
    for (const Complex& cx : {dodecahedron(), cube(), f26(), f32_d3d()}) {
        FlagSystem fs = to_flags(cx);
        validate_flags(fs);
        CHECK(fs.nflags() == 4 * f_vector(cx).counts[1]);
        CHECK(isomorphic(from_flags(fs), cx));
    }
    Built120 b = build_120cell();
    FlagSystem fs = to_flags(b.cx);
    // Chains (v, e, f, c): 2 vertices per edge, 3 faces per edge, 2 cells
    // per face.
    CHECK(fs.nflags() == 12 * 1200);
    CHECK(isomorphic(from_flags(fs), b.cx));
}

TEST_CASE("flag f-vector and Euler characteristic") {
    FlagSystem fs = to_flags(heawood_torus());
    CHECK(flag_fvector(fs) == std::vector<long long>{14, 21, 7});
    CHECK(flag_euler_characteristic(fs) == 0);
    CHECK(flag_orientable(fs));
    CHECK(!orientable(klein_k333()));
}

TEST_CASE("relabel preserves structure") {
    std::mt19937 rng(20260821);
    for (const Complex& cx : {dodecahedron(), f28_td(), cube()}) {
        Complex shuf = cftest::shuffled(cx, rng);
        CHECK(f_vector(shuf) == f_vector(cx));
        CHECK(validate_simple_closed(shuf).empty());
        CHECK(isomorphic(shuf, cx));
    }
    Complex chain = chain_dodecahedra(3);
    Complex shuf = cftest::shuffled(chain, rng);
    CHECK(certificate(shuf) == certificate(chain));
}

TEST_CASE("relabel rejects wrong-sized permutations") {
    Complex dode = dodecahedron();
    std::vector<std::vector<int>> perms(3);
    perms[0] = {0, 1, 2};
    CHECK_THROWS_AS(relabel(dode, perms), Error);
}

TEST_CASE("is_fullerene checks gonality and valence") {
    Built120 b = build_120cell();
    CHECK(is_fullerene(b.cx));
    // The 600-cell has tetrahedral cells and triangle faces.
    CHECK(!is_fullerene(build_600cell().cx));
}
