#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "support.hpp"

using namespace cellforge;

TEST_CASE("cxc round-trips byte-identically") {
    for (const Complex& cx : {dodecahedron(), f32_d3d(), chain_dodecahedra(3)}) {
        std::string text = write_cxc(cx);
        Complex back = read_cxc(text);
        CHECK(write_cxc(back) == text);
        CHECK(isomorphic(back, cx));
    }
    Built120 b = build_120cell();
    std::string text = write_cxc(b.cx);
    CHECK(write_cxc(read_cxc(text)) == text);
}

TEST_CASE("cxc carries labels") {
    Complex dode = dodecahedron();
    dode.labels[{0, 3}] = "north pole";
    dode.labels[{2, 0}] = "bottom cap";
    Complex back = read_cxc(write_cxc(dode));
    CHECK(back.labels == dode.labels);
}

TEST_CASE("cxc write is deterministic") {
    CHECK(write_cxc(build_120cell().cx) == write_cxc(build_120cell().cx));
    CHECK(cxc_hash(dodecahedron()) == cxc_hash(dodecahedron()));
    CHECK(cxc_hash(dodecahedron()) != cxc_hash(cube()));
}

TEST_CASE("cxc reader rejects malformed input") {
    CHECK_THROWS_AS(read_cxc(""), Error);
    CHECK_THROWS_AS(read_cxc("cxc 2 3\n"), Error);
    CHECK_THROWS_AS(read_cxc("cxc 1 5\n"), Error);
    // Boundary id out of range.
    CHECK_THROWS_AS(read_cxc("cxc 1 2\nrank 0 2\nrank 1 1\nrank 2 0\nc 1 0 : 0 7\n"), Error);
    // Cell declared twice.
    CHECK_THROWS_AS(
        read_cxc("cxc 1 2\nrank 0 2\nrank 1 1\nrank 2 0\nc 1 0 : 0 1\nc 1 0 : 0 1\n"), Error);
    // Cell missing entirely.
    CHECK_THROWS_AS(read_cxc("cxc 1 2\nrank 0 2\nrank 1 1\nrank 2 0\n"), Error);
    // Unknown directive.
    CHECK_THROWS_AS(read_cxc("cxc 1 2\nrank 0 1\nrank 1 0\nrank 2 0\nwat\n"), Error);
}

TEST_CASE("cxc reader skips comments and blank lines") {
    std::string text = write_cxc(cube());
    text = "# a cube\n\n" + text + "# trailing comment\n";
    CHECK(isomorphic(read_cxc(text), cube()));
}

TEST_CASE("cxf round-trips byte-identically") {
    for (const Complex& cx : {dodecahedron(), klein_k333()}) {
        std::string text = write_cxf(to_flags(cx));
        FlagSystem back = read_cxf(text);
        CHECK(write_cxf(back) == text);
    }
    // Rank-4 flag systems serialize the same way.
    FlagSystem fs = solid_pairing_quotient(dodecahedron(), barrel_sigma(5), 0);
    std::string text = write_cxf(fs);
    FlagSystem back = read_cxf(text);
    CHECK(write_cxf(back) == text);
    CHECK(flag_fvector(back) == std::vector<long long>{10, 15, 6, 1});
}

TEST_CASE("cxf reader rejects malformed input") {
    CHECK_THROWS_AS(read_cxf(""), Error);
    CHECK_THROWS_AS(read_cxf("cxf 1 5 4\n"), Error);
    // Wrong image count.
    CHECK_THROWS_AS(read_cxf("cxf 1 3 4\nadj 0 : 1 0\n"), Error);
    // Missing color.
    CHECK_THROWS_AS(read_cxf("cxf 1 3 2\nadj 0 : 1 0\nadj 1 : 1 0\n"), Error);
    // Not an involution.
    CHECK_THROWS_AS(
        read_cxf("cxf 1 3 3\nadj 0 : 1 2 0\nadj 1 : 1 0 2\nadj 2 : 1 0 2\n"), Error);
}

TEST_CASE("save_file and load_file move bytes intact") {
    const std::string path = "io_test_scratch.cxc";
    std::string text = write_cxc(f26());
    save_file(path, text);
    CHECK(load_file(path) == text);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_file("does/not/exist.cxc"), Error);
}
