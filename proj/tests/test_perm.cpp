#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/perm.hpp"

using namespace gt;

TEST_CASE("composition applies left factor first") {
    Perm a = Perm::from_images({1, 2, 0}); // (0 1 2)
    Perm b = Perm::from_images({1, 0, 2}); // (0 1)
    Perm ab = a * b;
    CHECK(ab[0] == 0);
    CHECK(ab[1] == 2);
    CHECK(ab[2] == 1);
    CHECK((b * a)[0] == 2);
}

TEST_CASE("inverse and power") {
    Perm a = Perm::parse_cycles(6, "(1,2,3)(4,5)");
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.power(0).is_identity());
    CHECK(a.power(6).is_identity());
    CHECK(a.power(-1) == a.inverse());
    CHECK(a.power(7) == a);
    CHECK(a.order() == 6);
    CHECK(Perm(4).order() == 1);
}

TEST_CASE("cycle parsing is 1-indexed and round trips") {
    Perm a = Perm::parse_cycles(5, "(1,2)(3,4,5)");
    CHECK(a[0] == 1);
    CHECK(a[1] == 0);
    CHECK(a[2] == 3);
    CHECK(a[4] == 2);
    CHECK(a.cycle_string() == "(1,2)(3,4,5)");
    CHECK(Perm::parse_cycles(3, "()").is_identity());
    CHECK(Perm::parse_cycles(3, "").is_identity());
    CHECK(Perm::parse_cycles(4, "(1 2) (3 4)") == Perm::parse_cycles(4, "(1,2)(3,4)"));
    CHECK(Perm::parse_cycles(5, a.cycle_string()) == a);
    CHECK_THROWS(Perm::parse_cycles(3, "(1,2)(2,3)")); // not disjoint
    CHECK_THROWS(Perm::parse_cycles(3, "(0,1)"));      // 1-indexed
    CHECK_THROWS(Perm::parse_cycles(3, "(1,4)"));
}

TEST_CASE("from_images validates bijections") {
    CHECK_THROWS(Perm::from_images({0, 0, 1}));
    CHECK_THROWS(Perm::from_images({0, 3, 1}));
}

TEST_CASE("conjugation") {
    Perm g = Perm::parse_cycles(4, "(1,2)");
    Perm h = Perm::parse_cycles(4, "(1,3)(2,4)");
    CHECK(g.conjugated_by(h) == Perm::parse_cycles(4, "(3,4)"));
}

TEST_CASE("moved points and first_moved") {
    Perm g = Perm::parse_cycles(6, "(3,5)");
    CHECK(g.moved_points() == std::vector<std::uint32_t>{2, 4});
    CHECK(g.first_moved() == 2);
    CHECK(Perm(6).first_moved() == 6);
}

TEST_CASE("hash distinguishes and agrees") {
    Perm a = Perm::parse_cycles(8, "(1,2,3)");
    Perm b = Perm::parse_cycles(8, "(1,2,3)");
    Perm c = Perm::parse_cycles(8, "(1,3,2)");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != c.hash());
}

TEST_CASE("relabel restricts to an invariant set") {
    Perm g = Perm::parse_cycles(6, "(1,2)(3,4)");
    Perm r = relabel(g, {2, 3});
    CHECK(r.degree() == 2);
    CHECK(r == Perm::parse_cycles(2, "(1,2)"));
    CHECK_THROWS(relabel(Perm::parse_cycles(6, "(1,3)"), {0, 1}));
    Perm s = relabel(g, {4, 5, 0, 1});
    CHECK(s == Perm::parse_cycles(4, "(3,4)"));
}

TEST_CASE("order needs arbitrary precision at large degree") {
    // Disjoint cycles of the first several prime lengths: order is their
    // product, which exceeds 64 bits well before degree 2500.
    std::vector<std::uint64_t> primes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                      37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::vector<std::vector<std::uint32_t>> cycles;
    std::uint32_t next = 0;
    Bigint expect = 1;
    for (std::uint64_t p : primes) {
        std::vector<std::uint32_t> cyc;
        for (std::uint64_t i = 0; i < p; ++i) cyc.push_back(next++);
        cycles.push_back(std::move(cyc));
        expect *= p;
    }
    Perm g = Perm::from_cycles(next, cycles);
    CHECK(g.order() == expect);
    CHECK(expect > Bigint("18446744073709551615"));
}
