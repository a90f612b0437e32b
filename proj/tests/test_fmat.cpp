#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/bsgs.hpp"
#include "../src/fmat.hpp"

using namespace gt;

TEST_CASE("field of order 49") {
    Gf F(7, 2);
    CHECK(F.q() == 49);
    CHECK(F.modulus_string() == "x^2+1");
    for (std::uint32_t a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.mult_order(F.generator()) == 48);
    // Frobenius fixes exactly the prime subfield.
    int fixed = 0;
    for (std::uint32_t a = 0; a < F.q(); ++a)
        if (F.frobenius(a) == a) ++fixed;
    CHECK(fixed == 7);
    int squares = 0, cubes = 0;
    for (std::uint32_t a = 0; a < F.q(); ++a) {
        if (F.is_square(a)) ++squares;
        if (F.is_cube(a)) ++cubes;
    }
    CHECK(squares == 25); // 24 nonzero squares plus zero
    CHECK(cubes == 17);   // 16 nonzero cubes plus zero
}

TEST_CASE("field of order 4") {
    Gf F(2, 2);
    CHECK(F.q() == 4);
    CHECK(F.modulus_string() == "x^2+x+1");
    for (std::uint32_t a = 0; a < 4; ++a) CHECK(F.is_square(a));
    CHECK(F.mult_order(F.generator()) == 3);
    CHECK(F.add(2, 3) == 1); // x + (x+1) = 1
    CHECK(F.mul(2, 2) == 3); // x^2 = x+1
}

TEST_CASE("determinant, inverse, power") {
    Gf F(7, 1);
    FMat m = FMat::from_entries(&F, 2, 2, {1, 2, 3, 4});
    CHECK(m.determinant() == (7 + 1 * 4 - 2 * 3) % 7);
    auto mi = m.inverse();
    REQUIRE(mi);
    CHECK((m * *mi).is_identity());
    CHECK(m.power(3) == m * m * m);
    FMat sing = FMat::from_entries(&F, 2, 2, {1, 2, 2, 4});
    CHECK(sing.determinant() == 0);
    CHECK(!sing.inverse());
    CHECK(FMat::identity(&F, 3).order() == 1);
    FMat two = FMat::identity(&F, 2).scaled(2);
    CHECK(two.order() == 3); // 2^3 = 1 mod 7
}

TEST_CASE("symmetric square is multiplicative with scalar kernel") {
    Gf F(7, 2);
    FMat a = FMat::from_entries(&F, 2, 2, {1, 2, 3, 5});
    FMat b = FMat::from_entries(&F, 2, 2, {0, 1, 6, 4});
    CHECK(sym_square(a * b) == sym_square(a) * sym_square(b));
    CHECK(sym_square(a).determinant() == F.pow(a.determinant(), 3));
    FMat minus = FMat::identity(&F, 2).scaled(F.neg(1));
    CHECK(sym_square(minus).is_identity());
    CHECK(sym_square(FMat::identity(&F, 2)).is_identity());
}

TEST_CASE("nullspace and solve") {
    Gf F(5, 1);
    // Rank-1 matrix over F5: the second row is twice the first (6 = 1 mod 5).
    FMat m = FMat::from_entries(&F, 3, 3, {1, 2, 3, 2, 4, 1, 0, 0, 0});
    auto ns = nullspace(m);
    FMat m2 = m;
    CHECK(rref_in_place(m2) == 1);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        for (std::size_t i = 0; i < 3; ++i) {
            std::uint32_t s = 0;
            for (std::size_t j = 0; j < 3; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
            CHECK(s == 0);
        }
    }
    auto x = solve(m, {1, 2, 0});
    REQUIRE(x);
    std::uint32_t r0 = 0;
    for (std::size_t j = 0; j < 3; ++j) r0 = F.add(r0, F.mul(m.at(0, j), (*x)[j]));
    CHECK(r0 == 1);
    CHECK(!solve(m, {0, 0, 1}));
}

TEST_CASE("frame matrix hits the target frame projectively") {
    Gf F(7, 2);
    std::vector<std::vector<std::uint32_t>> targets = {
        {1, 2, 3}, {0, 1, 5}, {1, 0, 1}, {1, 1, 1}};
    auto m = frame_matrix(&F, targets);
    REQUIRE(m);
    ProjectiveSpace P(&F, 3);
    CHECK(P.index_of({1, 0, 0}) != P.index_of({0, 1, 0}));
    // e_i -> targets[i] and the all-ones vector -> targets[3], projectively.
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::uint32_t> e(3, 0);
        e[i] = 1;
        std::vector<std::uint32_t> img(3);
        for (std::size_t j = 0; j < 3; ++j) img[j] = m->at(i, j);
        CHECK(P.index_of(img) == P.index_of(targets[i]));
    }
    std::vector<std::uint32_t> ones_img(3, 0);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) ones_img[j] = F.add(ones_img[j], m->at(i, j));
    CHECK(P.index_of(ones_img) == P.index_of(targets[3]));
    // Degenerate target set is rejected.
    CHECK(!frame_matrix(&F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
}

TEST_CASE("projective action is a homomorphism") {
    Gf F(7, 1);
    ProjectiveSpace P(&F, 2);
    CHECK(P.size() == 8);
    FMat a = FMat::from_entries(&F, 2, 2, {1, 1, 0, 1});
    FMat b = FMat::from_entries(&F, 2, 2, {0, 1, 6, 0});
    CHECK(P.perm_of(a) * P.perm_of(b) == P.perm_of(a * b));
    CHECK(P.perm_of(FMat::identity(&F, 2)).is_identity());
    CHECK(P.perm_of(FMat::identity(&F, 2).scaled(3)).is_identity());
}

TEST_CASE("projective special linear group on 10 points") {
    Gf F(3, 2);
    ProjectiveSpace P(&F, 2);
    CHECK(P.size() == 10);
    std::uint32_t g = F.generator();
    FMat d(&F, 2, 2);
    d.set(0, 0, g);
    d.set(1, 1, F.inv(g));
    FMat t = FMat::from_entries(&F, 2, 2, {1, 1, 0, 1});
    FMat s = FMat::from_entries(&F, 2, 2, {0, 1, F.neg(1), 0});
    // Diagonal and upper unitriangular alone give only the Borel subgroup;
    // the Weyl element completes the generating set.
    CHECK(PermGroup(10, P.perms_of({d, t})).order() == 36);
    PermGroup G(10, P.perms_of({d, t, s}));
    CHECK(G.order() == 360);
    CHECK(G.is_transitive());
}

TEST_CASE("special linear group of rank three over the 49 element field") {
    Gf F(7, 2);
    ProjectiveSpace P(&F, 3);
    REQUIRE(P.size() == 2451);
    std::uint32_t g = F.generator();
    FMat d(&F, 3, 3);
    d.set(0, 0, g);
    d.set(1, 1, F.inv(g));
    d.set(2, 2, 1);
    FMat t = FMat::identity(&F, 3);
    t.set(0, 1, 1);
    FMat w(&F, 3, 3);
    w.set(0, 1, 1);
    w.set(1, 2, 1);
    w.set(2, 0, 1);
    CHECK(d.determinant() == 1);
    CHECK(t.determinant() == 1);
    CHECK(w.determinant() == 1);
    PermGroup G(2451, P.perms_of({d, t, w}));
    CHECK(G.order() == Bigint("11072935641600"));
    CHECK(G.is_transitive());
}
