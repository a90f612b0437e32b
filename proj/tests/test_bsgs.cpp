#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/bsgs.hpp"

#include <algorithm>
#include <unordered_set>

using namespace gt;

namespace {

// Independent ground truth: breadth-first closure under right multiplication.
std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& gens) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> todo{Perm(degree)};
    seen.insert(todo[0]);
    for (std::size_t i = 0; i < todo.size(); ++i) {
        REQUIRE(todo.size() <= 200000); // guard against a wrong generator set
        for (const Perm& g : gens) {
            Perm h = todo[i] * g;
            if (seen.insert(h).second) todo.push_back(h);
        }
    }
    return todo;
}

std::vector<Perm> cyc(std::size_t deg, std::initializer_list<const char*> words) {
    std::vector<Perm> out;
    for (const char* w : words) out.push_back(Perm::parse_cycles(deg, w));
    return out;
}

} // namespace

TEST_CASE("orders of small groups") {
    CHECK(PermGroup(4, cyc(4, {"(1,2)", "(1,2,3,4)"})).order() == 24);
    CHECK(PermGroup(4, cyc(4, {"(1,2,3)", "(2,3,4)"})).order() == 12);
    CHECK(PermGroup(7, cyc(7, {"(1,2)", "(1,2,3,4,5,6,7)"})).order() == 5040);
    CHECK(PermGroup(6, cyc(6, {"(1,2,3,4,5,6)"})).order() == 6);
    CHECK(PermGroup(4, cyc(4, {"(1,2,3,4)", "(1,3)"})).order() == 8);
    CHECK(PermGroup(7, cyc(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"})).order() == 21);
    CHECK(PermGroup(5, {}).order() == 1);
    CHECK(PermGroup(5, {Perm(5)}).order() == 1);
}

TEST_CASE("membership agrees with exhaustive closure") {
    struct Row {
        std::size_t deg;
        std::vector<Perm> gens;
    };
    std::vector<Row> rows;
    rows.push_back({4, cyc(4, {"(1,2)", "(1,2,3,4)"})});
    rows.push_back({4, cyc(4, {"(1,2,3)", "(2,3,4)"})});
    rows.push_back({7, cyc(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"})});
    rows.push_back({11, cyc(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"})});
    for (const auto& row : rows) {
        auto all = closure(row.deg, row.gens);
        PermGroup G(row.deg, row.gens);
        REQUIRE(G.order() == all.size());
        for (const Perm& g : all) CHECK(G.contains(g));
    }
}

TEST_CASE("Mathieu group on 11 points") {
    PermGroup G(11, cyc(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}));
    CHECK(G.order() == 7920);
    CHECK(G.is_transitive());
    PermGroup S = G.point_stabilizer(0);
    CHECK(S.order() == 720);
    CHECK(!G.contains(Perm::parse_cycles(11, "(1,2)")));
}

TEST_CASE("negative membership") {
    PermGroup A4(4, cyc(4, {"(1,2,3)", "(2,3,4)"}));
    CHECK(!A4.contains(Perm::parse_cycles(4, "(1,2)")));
    auto [residue, level] = A4.sift(Perm::parse_cycles(4, "(1,2)"));
    CHECK(!residue.is_identity());
    CHECK(level <= A4.chain_length());
}

TEST_CASE("elements enumerate the whole group exactly once") {
    auto gens = cyc(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
    PermGroup G(7, gens);
    auto elems = G.elements(100);
    REQUIRE(elems.size() == 21);
    std::unordered_set<Perm, PermHash> set(elems.begin(), elems.end());
    CHECK(set.size() == 21);
    auto all = closure(7, gens);
    for (const Perm& g : all) CHECK(set.count(g) == 1);
    CHECK_THROWS(G.elements(10));
}

TEST_CASE("transversals land the base on the point") {
    PermGroup G(11, cyc(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}));
    for (std::size_t lvl = 0; lvl < G.chain_length(); ++lvl) {
        for (std::uint32_t p : G.level_orbit(lvl)) {
            Perm u = G.transversal(lvl, p);
            CHECK(u[G.base_point(lvl)] == p);
        }
    }
}

TEST_CASE("random elements are members and seed-deterministic") {
    PermGroup G(11, cyc(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}));
    Rng r1(123), r2(123);
    for (int i = 0; i < 50; ++i) {
        Perm a = G.random_element(r1);
        Perm b = G.random_element(r2);
        CHECK(a == b);
        CHECK(G.contains(a));
    }
    // All six elements of a cyclic group of order 6 appear in 200 draws.
    PermGroup C(6, cyc(6, {"(1,2,3,4,5,6)"}));
    Rng r3(7);
    std::unordered_set<Perm, PermHash> seen;
    for (int i = 0; i < 200; ++i) seen.insert(C.random_element(r3));
    CHECK(seen.size() == 6);
}

TEST_CASE("prescribed base forms the chain prefix") {
    auto gens = cyc(7, {"(1,2)", "(1,2,3,4,5,6,7)"});
    PermGroup G(7, gens, {3, 5});
    REQUIRE(G.chain_length() >= 2);
    CHECK(G.base_point(0) == 3);
    CHECK(G.base_point(1) == 5);
    CHECK(G.order() == 5040);
}

TEST_CASE("stabilizers of points and tuples") {
    auto gens = cyc(7, {"(1,2)", "(1,2,3,4,5,6,7)"});
    PermGroup S7(7, gens);
    PermGroup S6 = S7.point_stabilizer(0);
    CHECK(S6.order() == 720);
    for (const Perm& g : S6.generators()) CHECK(g[0] == 0);
    PermGroup S5 = S7.stabilizer_of_points({0, 1});
    CHECK(S5.order() == 120);
    PermGroup fix_all = S7.stabilizer_of_points({0, 1, 2, 3, 4, 5});
    CHECK(fix_all.is_trivial());
}

TEST_CASE("orbits of an intransitive group") {
    PermGroup G(6, cyc(6, {"(1,2,3)", "(4,5)"}));
    CHECK(!G.is_transitive());
    auto os = G.orbits();
    REQUIRE(os.size() == 3);
    std::vector<std::size_t> sizes;
    for (auto& o : os) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
    CHECK(G.order() == 6);
}

TEST_CASE("identity-only edge cases") {
    PermGroup T;
    CHECK(T.order() == 1);
    CHECK(T.is_trivial());
    PermGroup U(3);
    CHECK(U.order() == 1);
    CHECK(U.contains(Perm(3)));
    CHECK(!U.contains(Perm::parse_cycles(3, "(1,2)")));
}
