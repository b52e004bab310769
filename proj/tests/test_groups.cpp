#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "syngular/groups.hpp"

using namespace syngular;

TEST_CASE("legendre exponent") {
    CHECK(legendre_exponent(4, 2) == 3);
    CHECK(legendre_exponent(6, 3) == 2);
    CHECK(legendre_exponent(3, 5) == 0);
    CHECK(legendre_exponent(16, 2) == 15);
    CHECK(legendre_exponent(100, 2) == 97);
}

TEST_CASE("sylow 2-subgroup generators and closure") {
    auto g2 = sylow2_generators(2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == Perm({2, 1}));
    CHECK(closure(2, g2).order() == 2);

    auto g4 = sylow2_generators(4);
    CHECK(g4.size() == 3);
    CHECK(closure(4, g4).order() == 8);

    CHECK(closure(6, sylow2_generators(6)).order() == 16);
    CHECK(closure(8, sylow2_generators(8)).order() == 128);

    SUBCASE("order matches the Legendre exponent for all n <= 12") {
        for (int n = 1; n <= 12; ++n) {
            PermGroup p = closure(n, sylow2_generators(n));
            CHECK(Int(p.order()) == two_pow(static_cast<unsigned long>(legendre_exponent(n, 2))));
            CHECK(verify_p_power_orders(p, 2));
        }
    }

    SUBCASE("equality with 2^(n-1) exactly at powers of two") {
        for (int n : {2, 4, 8})
            CHECK(Int(closure(n, sylow2_generators(n)).order()) ==
                  two_pow(static_cast<unsigned long>(n - 1)));
        for (int n : {3, 5, 6, 7})
            CHECK(Int(closure(n, sylow2_generators(n)).order()) <
                  two_pow(static_cast<unsigned long>(n - 1)));
    }
}

TEST_CASE("closure mechanics") {
    PermGroup trivial = closure(3, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.elements[0] == Perm::identity(3));

    PermGroup s3 = closure(3, {Perm({2, 1, 3}), Perm({2, 3, 1})});
    CHECK(s3.order() == 6);
    CHECK(s3.elements[0] == Perm::identity(3));

    SUBCASE("closed under product and inverse") {
        std::set<Perm> members(s3.elements.begin(), s3.elements.end());
        for (const Perm& a : s3.elements) {
            CHECK(members.count(a.inverse()) == 1);
            for (const Perm& b : s3.elements) CHECK(members.count(compose(a, b)) == 1);
        }
    }

    SUBCASE("budget enforced") {
        CHECK_THROWS_AS(closure(5, {Perm({2, 1, 3, 4, 5}), Perm({2, 3, 4, 5, 1})}, 100),
                        std::runtime_error);
    }

    SUBCASE("deterministic element order") {
        PermGroup again = closure(3, {Perm({2, 1, 3}), Perm({2, 3, 1})});
        CHECK(again.elements == s3.elements);
    }
}

TEST_CASE("p-power order verification") {
    CHECK(verify_p_power_orders(closure(8, sylow2_generators(8)), 2));
    PermGroup s3 = closure(3, {Perm({2, 1, 3}), Perm({2, 3, 1})});
    CHECK(!verify_p_power_orders(s3, 2));
    CHECK(verify_p_power_orders(closure(3, {}), 2));
}

TEST_CASE("young subgroup stabilizer") {
    PermGroup fix1 = young_subgroup_stabilizer(4, 1);
    CHECK(fix1.order() == 6);
    for (const Perm& g : fix1.elements) {
        CHECK(g(1) == 1);
        CHECK(cycle_type(g).has_part_equal(1));  // an odd (singleton) cycle
    }
    CHECK(young_subgroup_stabilizer(2, 2).order() == 1);
    CHECK_THROWS_AS(young_subgroup_stabilizer(3, 4), std::invalid_argument);

    PermGroup fix3 = young_subgroup_stabilizer(5, 3);
    CHECK(fix3.order() == 24);
    std::set<Perm> uniq(fix3.elements.begin(), fix3.elements.end());
    CHECK(uniq.size() == 24);
}

TEST_CASE("gl enumeration and order formula") {
    CHECK(gl_enumerate(1, 3).size() == 2);
    CHECK(gl_enumerate(2, 2).size() == 6);
    CHECK(gl_enumerate(2, 3).size() == 48);

    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(1, 7) == 6);
    CHECK(gl_order(3, 2) == 168);

    for (auto [n, p] : {std::pair{2, 2ll}, {2, 3ll}, {3, 2ll}})
        CHECK(Int(gl_enumerate(n, p).size()) == gl_order(n, Int(static_cast<long>(p))));

    CHECK_THROWS_AS(gl_enumerate(4, 7), std::runtime_error);  // 7^16 candidates

    SUBCASE("closed under multiplication and inverse") {
        auto g = gl_enumerate(2, 3);
        std::set<std::vector<long long>> members;
        for (const auto& m : g) members.insert(m.e);
        for (const auto& m : g) {
            CHECK(members.count(mat_inverse(m).e) == 1);
            for (const auto& k : g) CHECK(members.count(mat_mul(m, k).e) == 1);
        }
    }
}

TEST_CASE("matrix orders") {
    FpMatrix id = FpMatrix::identity(2, 2);
    CHECK(matrix_order(id) == 1);

    FpMatrix uni = id;
    uni.at(0, 1) = 1;  // unitriangular, squares to the identity mod 2
    CHECK(matrix_order(uni) == 2);

    FpMatrix sing;
    sing.n = 2;
    sing.p = 2;
    sing.e = {1, 1, 1, 1};
    CHECK_THROWS_AS(matrix_order(sing), std::invalid_argument);

    SUBCASE("Lagrange: element orders divide the group order") {
        for (auto [n, p] : {std::pair{2, 2ll}, {2, 3ll}}) {
            Int order = gl_order(n, Int(static_cast<long>(p)));
            for (const auto& m : gl_enumerate(n, p))
                CHECK(order % Int(static_cast<long>(matrix_order(m))) == 0);
        }
    }
}
