#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "syngular/partition.hpp"
#include "syngular/permutation.hpp"

using namespace syngular;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(d(rng))]);
    }
    return Perm(img);
}

Bitstring bits_from(unsigned mask, int len) {
    Bitstring b(static_cast<size_t>(len), 0);
    for (int i = 0; i < len; ++i) b[static_cast<size_t>(i)] = (mask >> i) & 1;
    return b;
}

}  // namespace

TEST_CASE("perm basics") {
    CHECK_THROWS_AS(Perm({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 2}), std::invalid_argument);
    Perm id = Perm::identity(4);
    Perm t(std::vector<int>{2, 1, 3, 4});
    CHECK(compose(t, id) == t);
    CHECK(compose(t, t.inverse()) == id);
    CHECK_THROWS_AS(compose(t, Perm::identity(3)), std::invalid_argument);

    // right factor applied first: compose((1 2), (2 3)) maps x to
    // (1 2)((2 3)(x)), the 3-cycle 1->2->3->1
    Perm a(std::vector<int>{2, 1, 3});
    Perm b(std::vector<int>{1, 3, 2});
    Perm c = compose(a, b);
    CHECK(c(1) == 2);
    CHECK(c(2) == 3);
    CHECK(c(3) == 1);

    SUBCASE("hand composition table of S_3") {
        for (const Perm& x : all_perms(3))
            for (const Perm& y : all_perms(3))
                for (int v = 1; v <= 3; ++v) CHECK(compose(x, y)(v) == x(y(v)));
    }
}

TEST_CASE("cycle types and orders") {
    CHECK(cycle_type(Perm::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(Perm({2, 3, 4, 1})) == Partition({4}));
    // disjoint (1 2) and (3 4 5)
    Perm p({2, 1, 4, 5, 3});
    CHECK(cycle_type(p) == Partition({3, 2}));
    CHECK(perm_order(p) == 6);

    SUBCASE("order = lcm and p-singularity agree") {
        for (const Perm& g : all_perms(5))
            for (long long q : {2ll, 3ll, 5ll}) CHECK(is_p_singular(g, q) == (perm_order(g) % q == 0));
    }

    SUBCASE("conjugation invariance, randomized") {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 2000; ++trial) {
            int n = 3 + static_cast<int>(rng() % 8);
            Perm s = random_perm(n, rng), t = random_perm(n, rng);
            CHECK(cycle_type(compose(compose(t, s), t.inverse())) == cycle_type(s));
        }
    }
}

TEST_CASE("is_p_singular examples") {
    CHECK(!is_p_singular(Perm::identity(5), 2));
    CHECK(is_p_singular(Perm({2, 1, 3}), 2));
    Perm p({2, 1, 4, 5, 3});  // type (3,2)
    CHECK(is_p_singular(p, 3));
    CHECK(!is_p_singular(p, 5));
}

TEST_CASE("reversing pairs") {
    CHECK(is_reversing_pair(Perm({2, 1}), Perm::identity(2)));
    Perm s({3, 1, 2});
    CHECK(!is_reversing_pair(s, s));

    SUBCASE("reversing implies 2-singular difference, exhaustive S_4") {
        for (const Perm& a : all_perms(4))
            for (const Perm& b : all_perms(4))
                if (is_reversing_pair(a, b))
                    CHECK(is_p_singular(compose(a, b.inverse()), 2));
    }

    SUBCASE("reversing equals a 2-cycle in the difference, exhaustive S_4") {
        for (const Perm& a : all_perms(4))
            for (const Perm& b : all_perms(4)) {
                bool direct = false;
                for (int i = 1; i <= 4 && !direct; ++i)
                    for (int j = 1; j <= 4; ++j)
                        if (i != j && a(i) == b(j) && a(j) == b(i)) {
                            direct = true;
                            break;
                        }
                CHECK(is_reversing_pair(a, b) == direct);
            }
    }
}

TEST_CASE("canonical order") {
    auto id3 = canonical_order(Perm::identity(3));
    CHECK(id3.cycles == std::vector<std::vector<int>>{{1}, {2}, {3}});
    // 1->2->3->1 rotates so 3 leads
    auto c3 = canonical_order(Perm({2, 3, 1}));
    CHECK(c3.cycles == std::vector<std::vector<int>>{{3, 1, 2}});
    auto dt = canonical_order(Perm({2, 1, 4, 3}));
    CHECK(dt.cycles == std::vector<std::vector<int>>{{2, 1}, {4, 3}});
}

TEST_CASE("odd merge: spec examples") {
    // all-zero bits leave sigma untouched
    Perm s({2, 3, 1, 4, 5});
    CHECK(odd_merge_forward(s, Bitstring(2, 0)) == s);

    // identity on n=2 with bit 1 gives the transposition
    CHECK(odd_merge_forward(Perm::identity(2), {1}) == Perm({2, 1}));

    CHECK(odd_merge_inverse(Perm::identity(4)) ==
          std::make_pair(Perm::identity(4), Bitstring(3, 0)));
    CHECK(odd_merge_inverse(Perm({2, 1})) == std::make_pair(Perm::identity(2), Bitstring{1}));

    CHECK_THROWS_AS(odd_merge_forward(Perm({2, 1}), Bitstring{}), std::invalid_argument);
    CHECK_THROWS_AS(odd_merge_forward(Perm::identity(3), Bitstring{1}), std::invalid_argument);
}

TEST_CASE("even merge: spec examples") {
    CHECK(even_merge_forward(Perm({2, 1}), {0}) == Perm({2, 1}));
    CHECK(even_merge_forward(Perm({2, 1}), {1}) == Perm::identity(2));
    CHECK(even_merge_inverse(Perm::identity(2)) == std::make_pair(Perm({2, 1}), Bitstring{1}));
    CHECK(even_merge_inverse(Perm({2, 1})) == std::make_pair(Perm({2, 1}), Bitstring{0}));

    CHECK_THROWS_AS(even_merge_forward(Perm::identity(3), Bitstring(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(even_merge_forward(Perm::identity(2), Bitstring{1}), std::invalid_argument);
    CHECK_THROWS_AS(even_merge_inverse(Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("odd merge is a bijection certifying the 2^(cyc-1) identity") {
    for (int n = 1; n <= 8; ++n) {
        std::set<Perm> images;
        Int weighted = 0;
        for (const Perm& s : enumerate_by_cycle_parity(n, CycleParity::Odd)) {
            int m = cycle_type(s).rows();
            weighted += two_pow(static_cast<unsigned long>(m - 1));
            unsigned span = 1u << (m - 1);
            for (unsigned mask = 0; mask < span; ++mask) {
                Perm pi = odd_merge_forward(s, bits_from(mask, m - 1));
                CHECK(images.insert(pi).second);  // injective
                // output is canonically ordered by construction: leading
                // symbols ascend and lead their cycles
                auto cd = canonical_order(pi);
                auto [back_s, back_b] = odd_merge_inverse(pi);
                CHECK(back_s == s);
                CHECK(back_b == bits_from(mask, m - 1));
            }
        }
        CHECK(weighted == factorial(static_cast<unsigned long>(n)));
        CHECK(images.size() == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("even merge is a bijection certifying the 2^cyc identity") {
    for (int n = 2; n <= 8; n += 2) {
        std::set<Perm> images;
        Int weighted = 0;
        for (const Perm& s : enumerate_by_cycle_parity(n, CycleParity::Even)) {
            int m = cycle_type(s).rows();
            weighted += two_pow(static_cast<unsigned long>(m));
            unsigned span = 1u << m;
            for (unsigned mask = 0; mask < span; ++mask) {
                Perm pi = even_merge_forward(s, bits_from(mask, m));
                CHECK(images.insert(pi).second);
                auto [back_s, back_b] = even_merge_inverse(pi);
                CHECK(back_s == s);
                CHECK(back_b == bits_from(mask, m));
            }
        }
        CHECK(weighted == factorial(static_cast<unsigned long>(n)));
        CHECK(images.size() == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("odd merge outputs stay canonically ordered") {
    // the merge never moves a cycle's leading symbol, so re-decomposing the
    // output must give back exactly the post-merge cycle list
    for (int n = 1; n <= 7; ++n) {
        for (const Perm& s : enumerate_by_cycle_parity(n, CycleParity::Odd)) {
            int m = cycle_type(s).rows();
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                Perm pi = odd_merge_forward(s, bits_from(mask, m - 1));
                auto cd = canonical_order(pi);
                for (size_t i = 0; i < cd.cycles.size(); ++i) {
                    CHECK(cd.cycles[i][0] ==
                          *std::max_element(cd.cycles[i].begin(), cd.cycles[i].end()));
                    if (i > 0) CHECK(cd.cycles[i][0] > cd.cycles[i - 1][0]);
                }
            }
        }
    }
}

TEST_CASE("enumerate_by_cycle_parity") {
    CHECK(enumerate_by_cycle_parity(4, CycleParity::Odd).size() == 9);
    CHECK(enumerate_by_cycle_parity(4, CycleParity::Even).size() == 9);
    CHECK(enumerate_by_cycle_parity(3, CycleParity::Even).empty());
    for (const Perm& p : enumerate_by_cycle_parity(6, CycleParity::Even))
        CHECK(cycle_type(p).all_parts_even());
}

TEST_CASE("perm serialization") {
    Perm p({2, 1, 4, 3});
    CHECK(format_perm(p) == "[2,1,4,3]");
    CHECK(parse_perm("[2,1,4,3]") == p);
    CHECK(parse_perm("(2 1)(4 3)", 4) == p);
    CHECK(parse_perm("(1 2)", 4) == Perm({2, 1, 3, 4}));
    CHECK(parse_perm("(1,2)", 4) == Perm({2, 1, 3, 4}));
    CHECK_THROWS_AS(parse_perm("(1 2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("[2,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("nonsense"), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Perm q = random_perm(1 + static_cast<int>(rng() % 9), rng);
        CHECK(parse_perm(format_perm(q)) == q);
    }
}
