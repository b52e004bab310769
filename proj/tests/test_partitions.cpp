#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "syngular/partition.hpp"
#include "syngular/permutation.hpp"

using namespace syngular;

namespace {

// Independent enumeration oracle: recursive with explicit result
// collection, no sharing with the library path.
void collect_partitions(int rest, int maxpart, std::vector<int>& cur,
                        std::set<std::vector<int>>& out) {
    if (rest == 0) {
        out.insert(cur);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        collect_partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::set<std::vector<int>> oracle_partitions(int n) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    collect_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

// classical recurrence p(n) = sum over distinct-part splits, computed via
// the convolution p(n) = sum_k p(n - k) counted with parts <= k
Int oracle_partition_count(int n) {
    // table[m][k] = number of partitions of m with parts <= k
    std::vector<std::vector<Int>> table(static_cast<size_t>(n + 1),
                                        std::vector<Int>(static_cast<size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) table[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            table[static_cast<size_t>(m)][static_cast<size_t>(k)] =
                table[static_cast<size_t>(m)][static_cast<size_t>(k - 1)];
            if (m >= k)
                table[static_cast<size_t>(m)][static_cast<size_t>(k)] +=
                    table[static_cast<size_t>(m - k)][static_cast<size_t>(k)];
        }
    return table[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("partition invariants and construction") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition().n() == 0);
    CHECK(Partition({3, 1}).n() == 4);
    CHECK(Partition({3, 1}).to_string() == "[3,1]");
}

TEST_CASE("enumerate_partitions order and contents") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    auto p4 = enumerate_partitions(4);
    std::vector<Partition> expected = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                       Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(p4 == expected);

    CHECK(enumerate_partitions(10).size() == 42);

    for (int n = 0; n <= 30; ++n) {
        auto list = enumerate_partitions(n);
        std::set<std::vector<int>> seen;
        for (const auto& p : list) seen.insert(p.parts());
        CHECK(seen.size() == list.size());  // duplicate-free
        CHECK(Int(list.size()) == oracle_partition_count(n));
        if (n <= 16) CHECK(seen == oracle_partitions(n));
    }
}

TEST_CASE("partition_index round trips") {
    for (int n : {0, 1, 5, 9}) {
        auto list = enumerate_partitions(n);
        for (size_t i = 0; i < list.size(); ++i)
            CHECK(partition_index(list, list[i]) == static_cast<int>(i));
    }
    auto list = enumerate_partitions(4);
    CHECK(partition_index(list, Partition({3, 1, 1})) == -1);
}

TEST_CASE("class_size") {
    CHECK(class_size(Partition({4})) == 6);              // (n-1)!
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
    CHECK(class_size(Partition({5})) == 24);

    SUBCASE("brute force over S_4") {
        std::map<Partition, int> counts;
        for (const Perm& g : all_perms(4)) counts[cycle_type(g)] += 1;
        CHECK(counts[Partition({2, 1, 1})] == 6);
        for (const auto& [mu, c] : counts) CHECK(class_size(mu) == c);
    }

    SUBCASE("class sizes sum to n!") {
        for (int n = 1; n <= 12; ++n) {
            Int total = 0;
            for (const auto& mu : enumerate_partitions(n)) total += class_size(mu);
            CHECK(total == factorial(static_cast<unsigned long>(n)));
        }
    }
}

TEST_CASE("hook products and dimensions") {
    CHECK(hook_product(Partition({4})) == 24);
    CHECK(hook_product(Partition({3, 1})) == 8);
    CHECK(hook_product(Partition({2, 2})) == 12);  // hooks 3,2,2,1

    CHECK(irrep_dimension(Partition({6})) == 1);
    CHECK(irrep_dimension(Partition({3, 1})) == 3);

    SUBCASE("hook-shape closed form and duality") {
        for (int n = 1; n <= 12; ++n) {
            Int nf = factorial(static_cast<unsigned long>(n));
            for (int k = 0; k <= n - 1; ++k) {
                std::vector<int> parts{n - k};
                parts.insert(parts.end(), static_cast<size_t>(k), 1);
                Partition hook(parts);
                CHECK(hook_product(hook) ==
                      Int(n) * factorial(static_cast<unsigned long>(n - k - 1)) *
                          factorial(static_cast<unsigned long>(k)));
                CHECK(irrep_dimension(hook) ==
                      binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k)));
            }
            for (const auto& lambda : enumerate_partitions(n))
                CHECK(hook_product(lambda) * irrep_dimension(lambda) == nf);
        }
    }

    SUBCASE("sum of squared dimensions") {
        for (int n = 1; n <= 10; ++n) {
            Int total = 0;
            for (const auto& lambda : enumerate_partitions(n)) {
                Int d = irrep_dimension(lambda);
                total += d * d;
            }
            CHECK(total == factorial(static_cast<unsigned long>(n)));
        }
    }
}

TEST_CASE("conjugate partitions") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& p : enumerate_partitions(9)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(hook_product(p.conjugate()) == hook_product(p));
    }
}

TEST_CASE("count_p_regular_elements") {
    CHECK(count_p_regular_elements(4, 2) == 9);
    CHECK(count_p_regular_elements(2, 2) == 1);
    CHECK(count_p_regular_elements(4, 5) == 24);

    SUBCASE("brute force against permutation orders") {
        for (int n = 1; n <= 6; ++n)
            for (long long p : {2ll, 3ll, 5ll}) {
                Int brute = 0;
                for (const Perm& g : all_perms(n))
                    if (perm_order(g) % p != 0) brute += 1;
                CHECK(count_p_regular_elements(n, p) == brute);
            }
    }

    SUBCASE("Erdos-Turan style lower bound on 2-singular density") {
        for (int n = 2; n <= 12; ++n) {
            Int nf = factorial(static_cast<unsigned long>(n));
            Rat r(count_p_regular_elements(n, 2), nf);
            r.canonicalize();
            CHECK(r * r * n <= 9);  // fraction >= 1 - 3/sqrt(n)
        }
    }
}

TEST_CASE("hooks recognized") {
    CHECK(Partition({5}).is_hook());
    CHECK(Partition({3, 1, 1}).is_hook());
    CHECK(!Partition({3, 2}).is_hook());
    CHECK(Partition({1, 1, 1}).is_hook());
}
