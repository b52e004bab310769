#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syngular/partition.hpp"
#include "syngular/permutation.hpp"

namespace syngular {

/// One way of removing a border strip: the shape left behind and the
/// strip's leg length (number of rows spanned minus one).
struct BorderStripRemoval {
    Partition target;
    int leg_length;
};

/// All removals of a border strip of exactly t cells from lambda, with leg
/// lengths. Enumerated through the beta-set (first-column hook length)
/// encoding: subtracting t from one beta number when the result is a fresh
/// nonnegative value; the leg length is the number of beta numbers strictly
/// between the old and new value.
std::vector<BorderStripRemoval> border_strips(const Partition& lambda, int t);

/// Exact-integer class function on the partitions of n, with values
/// indexed in enumerate_partitions order.
struct ClassFunction {
    int n = 0;
    std::vector<Partition> classes;
    std::vector<Int> values;

    const Int& at(const Partition& mu) const;
};

/// Memoizing evaluator for irreducible S_n character values via the
/// Murnaghan-Nakayama rule. The recursion consumes the largest remaining
/// part of mu first; the memo key is (lambda, remaining mu). The cache
/// behaves as a concurrent map guarded by a mutex, and can be persisted
/// to a versioned flat file (magic line "MNCACHE v1").
class MnCache {
public:
    MnCache() = default;
    explicit MnCache(int ceiling) : ceiling_(ceiling) {}

    /// chi^lambda(mu), both partitions of the same n.
    Int value(const Partition& lambda, const Partition& mu);

    int ceiling() const { return ceiling_; }
    size_t size() const;

    void load(const std::string& path);         // throws on malformed input
    void save_atomic(const std::string& path);  // write tmp file, then rename

private:
    struct Key {
        Partition lambda, mu;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            PartitionHash h;
            return h(k.lambda) * 0x9e3779b97f4a7c15ull + h(k.mu);
        }
    };

    Int value_rec(const Partition& lambda, const Partition& mu);

    int ceiling_ = 14;
    mutable std::mutex lock_;
    std::unordered_map<Key, Int, KeyHash> memo_;
};

/// Murnaghan-Nakayama character value chi^lambda(mu) evaluated against the
/// given cache.
Int mn_value(MnCache& cache, const Partition& lambda, const Partition& mu);

/// chi^lambda evaluated with the parts of mu consumed in the order given
/// (any composition that reorders mu yields the same value). Unmemoized;
/// used as an independent route for order-invariance checks.
Int mn_value_composition(const Partition& lambda, const std::vector<int>& comp);

/// Sum over all hook shapes: H_n(mu) = sum_k chi^{(n-k,1^k)}(mu).
Int hooks_sum(MnCache& cache, int n, const Partition& mu);

/// Closed form of H_n: 2^{#parts(mu)-1} when all parts are odd, else 0.
Int hooks_sum_closed(int n, const Partition& mu);

/// Alternating two-row sum: B_n(mu) = sum_{k<=n/2} (-1)^k chi^{(n-k,k)}(mu).
/// Requires n even.
Int two_row_alternating(MnCache& cache, int n, const Partition& mu);

/// Closed form of B_n: 2^{#parts(mu)} when all parts are even, else 0.
Int two_row_alternating_closed(int n, const Partition& mu);

/// Full character table, rows indexed by shape and columns by class, both
/// in enumerate_partitions order. Throws when n exceeds the cache ceiling.
std::vector<std::vector<Int>> character_table(MnCache& cache, int n);

ClassFunction trivial_character(int n);
ClassFunction hooks_character(MnCache& cache, int n);    // H_n
ClassFunction two_row_character(MnCache& cache, int n);  // B_n

/// Plain sum over the group: sum_mu class_size(mu) f(mu) g(mu).
Int inner_product_unnormalized(const ClassFunction& f, const ClassFunction& g);

/// inner_product_unnormalized / n!, exact; throws if not integral.
Int inner_product_normalized(const ClassFunction& f, const ClassFunction& g);

/// sum_{g in elements} chi^lambda(cycle_type(g)); equals |H| times the
/// multiplicity of lambda in the induced trivial representation when the
/// element list is a subgroup.
Int subgroup_hook_pairing(MnCache& cache, int n, const std::vector<Perm>& elements,
                          const Partition& lambda);

}  // namespace syngular
