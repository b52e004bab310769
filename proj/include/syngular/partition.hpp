#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "syngular/numeric.hpp"

namespace syngular {

/// Integer partition: weakly decreasing positive parts. Serves both as a
/// shape lambda and as a cycle type mu; the empty partition is the unique
/// partition of 0.
///
/// Partitions are immutable values with structural equality and a total
/// order, so they can index maps and memo tables.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    bool empty() const { return parts_.empty(); }

    bool all_parts_odd() const;
    bool all_parts_even() const;
    bool has_part_divisible_by(long long p) const;
    bool has_part_equal(int v) const;

    /// Transpose of the Young diagram.
    Partition conjugate() const;

    /// True iff the shape is (n-k, 1^k) for some k (includes (n) and (1^n)).
    bool is_hook() const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "[3,1]"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n)
/// last. This order is the repo-wide indexing convention for class
/// functions, character tables and spectra.
std::vector<Partition> enumerate_partitions(int n);

/// Index of mu in enumerate_partitions order, or -1 if absent.
int partition_index(const std::vector<Partition>& list, const Partition& mu);

/// Number of permutations in S_n with cycle type mu: n!/z_mu where
/// z_mu = prod_i i^{m_i} m_i!.
Int class_size(const Partition& mu);

/// Product of hook lengths over all cells of the Young diagram.
Int hook_product(const Partition& lambda);

/// chi^lambda(1) = n!/H_lambda.
Int irrep_dimension(const Partition& lambda);

/// Number of elements of S_n whose order is not divisible by p, i.e. the
/// sum of class sizes over cycle types with no part divisible by p.
Int count_p_regular_elements(int n, long long p);

/// Sign of the conjugacy class: (-1)^{n - #parts(mu)}.
int class_sign(const Partition& mu);

}  // namespace syngular
