#pragma once

#include <cstddef>
#include <vector>

#include "syngular/numeric.hpp"
#include "syngular/permutation.hpp"

namespace syngular {

/// Permutation group given by generators with its element list fully
/// enumerated. elements always starts with the identity and is otherwise
/// in breadth-first discovery order, deterministic for a fixed generator
/// order.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;

    size_t order() const { return elements.size(); }
};

/// Generators of the canonical Sylow 2-subgroup of S_n: write
/// n = 2^{h_1} + ... + 2^{h_m} with h_1 > ... > h_m >= 0; blocks of size
/// 2^{h_i} occupy consecutive symbols from 1 upward, and each block of
/// size 2^h contributes, recursively, the generators of its two
/// half-blocks plus the involution swapping the halves pointwise.
std::vector<Perm> sylow2_generators(int n);

/// Breadth-first product closure. Throws when the element count would
/// exceed the budget.
PermGroup closure(int degree, const std::vector<Perm>& generators,
                  size_t element_budget = size_t(1) << 20);

/// sum_{i>=1} floor(n/p^i): exponent of the largest power of p dividing n!.
long long legendre_exponent(long long n, long long p);

/// True iff every element's order is a power of p.
bool verify_p_power_orders(const PermGroup& group, long long p);

/// All (n-1)! permutations of S_n fixing the given point, in lexicographic
/// image order.
PermGroup young_subgroup_stabilizer(int n, int fixed_point);

/// Square matrix over the prime field F_p, entries row-major in [0, p).
struct FpMatrix {
    int n = 0;
    long long p = 2;
    std::vector<long long> e;

    long long at(int i, int j) const { return e[static_cast<size_t>(i * n + j)]; }
    long long& at(int i, int j) { return e[static_cast<size_t>(i * n + j)]; }
    static FpMatrix identity(int n, long long p);
    bool operator==(const FpMatrix&) const = default;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
bool mat_invertible(const FpMatrix& m);
FpMatrix mat_inverse(const FpMatrix& m);  // throws when singular

/// All invertible n x n matrices over F_p in odometer order of the entry
/// vector. Throws when p^{n^2} exceeds the candidate budget.
std::vector<FpMatrix> gl_enumerate(int n, long long p, size_t candidate_budget = size_t(1) << 24);

/// |GL_n(q)| = q^{binom(n,2)} prod_{i=1}^{n} (q^i - 1); q need not be prime.
Int gl_order(int n, const Int& q);

/// Least k >= 1 with M^k = I. Throws when M is singular.
long long matrix_order(const FpMatrix& m);

}  // namespace syngular
