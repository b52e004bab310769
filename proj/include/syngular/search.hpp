#pragma once

#include <cstdint>
#include <vector>

#include "syngular/groups.hpp"
#include "syngular/permutation.hpp"

namespace syngular {

enum class ConstraintKind {
    PSingular,              // difference order divisible by p
    EvenCycleIntersecting,  // = PSingular with p = 2
    OddCycleIntersecting,   // difference has an odd cycle
    Reversing,              // difference contains a cycle of length exactly 2
    OddtownPermutation,     // members of odd order, differences of even order
};

struct FamilyConstraint {
    ConstraintKind kind = ConstraintKind::EvenCycleIntersecting;
    long long p = 2;

    static FamilyConstraint p_singular(long long p) {
        return FamilyConstraint{ConstraintKind::PSingular, p};
    }
};

/// Whether two distinct elements whose difference has the given cycle type
/// may coexist in a family under the constraint.
bool pair_allowed(const FamilyConstraint& c, const Partition& diff_type);

/// Unary admission test (only oddtown restricts membership).
bool member_allowed(const FamilyConstraint& c, const Perm& g);

/// O(|F|^2) pairwise check plus the unary condition.
bool verify_family(const std::vector<Perm>& elements, const FamilyConstraint& c);

struct SearchReport {
    long long max_size = 0;
    std::vector<Perm> witness;
    unsigned long long nodes_explored = 0;
    bool budget_exhausted = false;
    double elapsed_seconds = 0.0;
};

inline constexpr unsigned long long kDefaultSearchBudget = 100000000ull;  // 1e8 nodes
inline constexpr size_t kExactVertexCeiling = 720;

/// Exact maximum family among the given vertices under the constraint:
/// branch-and-bound maximum clique on the compatibility graph (vertices
/// adjacent iff they may coexist), greedy-coloring upper bounds, vertex
/// order lexicographic on image arrays. The seed, when nonempty, must be
/// a valid family among the vertices and becomes the initial incumbent.
/// On budget exhaustion the best incumbent is returned with the flag set;
/// otherwise max_size is exact. The emitted witness is re-verified.
SearchReport max_family(std::vector<Perm> vertices, const FamilyConstraint& c,
                        unsigned long long budget = kDefaultSearchBudget,
                        std::vector<Perm> seed = {});

/// Maximum p-singular family over all of S_n (alpha of the p-regular
/// graph). For p = 2 the incumbent is seeded with the Sylow 2-subgroup.
SearchReport alpha_p_regular(int n, long long p,
                             unsigned long long budget = kDefaultSearchBudget);

/// Largest family of odd-order permutations with pairwise even-order
/// differences.
SearchReport oddtown_max(int n, unsigned long long budget = kDefaultSearchBudget);

/// Largest reversing family of S_n.
SearchReport reversing_max(int n, unsigned long long budget = kDefaultSearchBudget);

/// Adjacency given directly as bitsets; used for non-permutation vertex
/// sets (e.g. matrix groups).
struct BitGraph {
    int nv = 0;
    int words = 0;
    std::vector<uint64_t> bits;

    explicit BitGraph(int n)
        : nv(n), words((n + 63) / 64), bits(static_cast<size_t>(n) * static_cast<size_t>(words), 0) {}
    void add_edge(int u, int v) {
        bits[static_cast<size_t>(u) * words + static_cast<size_t>(v / 64)] |= 1ull << (v % 64);
        bits[static_cast<size_t>(v) * words + static_cast<size_t>(u / 64)] |= 1ull << (u % 64);
    }
    bool adjacent(int u, int v) const {
        return bits[static_cast<size_t>(u) * words + static_cast<size_t>(v / 64)] >> (v % 64) & 1;
    }
    const uint64_t* row(int u) const { return bits.data() + static_cast<size_t>(u) * words; }
};

struct CliqueResult {
    std::vector<int> best;
    unsigned long long nodes = 0;
    bool budget_exhausted = false;
};

/// Deterministic sequential max clique (greedy coloring bound). seed is
/// the initial incumbent and must be a clique.
CliqueResult max_clique(const BitGraph& g, const std::vector<int>& seed,
                        unsigned long long budget);

/// Maximum p-singular family of the full matrix group given by elements.
SearchReport max_family_matrices(const std::vector<FpMatrix>& elements, long long p,
                                 unsigned long long budget, CliqueResult* raw = nullptr);

}  // namespace syngular
