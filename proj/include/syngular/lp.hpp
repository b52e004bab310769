#pragma once

#include <vector>

#include "syngular/characters.hpp"
#include "syngular/numeric.hpp"
#include "syngular/partition.hpp"

namespace syngular {

/// Exact-rational feasibility system: A x = b, x >= 0. Variables may carry
/// finite upper bounds (used by the integer search to keep its tree
/// finite) and partition labels for reporting.
struct RationalLP {
    size_t num_vars = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    std::vector<Partition> var_shapes;    // optional, size num_vars when present
    std::vector<Rat> var_upper_bounds;    // optional, size num_vars when present
};

enum class LPStatus { Feasible, Infeasible, Unknown };

struct LPOutcome {
    LPStatus status = LPStatus::Unknown;
    std::vector<Rat> witness;  // size num_vars when feasible
    std::vector<Rat> farkas;   // size #rows when infeasible
    unsigned long long nodes = 0;
};

/// Steinberg-like relaxation for (n, p): conic coefficients c_lambda >= 0
/// over all shapes of n, one vanishing row per p-singular class, the
/// normalization c_{(n)} = 1 and the degree row
/// sum c_lambda dim(lambda) = p^{legendre_exponent(n, p)}.
RationalLP build_steinberg_lp(MnCache& cache, int n, long long p);

/// Phase-1 simplex with exact rational pivots and Bland's anti-cycling
/// rule. Returns an exact witness or an exact Farkas certificate; both are
/// re-verified by substitution before returning.
LPOutcome solve_feasibility(const RationalLP& lp);

/// Branch-and-bound on fractional variables over the LP relaxation.
/// Requires var_upper_bounds. Status Unknown when the depth budget runs
/// out.
LPOutcome solve_integer_feasibility(const RationalLP& lp, int depth_budget = 64);

/// Substitution check: every row holds exactly, all components >= 0 (and
/// within the upper bounds when given).
bool check_witness(const RationalLP& lp, const std::vector<Rat>& x);

/// Farkas check: y^T A <= 0 componentwise with y^T b > 0.
bool check_farkas(const RationalLP& lp, const std::vector<Rat>& y);

}  // namespace syngular
