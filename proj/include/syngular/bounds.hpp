#pragma once

#include <set>
#include <vector>

#include "syngular/characters.hpp"
#include "syngular/numeric.hpp"
#include "syngular/partition.hpp"
#include "syngular/permutation.hpp"

namespace syngular {

/// Eigenvalue of a conjugation-invariant weighting on one isotypic
/// component. The multiplicity is dim(shape)^2.
struct SpectrumEntry {
    Partition shape;
    Rat eigenvalue;
    Int multiplicity;
};

/// Full spectrum of a weighted normal Cayley graph on S_n, one entry per
/// shape in enumerate_partitions order. Multiplicities always sum to n!.
struct WeightedSpectrum {
    int n = 0;
    std::vector<SpectrumEntry> entries;

    Rat max_eigenvalue() const;
    Rat min_eigenvalue() const;
};

/// Spectrum of the weighting w: eigenvalue on shape lambda is
/// (1/dim lambda) sum_mu class_size(mu) w(mu) chi^lambda(mu).
WeightedSpectrum weighted_cayley_spectrum(MnCache& cache, const ClassFunction& w);

/// Spectrum of the unweighted normal Cayley graph generated by the given
/// conjugacy classes. Eigenvalues are algebraic integers here, so each
/// rational must reduce to denominator 1; a failure throws.
WeightedSpectrum normal_cayley_spectrum(MnCache& cache, int n,
                                        const std::set<Partition>& indicator);

/// Spectrum of OC'_n: eigenvalue H_lambda - 2^{n-1} on each hook shape
/// (n-k, 1^k), and -2^{n-1} on every non-hook. Computed from hook
/// products directly.
WeightedSpectrum oc_prime_spectrum(int n);

/// Spectrum of EC_n (n even): eigenvalue (-1)^k H_{(n-k,k)} on each
/// two-row shape, 0 elsewhere.
WeightedSpectrum ec_spectrum(int n);

/// N * (-eta_min) / (eta_max - eta_min); requires eta_min < 0 < eta_max.
Rat delsarte_hoffman_bound(const Int& N, const Rat& eta_max, const Rat& eta_min);

/// True iff the characteristic vector of the family is orthogonal to every
/// listed isotypic component: for each lambda the exact sum of
/// chi^lambda(sigma pi^{-1}) over all ordered pairs of the family is zero.
bool ratio_equality_certificate(MnCache& cache, int n, const std::vector<Perm>& family,
                                const std::vector<Partition>& non_extremal);

/// Default component list for OC'-based certificates: the non-trivial
/// hooks (n-k, 1^k) with 1 <= k <= n-2 (the sign shape shares the top
/// eigenvalue and is excluded).
std::vector<Partition> nontrivial_hooks(int n);

/// The sign shape (1^n) included: its pairing with P_n also vanishes at
/// n = 4, 8, tracked separately from the default certificate.
std::vector<Partition> nontrivial_hooks_with_sign(int n);

struct ThetaReport {
    int n = 0;
    Int theta;
    bool ok = false;
};

/// Builds A = OC_n - J explicitly (n! x n!), checks the theta-SDP
/// constraints with theta = 2^{n-1} (diagonal theta - 1, entry -1 whenever
/// the difference is 2-singular) and certifies positive semidefiniteness
/// by exact rational elimination. Capped at n <= 5.
ThetaReport theta_feasibility_check(MnCache& cache, int n);

/// Exact rational LDL-style PSD certification with symmetric pivoting; a
/// negative pivot or a zero diagonal with nonzero residual column refutes.
bool is_psd_exact(std::vector<std::vector<Rat>> a);

/// The Haemers certificate is the rank itself.
Int haemers_bound(const Int& rank);

struct GlHaemersReport {
    Int bound;             // q^{n^2 - n}
    Int group_order;       // |GL_n(q)|
    Int steinberg_degree;  // q^{n(n-1)/2}
};

GlHaemersReport gl_haemers_report(int n, const Int& q);

struct ErdosTuranReport {
    Rat fraction;  // probability that a uniform element of S_n is 2-singular
    bool ok = false;
};

/// Checks fraction >= 1 - 3/sqrt(n) by exact counting; the comparison is
/// done as (1 - fraction)^2 * n <= 9 to avoid irrational thresholds.
ErdosTuranReport erdos_turan_check(int n);

}  // namespace syngular
