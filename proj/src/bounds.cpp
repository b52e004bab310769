#include "syngular/bounds.hpp"

#include "syngular/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace syngular {

Rat WeightedSpectrum::max_eigenvalue() const {
    if (entries.empty()) throw std::logic_error("empty spectrum");
    Rat m = entries[0].eigenvalue;
    for (const auto& e : entries) m = std::max(m, e.eigenvalue);
    return m;
}

Rat WeightedSpectrum::min_eigenvalue() const {
    if (entries.empty()) throw std::logic_error("empty spectrum");
    Rat m = entries[0].eigenvalue;
    for (const auto& e : entries) m = std::min(m, e.eigenvalue);
    return m;
}

WeightedSpectrum weighted_cayley_spectrum(MnCache& cache, const ClassFunction& w) {
    WeightedSpectrum spec;
    spec.n = w.n;
    std::vector<Partition> shapes = enumerate_partitions(w.n);
    for (const Partition& lambda : shapes) {
        Int dim = irrep_dimension(lambda);
        Int num = 0;
        for (size_t i = 0; i < w.classes.size(); ++i) {
            if (w.values[i] == 0) continue;
            num += class_size(w.classes[i]) * w.values[i] * cache.value(lambda, w.classes[i]);
        }
        Rat eig(num, dim);
        eig.canonicalize();
        spec.entries.push_back(SpectrumEntry{lambda, eig, dim * dim});
    }
    return spec;
}

WeightedSpectrum normal_cayley_spectrum(MnCache& cache, int n,
                                        const std::set<Partition>& indicator) {
    ClassFunction w;
    w.n = n;
    w.classes = enumerate_partitions(n);
    for (const Partition& mu : w.classes) w.values.push_back(indicator.count(mu) ? 1 : 0);
    WeightedSpectrum spec = weighted_cayley_spectrum(cache, w);
    for (const auto& e : spec.entries)
        if (!is_integral(e.eigenvalue))
            throw std::logic_error("normal_cayley_spectrum: non-integral eigenvalue at " +
                                   e.shape.to_string());
    return spec;
}

WeightedSpectrum oc_prime_spectrum(int n) {
    if (n < 2) throw std::invalid_argument("oc_prime_spectrum: n must be at least 2");
    WeightedSpectrum spec;
    spec.n = n;
    Int shift = two_pow(static_cast<unsigned long>(n - 1));
    for (const Partition& lambda : enumerate_partitions(n)) {
        Int dim = irrep_dimension(lambda);
        Int eig = -shift;
        if (lambda.is_hook()) eig += hook_product(lambda);
        spec.entries.push_back(SpectrumEntry{lambda, Rat(eig), dim * dim});
    }
    return spec;
}

WeightedSpectrum ec_spectrum(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("ec_spectrum: n must be even, n >= 2");
    WeightedSpectrum spec;
    spec.n = n;
    for (const Partition& lambda : enumerate_partitions(n)) {
        Int eig = 0;
        if (lambda.rows() <= 2) {
            int k = lambda.rows() == 2 ? lambda.part(1) : 0;
            eig = hook_product(lambda);
            if (k % 2 != 0) eig = -eig;
        }
        Int dim = irrep_dimension(lambda);
        spec.entries.push_back(SpectrumEntry{lambda, Rat(eig), dim * dim});
    }
    return spec;
}

Rat delsarte_hoffman_bound(const Int& N, const Rat& eta_max, const Rat& eta_min) {
    if (!(eta_min < 0 && eta_max > 0))
        throw std::invalid_argument("delsarte_hoffman_bound: need eta_min < 0 < eta_max");
    Rat bound = Rat(N) * (-eta_min) / (eta_max - eta_min);
    bound.canonicalize();
    return bound;
}

bool ratio_equality_certificate(MnCache& cache, int n, const std::vector<Perm>& family,
                                const std::vector<Partition>& non_extremal) {
    if (family.empty()) throw std::invalid_argument("ratio_equality_certificate: empty family");
    std::unordered_map<Partition, Int, PartitionHash> tally;
    for (const Perm& sigma : family) {
        for (const Perm& pi : family) tally[cycle_type(compose(sigma, pi.inverse()))] += 1;
    }
    for (const Partition& lambda : non_extremal) {
        if (lambda.n() != n)
            throw std::invalid_argument("ratio_equality_certificate: shape degree mismatch");
        Int sum = 0;
        for (const auto& [mu, count] : tally) sum += count * cache.value(lambda, mu);
        if (sum != 0) return false;
    }
    return true;
}

std::vector<Partition> nontrivial_hooks(int n) {
    std::vector<Partition> out;
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), static_cast<size_t>(k), 1);
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

std::vector<Partition> nontrivial_hooks_with_sign(int n) {
    std::vector<Partition> out = nontrivial_hooks(n);
    out.push_back(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    return out;
}

bool is_psd_exact(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int j = k; j < n; ++j)
            if (a[static_cast<size_t>(j)][static_cast<size_t>(j)] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) {
            // remaining diagonal all zero: PSD forces the whole block to vanish
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) return false;
            return true;
        }
        if (piv != k) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
            for (int i = 0; i < n; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(piv)],
                          a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
        }
        const Rat& d = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (d < 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / d;
            if (f == 0) continue;
            for (int j = k; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    }
    return true;
}

ThetaReport theta_feasibility_check(MnCache& cache, int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("theta_feasibility_check: n must be between 2 and 5");
    ThetaReport report;
    report.n = n;
    report.theta = two_pow(static_cast<unsigned long>(n - 1));

    std::vector<Partition> classes = enumerate_partitions(n);
    std::vector<Int> hvals;  // H_n per class
    for (const Partition& mu : classes) hvals.push_back(hooks_sum(cache, n, mu));

    std::vector<Perm> elems = all_perms(n);
    const int N = static_cast<int>(elems.size());
    std::vector<std::vector<Rat>> a(static_cast<size_t>(N),
                                    std::vector<Rat>(static_cast<size_t>(N)));
    Int diag_expected = report.theta - 1;
    bool ok = true;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            Partition diff = cycle_type(compose(elems[static_cast<size_t>(i)],
                                                elems[static_cast<size_t>(j)].inverse()));
            int idx = partition_index(classes, diff);
            Int entry = hvals[static_cast<size_t>(idx)] - 1;  // OC_n - J
            if (i == j && entry != diag_expected) ok = false;
            if (i != j && diff.has_part_divisible_by(2) && entry != -1) ok = false;
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(entry);
        }
    }
    report.ok = ok && is_psd_exact(std::move(a));
    return report;
}

Int haemers_bound(const Int& rank) {
    if (rank < 1) throw std::invalid_argument("haemers_bound: rank must be positive");
    return rank;
}

GlHaemersReport gl_haemers_report(int n, const Int& q) {
    GlHaemersReport r;
    r.bound = int_pow(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1));
    r.group_order = gl_order(n, q);
    r.steinberg_degree = int_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    if (n >= 2 && !(r.bound < r.group_order))
        throw std::logic_error("gl_haemers_report: bound must be below the group order");
    return r;
}

ErdosTuranReport erdos_turan_check(int n) {
    if (n < 2) throw std::invalid_argument("erdos_turan_check: n must be at least 2");
    ErdosTuranReport rep;
    Int nf = factorial(static_cast<unsigned long>(n));
    Int regular = count_p_regular_elements(n, 2);
    rep.fraction = Rat(nf - regular, nf);
    rep.fraction.canonicalize();
    Rat r(regular, nf);  // 1 - fraction
    r.canonicalize();
    rep.ok = r * r * n <= 9;
    return rep;
}

}  // namespace syngular
