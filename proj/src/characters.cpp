#include "syngular/characters.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace syngular {

std::vector<BorderStripRemoval> border_strips(const Partition& lambda, int t) {
    if (t < 1) throw std::invalid_argument("border_strips: t must be positive");
    std::vector<BorderStripRemoval> out;
    const int r = lambda.rows();
    if (r == 0) return out;
    std::vector<int> beta(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (r - 1 - i);
    for (int i = 0; i < r; ++i) {
        int nb = beta[static_cast<size_t>(i)] - t;
        if (nb < 0) continue;
        bool clash = false;
        int leg = 0;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<size_t>(j)];
            if (bj == nb) {
                clash = true;
                break;
            }
            if (bj > nb && bj < beta[static_cast<size_t>(i)]) ++leg;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> parts;
        for (int j = 0; j < r; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (r - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.push_back(BorderStripRemoval{Partition(std::move(parts)), leg});
    }
    return out;
}

const Int& ClassFunction::at(const Partition& mu) const {
    int idx = partition_index(classes, mu);
    if (idx < 0) throw std::invalid_argument("ClassFunction: not a class of S_" + std::to_string(n));
    return values[static_cast<size_t>(idx)];
}

Int MnCache::value(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("mn_value: lambda and mu must partition the same n");
    return value_rec(lambda, mu);
}

Int MnCache::value_rec(const Partition& lambda, const Partition& mu) {
    if (mu.n() == 0) return 1;
    Key key{lambda, mu};
    {
        std::lock_guard<std::mutex> g(lock_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // consume the largest remaining part first; the tail stays sorted
    int t = mu.part(0);
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    Int sum = 0;
    for (const BorderStripRemoval& s : border_strips(lambda, t)) {
        Int term = value_rec(s.target, rest);
        if (s.leg_length % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    std::lock_guard<std::mutex> g(lock_);
    return memo_.emplace(std::move(key), std::move(sum)).first->second;
}

size_t MnCache::size() const {
    std::lock_guard<std::mutex> g(lock_);
    return memo_.size();
}

namespace {

std::vector<int> parse_parts(const std::string& field, const std::string& path) {
    std::vector<int> parts;
    std::istringstream in(field);
    int v;
    while (in >> v) parts.push_back(v);
    if (!in.eof()) throw std::runtime_error("MNCACHE: malformed parts in " + path);
    return parts;
}

}  // namespace

void MnCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("MNCACHE: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "MNCACHE v1")
        throw std::runtime_error("MNCACHE: bad magic line in " + path);
    std::lock_guard<std::mutex> g(lock_);
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t a = line.find('|');
        size_t b = line.find('|', a == std::string::npos ? a : a + 1);
        if (a == std::string::npos || b == std::string::npos)
            throw std::runtime_error("MNCACHE: malformed record at line " +
                                     std::to_string(lineno) + " of " + path);
        Partition lambda(parse_parts(line.substr(0, a), path));
        Partition mu(parse_parts(line.substr(a + 1, b - a - 1), path));
        std::string val = line.substr(b + 1);
        Int v;
        if (val.empty() || mpz_set_str(v.get_mpz_t(), val.c_str(), 10) != 0)
            throw std::runtime_error("MNCACHE: malformed value at line " +
                                     std::to_string(lineno) + " of " + path);
        if (lambda.n() != mu.n())
            throw std::runtime_error("MNCACHE: inconsistent record at line " +
                                     std::to_string(lineno) + " of " + path);
        memo_[Key{std::move(lambda), std::move(mu)}] = std::move(v);
    }
}

void MnCache::save_atomic(const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("MNCACHE: cannot write " + tmp);
        out << "MNCACHE v1\n";
        std::lock_guard<std::mutex> g(lock_);
        for (const auto& [key, val] : memo_) {
            auto put_parts = [&out](const Partition& p) {
                const auto& parts = p.parts();
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (i) out << ' ';
                    out << parts[i];
                }
            };
            put_parts(key.lambda);
            out << '|';
            put_parts(key.mu);
            out << '|' << val.get_str() << '\n';
        }
        if (!out) throw std::runtime_error("MNCACHE: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

Int mn_value(MnCache& cache, const Partition& lambda, const Partition& mu) {
    return cache.value(lambda, mu);
}

Int mn_value_composition(const Partition& lambda, const std::vector<int>& comp) {
    int total = 0;
    for (int v : comp) total += v;
    if (lambda.n() != total)
        throw std::invalid_argument("mn_value_composition: sizes disagree");
    if (comp.empty()) return 1;
    std::vector<int> rest(comp.begin() + 1, comp.end());
    Int sum = 0;
    for (const BorderStripRemoval& s : border_strips(lambda, comp[0])) {
        Int term = mn_value_composition(s.target, rest);
        if (s.leg_length % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Int hooks_sum(MnCache& cache, int n, const Partition& mu) {
    if (mu.n() != n) throw std::invalid_argument("hooks_sum: mu must be a partition of n");
    Int sum = 0;
    for (int k = 0; k <= n - 1; ++k) {
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), static_cast<size_t>(k), 1);
        sum += cache.value(Partition(std::move(parts)), mu);
    }
    return sum;
}

Int hooks_sum_closed(int n, const Partition& mu) {
    if (mu.n() != n) throw std::invalid_argument("hooks_sum_closed: mu must be a partition of n");
    if (!mu.all_parts_odd()) return 0;
    return two_pow(static_cast<unsigned long>(mu.rows() - 1));
}

Int two_row_alternating(MnCache& cache, int n, const Partition& mu) {
    if (n % 2 != 0) throw std::invalid_argument("two_row_alternating: n must be even");
    if (mu.n() != n) throw std::invalid_argument("two_row_alternating: mu must partition n");
    Int sum = 0;
    for (int k = 0; k <= n / 2; ++k) {
        std::vector<int> parts{n - k};
        if (k > 0) parts.push_back(k);
        Int term = cache.value(Partition(std::move(parts)), mu);
        if (k % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Int two_row_alternating_closed(int n, const Partition& mu) {
    if (n % 2 != 0) throw std::invalid_argument("two_row_alternating_closed: n must be even");
    if (mu.n() != n) throw std::invalid_argument("two_row_alternating_closed: mu must partition n");
    if (!mu.all_parts_even()) return 0;
    return two_pow(static_cast<unsigned long>(mu.rows()));
}

std::vector<std::vector<Int>> character_table(MnCache& cache, int n) {
    if (n > cache.ceiling())
        throw std::invalid_argument("character_table: n exceeds the configured ceiling " +
                                    std::to_string(cache.ceiling()));
    std::vector<Partition> ps = enumerate_partitions(n);
    std::vector<std::vector<Int>> table(ps.size());
    for (size_t l = 0; l < ps.size(); ++l) {
        table[l].reserve(ps.size());
        for (size_t m = 0; m < ps.size(); ++m) table[l].push_back(cache.value(ps[l], ps[m]));
    }
    return table;
}

ClassFunction trivial_character(int n) {
    ClassFunction f;
    f.n = n;
    f.classes = enumerate_partitions(n);
    f.values.assign(f.classes.size(), 1);
    return f;
}

ClassFunction hooks_character(MnCache& cache, int n) {
    ClassFunction f;
    f.n = n;
    f.classes = enumerate_partitions(n);
    for (const Partition& mu : f.classes) f.values.push_back(hooks_sum(cache, n, mu));
    return f;
}

ClassFunction two_row_character(MnCache& cache, int n) {
    ClassFunction f;
    f.n = n;
    f.classes = enumerate_partitions(n);
    for (const Partition& mu : f.classes) f.values.push_back(two_row_alternating(cache, n, mu));
    return f;
}

Int inner_product_unnormalized(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("inner_product: degree mismatch");
    Int sum = 0;
    for (size_t i = 0; i < f.classes.size(); ++i)
        sum += class_size(f.classes[i]) * f.values[i] * g.values[i];
    return sum;
}

Int inner_product_normalized(const ClassFunction& f, const ClassFunction& g) {
    Int raw = inner_product_unnormalized(f, g);
    Int nf = factorial(static_cast<unsigned long>(f.n));
    if (raw % nf != 0) throw std::logic_error("inner_product_normalized: non-integral multiplicity");
    return raw / nf;
}

Int subgroup_hook_pairing(MnCache& cache, int n, const std::vector<Perm>& elements,
                          const Partition& lambda) {
    // tally cycle types first; the character is a class function
    std::unordered_map<Partition, Int, PartitionHash> tally;
    for (const Perm& g : elements) tally[cycle_type(g)] += 1;
    Int sum = 0;
    for (const auto& [mu, count] : tally) {
        if (mu.n() != n) throw std::invalid_argument("subgroup_hook_pairing: degree mismatch");
        sum += count * cache.value(lambda, mu);
    }
    return sum;
}

}  // namespace syngular
