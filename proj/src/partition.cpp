#include "syngular/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace syngular {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

bool Partition::all_parts_odd() const {
    for (int p : parts_)
        if (p % 2 == 0) return false;
    return true;
}

bool Partition::all_parts_even() const {
    for (int p : parts_)
        if (p % 2 != 0) return false;
    return true;
}

bool Partition::has_part_divisible_by(long long p) const {
    for (int v : parts_)
        if (v % p == 0) return true;
    return false;
}

bool Partition::has_part_equal(int v) const {
    for (int p : parts_)
        if (p == v) return true;
    return false;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

bool Partition::is_hook() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.parts()) h = h * 1000003u + static_cast<size_t>(v) + 1;
    return h;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Reverse-lexicographic: always place the largest admissible part next.
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

int partition_index(const std::vector<Partition>& list, const Partition& mu) {
    // enumerate_partitions order is descending lexicographic on the parts.
    auto it = std::lower_bound(list.begin(), list.end(), mu,
                               [](const Partition& a, const Partition& b) {
                                   return a.parts() > b.parts();
                               });
    if (it == list.end() || *it != mu) return -1;
    return static_cast<int>(it - list.begin());
}

Int class_size(const Partition& mu) {
    Int z = 1;
    int run_part = -1;
    long run_len = 0;
    auto flush = [&]() {
        for (long j = 1; j <= run_len; ++j) z *= Int(run_part) * j;
    };
    for (int p : mu.parts()) {
        if (p == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = p;
            run_len = 1;
        }
    }
    flush();
    return factorial(static_cast<unsigned long>(mu.n())) / z;
}

Int hook_product(const Partition& lambda) {
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    Int h = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = conj.part(j) - static_cast<int>(i) - 1;
            h *= arm + leg + 1;
        }
    }
    return h;
}

Int irrep_dimension(const Partition& lambda) {
    return factorial(static_cast<unsigned long>(lambda.n())) / hook_product(lambda);
}

Int count_p_regular_elements(int n, long long p) {
    if (n < 1) throw std::invalid_argument("count_p_regular_elements: n must be positive");
    Int total = 0;
    for (const Partition& mu : enumerate_partitions(n))
        if (!mu.has_part_divisible_by(p)) total += class_size(mu);
    return total;
}

int class_sign(const Partition& mu) {
    return (mu.n() - mu.rows()) % 2 == 0 ? 1 : -1;
}

}  // namespace syngular
