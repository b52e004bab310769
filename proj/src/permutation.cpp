#include "syngular/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace syngular {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Perm: image list is not a bijection of {1..n}");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[static_cast<size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

size_t PermHash::operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
        h ^= static_cast<size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

Perm compose(const Perm& sigma, const Perm& pi) {
    if (sigma.degree() != pi.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(static_cast<size_t>(sigma.degree()));
    for (int x = 1; x <= sigma.degree(); ++x) img[static_cast<size_t>(x - 1)] = sigma(pi(x));
    return Perm(std::move(img));
}

Partition cycle_type(const Perm& sigma) {
    const int n = sigma.degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> lens;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<size_t>(s - 1)]) continue;
        int len = 0;
        for (int x = s; !seen[static_cast<size_t>(x - 1)]; x = sigma(x)) {
            seen[static_cast<size_t>(x - 1)] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

long long perm_order(const Perm& sigma) {
    Partition type = cycle_type(sigma);
    long long ord = 1;
    for (int len : type.parts()) ord = std::lcm(ord, static_cast<long long>(len));
    return ord;
}

bool is_p_singular(const Perm& sigma, long long p) {
    return cycle_type(sigma).has_part_divisible_by(p);
}

bool is_reversing_pair(const Perm& sigma, const Perm& pi) {
    if (sigma.degree() != pi.degree())
        throw std::invalid_argument("is_reversing_pair: degree mismatch");
    // sigma(i) = pi(j), sigma(j) = pi(i) for some i != j is exactly a
    // 2-cycle in pi^{-1} sigma.
    return cycle_type(compose(pi.inverse(), sigma)).has_part_equal(2);
}

CycleDecomposition canonical_order(const Perm& sigma) {
    const int n = sigma.degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<size_t>(s - 1)]) continue;
        std::vector<int> cyc;
        for (int x = s; !seen[static_cast<size_t>(x - 1)]; x = sigma(x)) {
            seen[static_cast<size_t>(x - 1)] = 1;
            cyc.push_back(x);
        }
        // largest symbol first
        auto mx = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mx, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return CycleDecomposition{std::move(cycles)};
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& cyc : cycles) {
        if (cyc.empty()) throw std::invalid_argument("perm_from_cycles: empty cycle");
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > n || seen[static_cast<size_t>(a - 1)])
                throw std::invalid_argument("perm_from_cycles: cycles do not partition {1..n}");
            seen[static_cast<size_t>(a - 1)] = 1;
            img[static_cast<size_t>(a - 1)] = b;
        }
    }
    for (char c : seen)
        if (!c) throw std::invalid_argument("perm_from_cycles: cycles do not cover {1..n}");
    return Perm(std::move(img));
}

Perm odd_merge_forward(const Perm& sigma, const Bitstring& b) {
    CycleDecomposition cd = canonical_order(sigma);
    auto& cycles = cd.cycles;
    for (const auto& c : cycles)
        if (c.size() % 2 == 0)
            throw std::invalid_argument("odd_merge_forward: sigma has an even cycle");
    if (b.size() + 1 != cycles.size() && !(cycles.empty() && b.empty()))
        throw std::invalid_argument("odd_merge_forward: bitstring length mismatch");
    for (size_t i = 0; i + 1 < cycles.size(); ++i) {
        if (!b[i]) continue;
        // current state: cycle i cannot be empty here, it only sheds a
        // symbol through its own bit
        int x = cycles[i].back();
        cycles[i].pop_back();
        cycles[i + 1].push_back(x);
    }
    std::vector<std::vector<int>> survivors;
    for (auto& c : cycles)
        if (!c.empty()) survivors.push_back(std::move(c));
    return perm_from_cycles(sigma.degree(), survivors);
}

std::pair<Perm, Bitstring> odd_merge_inverse(const Perm& pi) {
    CycleDecomposition cd = canonical_order(pi);
    const auto& D = cd.cycles;
    const int k = static_cast<int>(D.size());

    std::vector<int> evens;
    for (int i = 0; i < k; ++i)
        if (D[static_cast<size_t>(i)].size() % 2 == 0) evens.push_back(i);

    // Each even cycle of pi either lost its own last symbol to the next
    // even cycle (donor) or absorbed a foreign symbol at its end
    // (receiver). A receiver whose donor was a singleton stands alone;
    // the singleton is re-created in canonical position. Scanning right
    // to left, the comparison of the foreign symbol against the previous
    // even cycle's leading symbol decides the case.
    std::vector<int> role(static_cast<size_t>(k), 0);  // 1 donor, 2 receiver
    std::vector<int> partner(static_cast<size_t>(k), -1);
    std::vector<std::pair<int, int>> lone;  // (receiver D-index, vanished symbol)
    for (int t = static_cast<int>(evens.size()) - 1; t >= 0; --t) {
        int cur = evens[static_cast<size_t>(t)];
        int x = D[static_cast<size_t>(cur)].back();
        if (t > 0 && x < D[static_cast<size_t>(evens[static_cast<size_t>(t - 1)])][0]) {
            int prev = evens[static_cast<size_t>(t - 1)];
            role[static_cast<size_t>(prev)] = 1;
            partner[static_cast<size_t>(prev)] = cur;
            role[static_cast<size_t>(cur)] = 2;
            --t;
        } else {
            role[static_cast<size_t>(cur)] = 2;
            lone.emplace_back(cur, x);
        }
    }

    struct Src {
        std::vector<int> cyc;
        int receiver;  // D-index this source donates into, or -1
    };
    std::vector<Src> src;
    src.reserve(static_cast<size_t>(k) + lone.size());
    for (int i = 0; i < k; ++i) {
        std::vector<int> c = D[static_cast<size_t>(i)];
        if (role[static_cast<size_t>(i)] == 2) c.pop_back();
        int recv = -1;
        if (role[static_cast<size_t>(i)] == 1) {
            c.push_back(D[static_cast<size_t>(partner[static_cast<size_t>(i)])].back());
            recv = partner[static_cast<size_t>(i)];
        }
        src.push_back(Src{std::move(c), recv});
    }
    for (const auto& [recv, x] : lone) {
        auto it = src.begin();
        while (it != src.end() && it->cyc[0] < x) ++it;
        src.insert(it, Src{{x}, recv});
    }

    const int m = static_cast<int>(src.size());
    Bitstring bits(static_cast<size_t>(std::max(0, m - 1)), 0);
    // a donor at source position j feeding the receiver at position q
    // corresponds to the run of ones b_j .. b_{q-1}
    for (int j = 0; j < m; ++j) {
        int recv = src[static_cast<size_t>(j)].receiver;
        if (recv < 0) continue;
        int lead = D[static_cast<size_t>(recv)][0];  // leading symbols survive the merge
        int q = -1;
        for (int t = 0; t < m; ++t)
            if (src[static_cast<size_t>(t)].cyc[0] == lead) {
                q = t;
                break;
            }
        for (int t = j; t < q; ++t) bits[static_cast<size_t>(t)] = 1;
    }

    std::vector<std::vector<int>> cycles;
    cycles.reserve(src.size());
    for (auto& s : src) cycles.push_back(std::move(s.cyc));
    return {perm_from_cycles(pi.degree(), cycles), bits};
}

Perm even_merge_forward(const Perm& sigma, const Bitstring& b) {
    const int n = sigma.degree();
    if (n % 2 != 0) throw std::invalid_argument("even_merge_forward: degree must be even");
    CycleDecomposition cd = canonical_order(sigma);
    for (const auto& c : cd.cycles)
        if (c.size() % 2 != 0)
            throw std::invalid_argument("even_merge_forward: sigma has an odd cycle");
    if (b.size() != cd.cycles.size())
        throw std::invalid_argument("even_merge_forward: bitstring length mismatch");

    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (size_t i = 0; i < cd.cycles.size(); ++i) {
        std::vector<int> c = cd.cycles[i];
        if (b[i]) std::swap(c[0], c[1]);
        w.insert(w.end(), c.begin(), c.end());
    }
    // re-cut the word at its left-to-right maxima
    std::vector<std::vector<int>> cycles;
    int run_max = 0;
    for (int x : w) {
        if (x > run_max) {
            cycles.emplace_back();
            run_max = x;
        }
        cycles.back().push_back(x);
    }
    return perm_from_cycles(n, cycles);
}

std::pair<Perm, Bitstring> even_merge_inverse(const Perm& pi) {
    const int n = pi.degree();
    if (n % 2 != 0) throw std::invalid_argument("even_merge_inverse: degree must be even");
    CycleDecomposition cd = canonical_order(pi);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (const auto& c : cd.cycles) w.insert(w.end(), c.begin(), c.end());

    // Blocks are even length with their maximum first (bit 0) or second
    // (bit 1) and carry ascending maxima, so the last block is found from
    // the position of the prefix maximum; the suffix-length parity picks
    // the unique even-length cut.
    std::vector<std::vector<int>> cycles;
    Bitstring bits;
    int end = n;
    while (end > 0) {
        int p = 0;
        for (int i = 1; i < end; ++i)
            if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(p)]) p = i;
        int start;
        uint8_t bit;
        if ((end - p) % 2 == 0) {
            start = p;
            bit = 0;
        } else {
            start = p - 1;
            bit = 1;
        }
        std::vector<int> block(w.begin() + start, w.begin() + end);
        if (bit) std::swap(block[0], block[1]);
        cycles.push_back(std::move(block));
        bits.push_back(bit);
        end = start;
    }
    std::reverse(cycles.begin(), cycles.end());
    std::reverse(bits.begin(), bits.end());
    return {perm_from_cycles(n, cycles), bits};
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Perm> enumerate_by_cycle_parity(int n, CycleParity parity) {
    std::vector<Perm> out;
    if (parity == CycleParity::Even && n % 2 != 0) return out;
    for (Perm& p : all_perms(n)) {
        Partition t = cycle_type(p);
        bool ok = parity == CycleParity::Odd ? t.all_parts_odd() : t.all_parts_even();
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

std::string format_perm(const Perm& p) {
    std::string s = "[";
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(p(i));
    }
    return s + "]";
}

Perm parse_perm(const std::string& text, int degree) {
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&]() {
        skip_ws();
        size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) throw std::invalid_argument("parse_perm: expected integer in '" + text + "'");
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        return v;
    };
    skip_ws();
    if (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<int> img;
        skip_ws();
        if (i < text.size() && text[i] == ']') {
            ++i;
        } else {
            while (true) {
                img.push_back(read_int());
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ']') {
                    ++i;
                    break;
                }
                throw std::invalid_argument("parse_perm: malformed image list '" + text + "'");
            }
        }
        if (degree >= 0 && static_cast<int>(img.size()) != degree)
            throw std::invalid_argument("parse_perm: degree mismatch");
        return Perm(std::move(img));
    }
    if (i < text.size() && text[i] == '(') {
        if (degree < 0) throw std::invalid_argument("parse_perm: cycle form requires a degree");
        std::vector<std::vector<int>> cycles;
        while (true) {
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] != '(') throw std::invalid_argument("parse_perm: expected '('");
            ++i;
            std::vector<int> cyc;
            while (true) {
                cyc.push_back(read_int());
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                if (i < text.size()) continue;  // space-separated symbols
                throw std::invalid_argument("parse_perm: unterminated cycle");
            }
            cycles.push_back(std::move(cyc));
        }
        // symbols not mentioned are fixed points
        std::vector<char> used(static_cast<size_t>(degree), 0);
        for (const auto& c : cycles)
            for (int v : c) {
                if (v < 1 || v > degree || used[static_cast<size_t>(v - 1)])
                    throw std::invalid_argument("parse_perm: bad cycle symbols");
                used[static_cast<size_t>(v - 1)] = 1;
            }
        for (int v = 1; v <= degree; ++v)
            if (!used[static_cast<size_t>(v - 1)]) cycles.push_back({v});
        return perm_from_cycles(degree, cycles);
    }
    throw std::invalid_argument("parse_perm: unrecognized format '" + text + "'");
}

}  // namespace syngular
