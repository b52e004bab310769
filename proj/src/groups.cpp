#include "syngular/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace syngular {

namespace {

// generators for the block of 2^h consecutive symbols starting at `start`
void sylow_block(int started, int h, std::vector<Perm>& out, int degree) {
    if (h == 0) return;
    int half = 1 << (h - 1);
    sylow_block(started, h - 1, out, degree);
    sylow_block(started + half, h - 1, out, degree);
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    for (int i = started; i < started + half; ++i) {
        img[static_cast<size_t>(i - 1)] = i + half;
        img[static_cast<size_t>(i + half - 1)] = i;
    }
    out.push_back(Perm(std::move(img)));
}

}  // namespace

std::vector<Perm> sylow2_generators(int n) {
    if (n < 1) throw std::invalid_argument("sylow2_generators: n must be positive");
    std::vector<Perm> gens;
    int start = 1;
    for (int h = 30; h >= 0; --h) {
        if (n & (1 << h)) {
            sylow_block(start, h, gens, n);
            start += 1 << h;
        }
    }
    return gens;
}

PermGroup closure(int degree, const std::vector<Perm>& generators, size_t element_budget) {
    for (const Perm& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");
    PermGroup grp;
    grp.degree = degree;
    grp.generators = generators;
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> frontier;
    Perm id = Perm::identity(degree);
    seen.insert(id);
    grp.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm e = std::move(frontier.front());
        frontier.pop_front();
        for (const Perm& g : generators) {
            Perm prod = compose(e, g);
            if (seen.insert(prod).second) {
                if (grp.elements.size() >= element_budget)
                    throw std::runtime_error("closure: element budget exceeded");
                grp.elements.push_back(prod);
                frontier.push_back(std::move(prod));
            }
        }
    }
    return grp;
}

long long legendre_exponent(long long n, long long p) {
    if (p < 2) throw std::invalid_argument("legendre_exponent: p must be at least 2");
    long long e = 0;
    for (long long q = p; q <= n; q *= p) {
        e += n / q;
        if (q > n / p) break;  // avoid overflow on the next multiply
    }
    return e;
}

bool verify_p_power_orders(const PermGroup& group, long long p) {
    for (const Perm& g : group.elements) {
        long long ord = perm_order(g);
        while (ord % p == 0) ord /= p;
        if (ord != 1) return false;
    }
    return true;
}

PermGroup young_subgroup_stabilizer(int n, int fixed_point) {
    if (fixed_point < 1 || fixed_point > n)
        throw std::invalid_argument("young_subgroup_stabilizer: point out of range");
    PermGroup grp;
    grp.degree = n;
    std::vector<int> others;
    for (int v = 1; v <= n; ++v)
        if (v != fixed_point) others.push_back(v);
    std::vector<int> target = others;
    do {
        std::vector<int> img(static_cast<size_t>(n));
        img[static_cast<size_t>(fixed_point - 1)] = fixed_point;
        for (size_t i = 0; i < others.size(); ++i)
            img[static_cast<size_t>(others[i] - 1)] = target[i];
        grp.elements.push_back(Perm(std::move(img)));
    } while (std::next_permutation(target.begin(), target.end()));
    std::sort(grp.elements.begin(), grp.elements.end());
    // identity first, rest in lexicographic image order (identity is
    // lexicographically least among point stabilizers)
    return grp;
}

FpMatrix FpMatrix::identity(int n, long long p) {
    FpMatrix m;
    m.n = n;
    m.p = p;
    m.e.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
    if (a.n != b.n || a.p != b.p) throw std::invalid_argument("mat_mul: shape or modulus mismatch");
    FpMatrix c;
    c.n = a.n;
    c.p = a.p;
    c.e.assign(a.e.size(), 0);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            long long aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % a.p;
        }
    return c;
}

namespace {

long long mod_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

}  // namespace

bool mat_invertible(const FpMatrix& m) {
    FpMatrix a = m;
    int rank = 0;
    for (int col = 0; col < a.n && rank < a.n; ++col) {
        int piv = -1;
        for (int r = rank; r < a.n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        for (int j = 0; j < a.n; ++j) std::swap(a.at(piv, j), a.at(rank, j));
        long long inv = mod_inverse(a.at(rank, col), a.p);
        for (int r = rank + 1; r < a.n; ++r) {
            long long f = a.at(r, col) * inv % a.p;
            if (!f) continue;
            for (int j = col; j < a.n; ++j)
                a.at(r, j) = ((a.at(r, j) - f * a.at(rank, j)) % a.p + a.p) % a.p;
        }
        ++rank;
    }
    return rank == m.n;
}

FpMatrix mat_inverse(const FpMatrix& m) {
    FpMatrix a = m;
    FpMatrix inv = FpMatrix::identity(m.n, m.p);
    for (int col = 0; col < a.n; ++col) {
        int piv = -1;
        for (int r = col; r < a.n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("mat_inverse: singular matrix");
        for (int j = 0; j < a.n; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        long long f = mod_inverse(a.at(col, col), a.p);
        for (int j = 0; j < a.n; ++j) {
            a.at(col, j) = a.at(col, j) * f % a.p;
            inv.at(col, j) = inv.at(col, j) * f % a.p;
        }
        for (int r = 0; r < a.n; ++r) {
            if (r == col) continue;
            long long g = a.at(r, col);
            if (!g) continue;
            for (int j = 0; j < a.n; ++j) {
                a.at(r, j) = ((a.at(r, j) - g * a.at(col, j)) % a.p + a.p) % a.p;
                inv.at(r, j) = ((inv.at(r, j) - g * inv.at(col, j)) % a.p + a.p) % a.p;
            }
        }
    }
    return inv;
}

std::vector<FpMatrix> gl_enumerate(int n, long long p, size_t candidate_budget) {
    double cells = static_cast<double>(n) * n;
    double total = std::pow(static_cast<double>(p), cells);
    if (total > static_cast<double>(candidate_budget))
        throw std::runtime_error("gl_enumerate: candidate budget exceeded");
    std::vector<FpMatrix> out;
    FpMatrix m;
    m.n = n;
    m.p = p;
    m.e.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    while (true) {
        if (mat_invertible(m)) out.push_back(m);
        // odometer increment
        size_t i = 0;
        while (i < m.e.size()) {
            if (++m.e[i] < p) break;
            m.e[i] = 0;
            ++i;
        }
        if (i == m.e.size()) break;
    }
    return out;
}

Int gl_order(int n, const Int& q) {
    if (q < 2) throw std::invalid_argument("gl_order: q must be at least 2");
    Int order = int_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) order *= int_pow(q, static_cast<unsigned long>(i)) - 1;
    return order;
}

long long matrix_order(const FpMatrix& m) {
    if (!mat_invertible(m)) throw std::invalid_argument("matrix_order: singular matrix");
    FpMatrix id = FpMatrix::identity(m.n, m.p);
    FpMatrix acc = m;
    long long k = 1;
    while (!(acc == id)) {
        acc = mat_mul(acc, m);
        ++k;
    }
    return k;
}

}  // namespace syngular
