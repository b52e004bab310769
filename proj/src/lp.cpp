#include "syngular/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "syngular/groups.hpp"

namespace syngular {

RationalLP build_steinberg_lp(MnCache& cache, int n, long long p) {
    if (n > cache.ceiling())
        throw std::invalid_argument("build_steinberg_lp: n exceeds the character-table ceiling");
    RationalLP lp;
    std::vector<Partition> shapes = enumerate_partitions(n);
    lp.num_vars = shapes.size();
    lp.var_shapes = shapes;

    Int degree = int_pow(Int(static_cast<long>(p)), static_cast<unsigned long>(legendre_exponent(n, p)));

    // one vanishing row per p-singular class
    for (const Partition& mu : shapes) {
        if (!mu.has_part_divisible_by(p)) continue;
        std::vector<Rat> row;
        row.reserve(lp.num_vars);
        for (const Partition& lambda : shapes) row.emplace_back(cache.value(lambda, mu));
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(0);
    }
    // normalization <f,1> = 1, i.e. c_{(n)} = 1
    {
        std::vector<Rat> row(lp.num_vars, Rat(0));
        row[0] = 1;  // (n) is first in enumerate order
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    // degree row f(1) = |P|
    {
        std::vector<Rat> row;
        row.reserve(lp.num_vars);
        for (const Partition& lambda : shapes) row.emplace_back(irrep_dimension(lambda));
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(degree);
    }
    // c_lambda <= |P| / dim(lambda) follows from the degree row
    for (const Partition& lambda : shapes) {
        Rat ub(degree, irrep_dimension(lambda));
        ub.canonicalize();
        lp.var_upper_bounds.push_back(ub);
    }
    return lp;
}

bool check_witness(const RationalLP& lp, const std::vector<Rat>& x) {
    if (x.size() != lp.num_vars) return false;
    for (const Rat& v : x)
        if (v < 0) return false;
    if (!lp.var_upper_bounds.empty())
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j] > lp.var_upper_bounds[j]) return false;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        Rat acc(0);
        for (size_t j = 0; j < lp.num_vars; ++j) acc += lp.rows[i][j] * x[j];
        if (acc != lp.rhs[i]) return false;
    }
    return true;
}

bool check_farkas(const RationalLP& lp, const std::vector<Rat>& y) {
    if (y.size() != lp.rows.size()) return false;
    for (size_t j = 0; j < lp.num_vars; ++j) {
        Rat acc(0);
        for (size_t i = 0; i < lp.rows.size(); ++i) acc += y[i] * lp.rows[i][j];
        if (acc > 0) return false;
    }
    Rat rhs(0);
    for (size_t i = 0; i < lp.rows.size(); ++i) rhs += y[i] * lp.rhs[i];
    return rhs > 0;
}

namespace {

// Dense phase-1 tableau. Columns: num_vars originals, then one artificial
// per row, then the rhs. The objective row tracks z_j = c_B B^{-1} A_j -
// c_j for the artificial-sum objective.
struct Tableau {
    size_t m, nvars, ncols;
    std::vector<std::vector<Rat>> t;  // m+1 rows, objective row last
    std::vector<size_t> basis;        // basic column per row
    std::vector<int> flipped;         // original row sign flips

    explicit Tableau(const RationalLP& lp) {
        m = lp.rows.size();
        nvars = lp.num_vars;
        ncols = nvars + m + 1;
        t.assign(m + 1, std::vector<Rat>(ncols, Rat(0)));
        basis.resize(m);
        flipped.assign(m, 1);
        for (size_t i = 0; i < m; ++i) {
            int sign = lp.rhs[i] < 0 ? -1 : 1;
            flipped[i] = sign;
            for (size_t j = 0; j < nvars; ++j) t[i][j] = sign * lp.rows[i][j];
            t[i][nvars + i] = 1;
            t[i][ncols - 1] = sign * lp.rhs[i];
            basis[i] = nvars + i;
        }
        // objective row: sum of constraint rows over original columns
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < nvars; ++j) t[m][j] += t[i][j];
            t[m][ncols - 1] += t[i][ncols - 1];
        }
    }

    void pivot(size_t row, size_t col) {
        Rat inv = 1 / t[row][col];
        for (size_t j = 0; j < ncols; ++j) t[row][j] *= inv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == row) continue;
            Rat f = t[i][col];
            if (f == 0) continue;
            for (size_t j = 0; j < ncols; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = lowest-index column with positive reduced
    // cost; leaving = min ratio, ties by lowest basic variable index.
    void solve() {
        while (true) {
            size_t enter = ncols - 1;
            for (size_t j = 0; j < ncols - 1; ++j)
                if (t[m][j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols - 1) return;  // optimal
            size_t leave = m;
            Rat best_ratio;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = t[i][ncols - 1] / t[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m)
                throw std::logic_error("simplex: unbounded phase-1 objective");
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPOutcome solve_feasibility(const RationalLP& lp) {
    LPOutcome out;
    Tableau tab(lp);
    tab.solve();
    const Rat& value = tab.t[tab.m][tab.ncols - 1];
    if (value == 0) {
        out.status = LPStatus::Feasible;
        out.witness.assign(lp.num_vars, Rat(0));
        for (size_t i = 0; i < tab.m; ++i)
            if (tab.basis[i] < lp.num_vars) out.witness[tab.basis[i]] = tab.t[i][tab.ncols - 1];
        if (!check_witness(lp, out.witness))
            throw std::logic_error("solve_feasibility: witness failed substitution check");
    } else {
        out.status = LPStatus::Infeasible;
        // multipliers: pi_i = z_{art_i} + 1, undoing the sign flips
        out.farkas.resize(tab.m);
        for (size_t i = 0; i < tab.m; ++i)
            out.farkas[i] = tab.flipped[i] * (tab.t[tab.m][lp.num_vars + i] + 1);
        if (!check_farkas(lp, out.farkas))
            throw std::logic_error("solve_feasibility: Farkas certificate failed verification");
    }
    return out;
}

namespace {

// integrality is demanded only of the leading `nint` components; slacks
// introduced by bound and branch rows are continuous
bool all_integral(const std::vector<Rat>& x, size_t nint) {
    for (size_t j = 0; j < nint && j < x.size(); ++j)
        if (!is_integral(x[j])) return false;
    return true;
}

// index of the most fractional leading component, -1 when integral
int most_fractional(const std::vector<Rat>& x, size_t nint) {
    int best = -1;
    Rat best_dist(0);
    for (size_t j = 0; j < nint && j < x.size(); ++j) {
        if (is_integral(x[j])) continue;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), x[j].get_num().get_mpz_t(), x[j].get_den().get_mpz_t());
        Rat frac = x[j] - Rat(fl);
        Rat dist = Rat(1) - frac;
        if (frac < dist) dist = frac;
        if (best < 0 || dist > best_dist) {
            best = static_cast<int>(j);
            best_dist = dist;
        }
    }
    return best;
}

bool branch(const RationalLP& lp, size_t nint, int depth_left, LPOutcome& out) {
    LPOutcome relax = solve_feasibility(lp);
    ++out.nodes;
    if (relax.status == LPStatus::Infeasible) return true;  // subtree settled
    if (all_integral(relax.witness, nint)) {
        out.status = LPStatus::Feasible;
        out.witness = relax.witness;
        return true;
    }
    if (depth_left <= 0) {
        out.status = LPStatus::Unknown;
        return false;
    }
    int j = most_fractional(relax.witness, nint);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), relax.witness[static_cast<size_t>(j)].get_num().get_mpz_t(),
               relax.witness[static_cast<size_t>(j)].get_den().get_mpz_t());

    // x_j <= floor via x_j + s = floor with fresh slack s >= 0, and
    // x_j >= floor + 1 via x_j - s = floor + 1
    bool complete = true;
    for (int side = 0; side < 2; ++side) {
        RationalLP sub = lp;
        for (auto& row : sub.rows) row.emplace_back(0);
        std::vector<Rat> row(sub.num_vars + 1, Rat(0));
        row[static_cast<size_t>(j)] = 1;
        row[sub.num_vars] = side == 0 ? Rat(1) : Rat(-1);
        sub.rhs.emplace_back(side == 0 ? Rat(fl) : Rat(fl + 1));
        sub.rows.push_back(std::move(row));
        sub.num_vars += 1;
        bool settled = branch(sub, nint, depth_left - 1, out);
        if (out.status == LPStatus::Feasible) {
            out.witness.resize(lp.num_vars);  // strip the slack component
            return true;
        }
        complete = complete && settled;
    }
    if (complete) out.status = LPStatus::Infeasible;
    return complete;
}

}  // namespace

LPOutcome solve_integer_feasibility(const RationalLP& lp, int depth_budget) {
    if (lp.var_upper_bounds.size() != lp.num_vars)
        throw std::invalid_argument("solve_integer_feasibility: needs variable upper bounds");
    // bound rows x_j + s_j = ub keep every branching chain finite
    RationalLP bounded = lp;
    size_t base = lp.num_vars;
    bounded.num_vars += lp.num_vars;
    for (auto& row : bounded.rows) row.resize(bounded.num_vars, Rat(0));
    for (size_t j = 0; j < lp.num_vars; ++j) {
        std::vector<Rat> row(bounded.num_vars, Rat(0));
        row[j] = 1;
        row[base + j] = 1;
        bounded.rows.push_back(std::move(row));
        bounded.rhs.push_back(lp.var_upper_bounds[j]);
    }
    bounded.var_shapes.clear();
    bounded.var_upper_bounds.clear();

    LPOutcome out;
    out.status = LPStatus::Infeasible;  // overwritten unless every branch settles infeasible
    bool settled = branch(bounded, lp.num_vars, depth_budget, out);
    if (out.status == LPStatus::Feasible) {
        out.witness.resize(lp.num_vars);
        if (!all_integral(out.witness, lp.num_vars))
            throw std::logic_error("solve_integer_feasibility: non-integral witness escaped");
        if (!check_witness(lp, out.witness))
            throw std::logic_error("solve_integer_feasibility: witness failed substitution");
        return out;
    }
    if (!settled) {
        out.status = LPStatus::Unknown;
        return out;
    }
    // integral infeasibility; when even the relaxation is infeasible the
    // LP-level Farkas certificate is attached
    LPOutcome relax = solve_feasibility(lp);
    if (relax.status == LPStatus::Infeasible) out.farkas = relax.farkas;
    return out;
}

}  // namespace syngular
