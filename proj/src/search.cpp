#include "syngular/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace syngular {

bool pair_allowed(const FamilyConstraint& c, const Partition& diff_type) {
    switch (c.kind) {
        case ConstraintKind::PSingular:
            return diff_type.has_part_divisible_by(c.p);
        case ConstraintKind::EvenCycleIntersecting:
            return diff_type.has_part_divisible_by(2);
        case ConstraintKind::OddCycleIntersecting: {
            for (int part : diff_type.parts())
                if (part % 2 != 0) return true;
            return false;
        }
        case ConstraintKind::Reversing:
            return diff_type.has_part_equal(2);
        case ConstraintKind::OddtownPermutation:
            // pairwise condition: even-order difference
            return diff_type.has_part_divisible_by(2);
    }
    return false;
}

bool member_allowed(const FamilyConstraint& c, const Perm& g) {
    if (c.kind == ConstraintKind::OddtownPermutation) return perm_order(g) % 2 == 1;
    return true;
}

bool verify_family(const std::vector<Perm>& elements, const FamilyConstraint& c) {
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].degree() != elements[0].degree())
            throw std::invalid_argument("verify_family: mixed degrees");
        if (!member_allowed(c, elements[i])) return false;
        for (size_t j = i + 1; j < elements.size(); ++j) {
            Partition diff = cycle_type(compose(elements[i], elements[j].inverse()));
            if (!pair_allowed(c, diff)) return false;
        }
    }
    return true;
}

namespace {

class CliqueSolver {
public:
    CliqueSolver(const BitGraph& g, unsigned long long budget) : g_(g), budget_(budget) {
        size_t depths = static_cast<size_t>(g.nv) + 2;
        size_t span = depths * static_cast<size_t>(g.words);
        next_pool_.assign(span, 0);
        live_pool_.assign(span, 0);
        rest_pool_.assign(span, 0);
        cls_pool_.assign(span, 0);
        color_order_.assign(depths * static_cast<size_t>(g.nv + 1), 0);
        color_of_.assign(color_order_.size(), 0);
        current_.reserve(static_cast<size_t>(g.nv));
    }

    CliqueResult run(const std::vector<int>& seed) {
        best_ = seed;
        std::vector<uint64_t> all(static_cast<size_t>(g_.words), 0);
        for (int v = 0; v < g_.nv; ++v)
            all[static_cast<size_t>(v / 64)] |= 1ull << (v % 64);
        expand(all.data(), 0);
        CliqueResult res;
        res.best = best_;
        res.nodes = nodes_;
        res.budget_exhausted = exhausted_;
        return res;
    }

private:
    uint64_t* slot(std::vector<uint64_t>& pool, int depth) {
        return pool.data() + static_cast<size_t>(depth) * g_.words;
    }

    // Greedy sequential coloring in index order; emits vertices sorted by
    // color ascending. Color classes are independent in the compatibility
    // graph, so a vertex's color bounds any clique inside it and its
    // predecessors.
    int color_sort(const uint64_t* cand, int* order, int* colors, int depth) {
        uint64_t* rest = slot(rest_pool_, depth);
        uint64_t* cls = slot(cls_pool_, depth);
        std::copy(cand, cand + g_.words, rest);
        int count = 0;
        int color = 0;
        while (true) {
            bool any = false;
            for (int i = 0; i < g_.words; ++i)
                if (rest[i]) {
                    any = true;
                    break;
                }
            if (!any) break;
            ++color;
            std::copy(rest, rest + g_.words, cls);
            for (int w = 0; w < g_.words; ++w) {
                while (cls[w]) {
                    int b = __builtin_ctzll(cls[w]);
                    int v = w * 64 + b;
                    cls[w] &= cls[w] - 1;
                    order[count] = v;
                    colors[count] = color;
                    ++count;
                    rest[w] &= ~(1ull << b);
                    const uint64_t* adj = g_.row(v);
                    for (int i = w; i < g_.words; ++i) cls[i] &= ~adj[i];
                }
            }
        }
        return count;
    }

    void expand(const uint64_t* cand, int depth) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (current_.size() > best_.size()) best_ = current_;

        int* order = color_order_.data() + static_cast<size_t>(depth) * (g_.nv + 1);
        int* colors = color_of_.data() + static_cast<size_t>(depth) * (g_.nv + 1);
        int count = color_sort(cand, order, colors, depth);
        if (count == 0) return;

        uint64_t* live = slot(live_pool_, depth);
        uint64_t* next = slot(next_pool_, depth);
        std::copy(cand, cand + g_.words, live);
        for (int i = count - 1; i >= 0 && !exhausted_; --i) {
            if (current_.size() + static_cast<size_t>(colors[i]) <= best_.size()) return;
            int v = order[i];
            const uint64_t* adj = g_.row(v);
            for (int w = 0; w < g_.words; ++w) next[w] = live[w] & adj[w];
            current_.push_back(v);
            expand(next, depth + 1);
            current_.pop_back();
            live[v / 64] &= ~(1ull << (v % 64));
        }
    }

    const BitGraph& g_;
    unsigned long long budget_;
    unsigned long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> current_, best_;
    std::vector<uint64_t> next_pool_, live_pool_, rest_pool_, cls_pool_;
    std::vector<int> color_order_, color_of_;
};

}  // namespace

CliqueResult max_clique(const BitGraph& g, const std::vector<int>& seed,
                        unsigned long long budget) {
    for (size_t i = 0; i < seed.size(); ++i)
        for (size_t j = i + 1; j < seed.size(); ++j)
            if (!g.adjacent(seed[i], seed[j]))
                throw std::invalid_argument("max_clique: seed is not a clique");
    CliqueSolver solver(g, budget);
    return solver.run(seed);
}

SearchReport max_family(std::vector<Perm> vertices, const FamilyConstraint& c,
                        unsigned long long budget, std::vector<Perm> seed) {
    auto t0 = std::chrono::steady_clock::now();
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::erase_if(vertices, [&](const Perm& g) { return !member_allowed(c, g); });
    if (vertices.size() > kExactVertexCeiling)
        throw std::invalid_argument("max_family: vertex count exceeds the exact-mode ceiling");
    if (vertices.empty()) return SearchReport{};

    const int n = vertices[0].degree();
    const int nv = static_cast<int>(vertices.size());

    // memoized cycle type of every ordered difference, as an index into
    // the class list, so the pair predicate is O(1) afterwards
    std::vector<Partition> classes = enumerate_partitions(n);
    std::vector<char> type_ok(classes.size());
    for (size_t t = 0; t < classes.size(); ++t)
        type_ok[t] = pair_allowed(c, classes[t]) ? 1 : 0;

    std::vector<Perm> inverses;
    inverses.reserve(static_cast<size_t>(nv));
    for (const Perm& v : vertices) inverses.push_back(v.inverse());

    BitGraph g(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            Partition diff = cycle_type(compose(vertices[static_cast<size_t>(i)],
                                                inverses[static_cast<size_t>(j)]));
            int idx = partition_index(classes, diff);
            if (type_ok[static_cast<size_t>(idx)]) g.add_edge(i, j);
        }

    std::vector<int> seed_idx;
    for (const Perm& s : seed) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
        if (it == vertices.end() || *it != s)
            throw std::invalid_argument("max_family: seed element outside the vertex set");
        seed_idx.push_back(static_cast<int>(it - vertices.begin()));
    }
    std::sort(seed_idx.begin(), seed_idx.end());

    CliqueResult res = max_clique(g, seed_idx, budget);

    SearchReport rep;
    rep.max_size = static_cast<long long>(res.best.size());
    std::sort(res.best.begin(), res.best.end());
    for (int v : res.best) rep.witness.push_back(vertices[static_cast<size_t>(v)]);
    rep.nodes_explored = res.nodes;
    rep.budget_exhausted = res.budget_exhausted;
    if (!verify_family(rep.witness, c)) throw std::logic_error("max_family: witness failed re-verification");
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SearchReport alpha_p_regular(int n, long long p, unsigned long long budget) {
    std::vector<Perm> seed;
    if (p == 2) seed = closure(n, sylow2_generators(n)).elements;
    return max_family(all_perms(n), FamilyConstraint::p_singular(p), budget, std::move(seed));
}

SearchReport oddtown_max(int n, unsigned long long budget) {
    return max_family(all_perms(n), FamilyConstraint{ConstraintKind::OddtownPermutation, 2},
                      budget);
}

SearchReport reversing_max(int n, unsigned long long budget) {
    return max_family(all_perms(n), FamilyConstraint{ConstraintKind::Reversing, 2}, budget);
}

SearchReport max_family_matrices(const std::vector<FpMatrix>& elements, long long p,
                                 unsigned long long budget, CliqueResult* raw) {
    auto t0 = std::chrono::steady_clock::now();
    const int nv = static_cast<int>(elements.size());
    if (static_cast<size_t>(nv) > kExactVertexCeiling)
        throw std::invalid_argument("max_family_matrices: vertex count exceeds ceiling");
    BitGraph g(nv);
    for (int i = 0; i < nv; ++i) {
        FpMatrix inv_i = mat_inverse(elements[static_cast<size_t>(i)]);
        for (int j = i + 1; j < nv; ++j) {
            FpMatrix diff = mat_mul(elements[static_cast<size_t>(j)], inv_i);
            if (matrix_order(diff) % p == 0) g.add_edge(i, j);
        }
    }
    CliqueResult res = max_clique(g, {}, budget);
    if (raw) *raw = res;
    SearchReport rep;
    rep.max_size = static_cast<long long>(res.best.size());
    rep.nodes_explored = res.nodes;
    rep.budget_exhausted = res.budget_exhausted;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace syngular
