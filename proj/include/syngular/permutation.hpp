#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syngular/partition.hpp"

namespace syngular {

/// Permutation of {1..n}, stored as the image list: images()[i-1] is the
/// image of i. 1-indexed everywhere, including serialization.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

struct PermHash {
    size_t operator()(const Perm& p) const;
};

/// (sigma . pi)(x) = sigma(pi(x)): right factor applied first. This
/// convention is fixed repo-wide; the "difference" of sigma and pi is
/// compose(sigma, pi.inverse()).
Perm compose(const Perm& sigma, const Perm& pi);

Partition cycle_type(const Perm& sigma);

/// lcm of the cycle lengths.
long long perm_order(const Perm& sigma);

/// True iff the order of sigma is divisible by p, equivalently some cycle
/// length is divisible by p.
bool is_p_singular(const Perm& sigma, long long p);

/// True iff there exist i != j with sigma(i) = pi(j) and sigma(j) = pi(i),
/// equivalently the difference contains a cycle of length exactly 2.
bool is_reversing_pair(const Perm& sigma, const Perm& pi);

/// Disjoint cycles in canonical form: each cycle lists its largest symbol
/// first; cycles sorted ascending by first symbol. Fixed points appear as
/// singleton cycles.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
};

CycleDecomposition canonical_order(const Perm& sigma);

/// Rebuild a permutation of degree n from disjoint cycles covering {1..n}.
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);

using Bitstring = std::vector<uint8_t>;

/// Cycle-merging bijection for permutations with only odd cycles.
///
/// sigma must have all cycles odd; b has one bit per internal cycle
/// boundary (m-1 bits for m cycles). Bits are processed left to right on
/// the current state: when b[i] = 1 the last symbol of the (possibly
/// already modified) i-th cycle moves to the end of the (i+1)-th; a cycle
/// emptied this way disappears. Ranging over all (sigma, b) the outputs
/// hit S_n exactly once, which certifies n! = sum 2^{#cyc(sigma)-1}.
Perm odd_merge_forward(const Perm& sigma, const Bitstring& b);

/// Unique preimage under odd_merge_forward, reconstructed by scanning the
/// even-length cycles of pi right to left and re-inserting vanished
/// singletons in canonical position.
std::pair<Perm, Bitstring> odd_merge_inverse(const Perm& pi);

/// Merging bijection for permutations with only even cycles (n even),
/// one bit per cycle. A set bit swaps the leading two symbols of that
/// cycle's canonical word; the concatenated word, re-cut at its
/// left-to-right maxima, is the output. Ranging over all (sigma, b) the
/// outputs hit S_n exactly once, certifying n! = sum 2^{#cyc(sigma)}.
Perm even_merge_forward(const Perm& sigma, const Bitstring& b);

std::pair<Perm, Bitstring> even_merge_inverse(const Perm& pi);

enum class CycleParity { Odd, Even };

/// All permutations of S_n whose cycles all have the requested parity,
/// in lexicographic image order.
std::vector<Perm> enumerate_by_cycle_parity(int n, CycleParity parity);

/// All of S_n in lexicographic image order.
std::vector<Perm> all_perms(int n);

std::string format_perm(const Perm& p);  // "[2,1,4,3]"

/// Accepts the image-list form "[2,1,4,3]" or cycle form "(2 1)(4 3)".
/// Cycle form requires the degree; symbols not mentioned are fixed.
Perm parse_perm(const std::string& text, int degree = -1);

}  // namespace syngular
