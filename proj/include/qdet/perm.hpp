#pragma once

#include <string>
#include <vector>

#include "qdet/error.hpp"

namespace qdet {

inline constexpr int kDefaultMaxEnum = 8;

// One-line notation of a permutation of {1..n}: p[k-1] is the image of k.
using Permutation = std::vector<int>;

// Direction in which a cycle notation is normalised.
//   left:  the anchor opens the first cycle; each later cycle opens with its
//          minimum and those minima increase left to right.
//   right: mirror image; the anchor closes the last cycle, each earlier cycle
//          closes with its minimum and those minima increase right to left.
enum class CycleOrder { left, right };

/// A permutation written as a product of disjoint cycles, fixed points
/// included as 1-cycles. Each cycle is listed so that walking it left to
/// right follows the permutation (c[0] -> c[1] -> ... -> c[0]).
struct CyclePermutation {
    int n = 0;
    int anchor = 0;
    CycleOrder order = CycleOrder::left;
    std::vector<std::vector<int>> cycles;  // in written order

    int cycle_count() const noexcept { return static_cast<int>(cycles.size()); }

    // (-1)^(n - r), r counting every disjoint cycle.
    int sign() const noexcept { return (n - cycle_count()) % 2 == 0 ? 1 : -1; }

    // Recomposes the cycles into one-line notation.
    Permutation to_permutation() const;

    std::string to_string() const;
};

Permutation identity_permutation(int n);

// All n! permutations in lexicographic one-line order. Refuses n > max_enum.
std::vector<Permutation> enumerate(int n, int max_enum = kDefaultMaxEnum);

// Streaming form of enumerate: calls f(p) for each permutation in the same order.
template <class F>
void for_each_permutation(int n, F&& f, int max_enum = kDefaultMaxEnum);

CyclePermutation left_ordered(const Permutation& sigma, int anchor);
CyclePermutation right_ordered(const Permutation& tau, int anchor);

inline int sign_exponent(const CyclePermutation& p) { return p.sign(); }

// Validates that p is a permutation of {1..n}; throws DimensionError otherwise.
void check_permutation(const Permutation& p);

}  // namespace qdet

#include <algorithm>

namespace qdet {

void check_enumeration_size(int n, int max_enum);

template <class F>
void for_each_permutation(int n, F&& f, int max_enum) {
    check_enumeration_size(n, max_enum);
    Permutation p = identity_permutation(n);
    do {
        f(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace qdet
