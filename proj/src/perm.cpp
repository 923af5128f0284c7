#include "qdet/perm.hpp"

#include <numeric>
#include <sstream>

namespace qdet {

namespace {

// The cycle through `start`, listed as start, p(start), p(p(start)), ...
std::vector<int> orbit(const Permutation& p, int start, std::vector<bool>& used) {
    std::vector<int> cycle;
    int k = start;
    do {
        cycle.push_back(k);
        used[k - 1] = true;
        k = p[k - 1];
    } while (k != start);
    return cycle;
}

void check_anchor(int n, int anchor) {
    if (anchor < 1 || anchor > n)
        throw IndexError("anchor " + std::to_string(anchor) + " outside 1.." + std::to_string(n));
}

}  // namespace

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

void check_enumeration_size(int n, int max_enum) {
    if (n < 1) throw DimensionError("permutation size must be positive");
    if (n > max_enum) throw EnumerationLimitError(n, max_enum);
}

std::vector<Permutation> enumerate(int n, int max_enum) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, max_enum);
    return out;
}

void check_permutation(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> hit(n, false);
    for (int v : p) {
        if (v < 1 || v > n || hit[v - 1]) throw DimensionError("not a permutation of 1..n");
        hit[v - 1] = true;
    }
}

CyclePermutation left_ordered(const Permutation& sigma, int anchor) {
    check_permutation(sigma);
    const int n = static_cast<int>(sigma.size());
    check_anchor(n, anchor);

    CyclePermutation out{n, anchor, CycleOrder::left, {}};
    std::vector<bool> used(n, false);
    out.cycles.push_back(orbit(sigma, anchor, used));
    for (int m = 1; m <= n; ++m)
        if (!used[m - 1]) out.cycles.push_back(orbit(sigma, m, used));
    return out;
}

CyclePermutation right_ordered(const Permutation& tau, int anchor) {
    check_permutation(tau);
    const int n = static_cast<int>(tau.size());
    check_anchor(n, anchor);

    // Rotate an orbit so that `closer` comes last.
    auto closed_by = [&](int closer, std::vector<bool>& used) {
        std::vector<int> c = orbit(tau, closer, used);
        std::rotate(c.begin(), c.begin() + 1, c.end());
        return c;
    };

    std::vector<bool> used(n, false);
    std::vector<int> anchor_cycle = closed_by(anchor, used);
    std::vector<std::vector<int>> rest;
    for (int m = 1; m <= n; ++m)
        if (!used[m - 1]) rest.push_back(closed_by(m, used));

    CyclePermutation out{n, anchor, CycleOrder::right, {}};
    // Closing minima increase from right to left.
    out.cycles.assign(rest.rbegin(), rest.rend());
    out.cycles.push_back(std::move(anchor_cycle));
    return out;
}

Permutation CyclePermutation::to_permutation() const {
    Permutation p(n, 0);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = c[(k + 1) % c.size()];
    return p;
}

std::string CyclePermutation::to_string() const {
    std::ostringstream os;
    for (const auto& c : cycles) {
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
        os << ')';
    }
    return os.str();
}

}  // namespace qdet
