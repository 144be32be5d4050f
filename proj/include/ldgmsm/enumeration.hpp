#pragma once

#include "ldgmsm/pauli.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace ldgmsm {

/// C(n, w), saturating at uint64 max.
inline std::uint64_t subset_count(std::size_t n, std::size_t w) {
    if (w > n)
        return 0;
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < w; ++i) {
        const std::uint64_t num = n - i;
        if (c > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        c = c * num / (i + 1);
    }
    return c;
}

/// C(n, w) * 3^w: number of weight-w Paulis on n qubits, saturating.
inline std::uint64_t pauli_count(std::size_t n, std::size_t w) {
    std::uint64_t c = subset_count(n, w);
    for (std::size_t i = 0; i < w; ++i) {
        if (c > std::numeric_limits<std::uint64_t>::max() / 3)
            return std::numeric_limits<std::uint64_t>::max();
        c *= 3;
    }
    return c;
}

/// Visit every w-subset of {0..n-1} in lexicographic index order.
template <class F>
void for_each_weight_subset(std::size_t n, std::size_t w, F&& f) {
    if (w > n)
        return;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i)
        idx[i] = i;
    while (true) {
        f(const_cast<const std::vector<std::size_t>&>(idx));
        if (w == 0)
            return;
        // advance
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - w) {
                ++idx[i];
                for (std::size_t j = i + 1; j < w; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
    }
}

/// Visit every weight-w Pauli on n qubits: w-subsets of sites crossed
/// with X/Y/Z labels per site.
template <class F>
void for_each_pauli_of_weight(std::size_t n, std::size_t w, F&& f) {
    static constexpr char labels[3] = {'X', 'Y', 'Z'};
    for_each_weight_subset(n, w, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> digit(w, 0);
        PauliVec p(n);
        for (std::size_t i = 0; i < w; ++i)
            p.set_pauli(idx[i], 'X');
        while (true) {
            f(const_cast<const PauliVec&>(p));
            if (w == 0)
                return;
            std::size_t pos = w;
            bool carried_out = true;
            while (pos > 0) {
                --pos;
                if (digit[pos] < 2) {
                    ++digit[pos];
                    p.set_pauli(idx[pos], labels[digit[pos]]);
                    carried_out = false;
                    break;
                }
                digit[pos] = 0;
                p.set_pauli(idx[pos], 'X');
            }
            if (carried_out)
                return;
        }
    });
}

} // namespace ldgmsm
