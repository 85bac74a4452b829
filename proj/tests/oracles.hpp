#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "cpdirac/base_spectrum.hpp"
#include "cpdirac/exact_arith.hpp"

namespace cpdirac::oracle {

/// n! by repeated addition (n-fold sum), so it exercises only BigNat::+.
inline BigNat factorial_by_addition(int n) {
    BigNat acc(1);
    for (int i = 2; i <= n; ++i) {
        BigNat next;
        for (int j = 0; j < i; ++j) next += acc;
        acc = next;
    }
    return acc;
}

/// Pascal's triangle rows 0..n_max, additions only.
inline std::vector<std::vector<BigNat>> pascal(int n_max) {
    std::vector<std::vector<BigNat>> rows;
    rows.push_back({BigNat(1)});
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigNat> row(static_cast<std::size_t>(n + 1), BigNat(1));
        for (int k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Naive per-eigenvalue totals: every (l, k) in a fixed generous box, no
/// early exit, no SpectrumBuilder.
inline std::map<std::int64_t, BigNat> naive_totals(const TwistedBundle& bundle, std::int64_t cutoff,
                                                   std::int64_t l_max) {
    std::map<std::int64_t, BigNat> totals;
    const BigNat kernel = kernel_multiplicity(bundle);
    if (!kernel.is_zero()) totals[0] += kernel;
    for (std::int64_t k = 0; k <= bundle.d - 1; ++k) {
        for (std::int64_t l = 0; l <= l_max; ++l) {
            if (l + bundle.v < k + 1) continue;
            const std::int64_t e = 4 * (l + bundle.v) * (l - k + bundle.d);
            if (e <= cutoff) totals[e] += eigen_multiplicity(bundle, l, k);
        }
    }
    return totals;
}

}  // namespace cpdirac::oracle
