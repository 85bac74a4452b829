#pragma once

// Twisted Dirac spectrum of the linear embedding CP^d -> CP^m and the
// sharpness test for the Killing-spinor eigenvalue bound.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cpdirac/base_spectrum.hpp"
#include "cpdirac/exact_arith.hpp"
#include "cpdirac/spinc_config.hpp"

namespace cpdirac {

/// One summand C(m-d, s) * Lambda^{0,*} CP^d (x) L^{v_s} of the spinor
/// bundle of CP^d twisted by the normal spinor bundle.
struct DecompositionSummand {
    std::int64_t s;
    BigNat factor;
    std::int64_t v;  // r - s
};

std::vector<DecompositionSummand> decompose_normal_twist(const EmbeddingConfig& config);

/// Spectrum of the square of the twisted Dirac operator up to `cutoff`.
/// Witnesses carry the summand index s and binomial factor.
Spectrum twisted_spectrum(const EmbeddingConfig& config, std::int64_t cutoff);

enum class Verdict { Optimal, NotOptimal, TheoremViolation };

std::string_view to_string(Verdict verdict);

struct SharpnessReport {
    EmbeddingConfig config;
    BigNat mu;
    Bound bound;
    Spectrum spectrum_below;                 // cutoff = bound.value
    std::optional<SpectralLine> next_line;   // first line above the bound, if <= 4 * bound
    std::optional<std::int64_t> mu_th_eigenvalue;
    Verdict verdict;
    std::optional<std::int64_t> margin;      // bound - mu_th_eigenvalue
};

/// Counts eigenvalues up to the bound and compares the mu-th smallest
/// (with multiplicity) against it.
SharpnessReport sharpness(const EmbeddingConfig& config);

struct IntRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// Reports for every valid (d, m, q) in the ranges, ordered by (d, m, q).
/// Configs are evaluated on up to `jobs` threads (0 picks the hardware count).
std::vector<SharpnessReport> sweep(IntRange d_range, IntRange m_range, unsigned jobs = 0);

/// Multiplicities quoted in the published worked examples, for the three
/// configurations that have them. These are reference data for comparison
/// only; (1, 3, 2) differs from what the decomposition yields.
std::optional<SpectrumCounts> published_example_counts(const EmbeddingConfig& config);

}  // namespace cpdirac
