#pragma once

// Spectrum of D^2 for the Spin^c Dirac operator on CP^d (Fubini-Study,
// holomorphic sectional curvature 4) with spinor bundle
// Lambda^{0,*} CP^d (x) L^v.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cpdirac/exact_arith.hpp"

namespace cpdirac {

/// Lambda^{0,*} CP^d (x) L^v; the auxiliary bundle is L^{2v-(d+1)}.
struct TwistedBundle {
    std::int64_t d;
    std::int64_t v;
};

/// Throws ConfigError(BadDimension) when d < 1.
TwistedBundle make_bundle(std::int64_t d, std::int64_t v);

/// Where a piece of a spectral line came from. A kernel contribution has no
/// (l, k); `s` is only set for summands of a normal-bundle decomposition.
struct Witness {
    std::optional<std::int64_t> s;
    std::optional<std::int64_t> l;
    std::optional<std::int64_t> k;
    BigNat factor{1};
    BigNat multiplicity;  // before scaling by factor
};

struct SpectralLine {
    std::int64_t eigenvalue = 0;
    BigNat multiplicity;
    std::vector<Witness> witnesses;
};

/// Every eigenvalue <= cutoff, one line per distinct value, ascending.
struct Spectrum {
    std::vector<SpectralLine> lines;
    std::int64_t cutoff = 0;

    [[nodiscard]] BigNat total_multiplicity() const;
    [[nodiscard]] const SpectralLine* find(std::int64_t eigenvalue) const;
};

/// (eigenvalue, multiplicity) pairs with witnesses dropped.
using SpectrumCounts = std::vector<std::pair<std::int64_t, BigNat>>;
SpectrumCounts counts(const Spectrum& spectrum);

/// Accumulates contributions and emits an aggregated, sorted Spectrum.
class SpectrumBuilder {
public:
    void add(std::int64_t eigenvalue, const BigNat& multiplicity, Witness witness);
    [[nodiscard]] Spectrum finish(std::int64_t cutoff) &&;

private:
    std::map<std::int64_t, SpectralLine> lines_;
};

/// Thrown by eigen_multiplicity when (l, k) is not admissible for the bundle.
class PreconditionViolated : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// dim ker D. Nonzero only for v <= 0 or v >= d + 1.
BigNat kernel_multiplicity(const TwistedBundle& bundle);

/// 4(l+v)(l-k+d) for an admissible pair.
std::int64_t eigenvalue_of(const TwistedBundle& bundle, std::int64_t l, std::int64_t k);

/// Multiplicity of 4(l+v)(l-k+d) contributed by the pair (l, k). Requires
/// 0 <= k <= d-1, l >= 0 and l + v >= k + 1.
BigNat eigen_multiplicity(const TwistedBundle& bundle, std::int64_t l, std::int64_t k);

/// All eigenvalues of D^2 up to `cutoff`, aggregated over (l, k).
Spectrum enumerate_base_spectrum(const TwistedBundle& bundle, std::int64_t cutoff);

/// Round 2-sphere of curvature 4: eigenvalue 4(l+1)^2 with multiplicity
/// 4(l+1), both signs of D counted. Closed form, independent of the above.
SpectralLine sphere_oracle(std::int64_t l);

}  // namespace cpdirac
