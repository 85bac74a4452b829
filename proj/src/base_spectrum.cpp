#include "cpdirac/base_spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cpdirac/spinc_config.hpp"

namespace cpdirac {

namespace {

BigNat nat(std::int64_t n) { return BigNat(static_cast<std::uint64_t>(n)); }

}  // namespace

TwistedBundle make_bundle(std::int64_t d, std::int64_t v) {
    if (d < 1) throw ConfigError(ConfigErrorKind::BadDimension, "need d >= 1, got d=" + std::to_string(d));
    return TwistedBundle{d, v};
}

BigNat Spectrum::total_multiplicity() const {
    BigNat total;
    for (const auto& line : lines) total += line.multiplicity;
    return total;
}

const SpectralLine* Spectrum::find(std::int64_t eigenvalue) const {
    auto it = std::lower_bound(lines.begin(), lines.end(), eigenvalue,
                               [](const SpectralLine& line, std::int64_t e) { return line.eigenvalue < e; });
    return it != lines.end() && it->eigenvalue == eigenvalue ? &*it : nullptr;
}

SpectrumCounts counts(const Spectrum& spectrum) {
    SpectrumCounts out;
    out.reserve(spectrum.lines.size());
    for (const auto& line : spectrum.lines) out.emplace_back(line.eigenvalue, line.multiplicity);
    return out;
}

void SpectrumBuilder::add(std::int64_t eigenvalue, const BigNat& multiplicity, Witness witness) {
    if (multiplicity.is_zero()) return;
    auto& line = lines_[eigenvalue];
    line.eigenvalue = eigenvalue;
    line.multiplicity += multiplicity;
    line.witnesses.push_back(std::move(witness));
}

Spectrum SpectrumBuilder::finish(std::int64_t cutoff) && {
    Spectrum out;
    out.cutoff = cutoff;
    out.lines.reserve(lines_.size());
    for (auto& [eigenvalue, line] : lines_) {
        if (eigenvalue <= cutoff) out.lines.push_back(std::move(line));
    }
    lines_.clear();
    return out;
}

BigNat kernel_multiplicity(const TwistedBundle& bundle) {
    const std::int64_t d = bundle.d;
    const std::int64_t v = bundle.v;
    if (v <= 0) {
        const std::int64_t a = std::llabs(v);
        return exact_div(factorial(a + d), factorial(d) * factorial(a));
    }
    if (v >= d + 1) return exact_div(factorial(v - 1), factorial(d) * factorial(v - d - 1));
    return BigNat(0);
}

std::int64_t eigenvalue_of(const TwistedBundle& bundle, std::int64_t l, std::int64_t k) {
    return 4 * (l + bundle.v) * (l - k + bundle.d);
}

BigNat eigen_multiplicity(const TwistedBundle& bundle, std::int64_t l, std::int64_t k) {
    const std::int64_t d = bundle.d;
    const std::int64_t v = bundle.v;
    if (k < 0 || k > d - 1 || l < 0 || l + v < k + 1)
        throw PreconditionViolated("inadmissible (l, k) = (" + std::to_string(l) + ", " + std::to_string(k) +
                                   ") for d=" + std::to_string(d) + " v=" + std::to_string(v));
    const BigNat num = nat(2) * factorial(l + d) * factorial(l + v - k - 1 + d) * nat(2 * l + v - k + d);
    const BigNat den = factorial(l) * factorial(k) * factorial(d) * factorial(l + v - k - 1) *
                       factorial(d - k - 1) * nat(l + v) * nat(l + d - k);
    return exact_div(num, den);
}

Spectrum enumerate_base_spectrum(const TwistedBundle& bundle, std::int64_t cutoff) {
    SpectrumBuilder builder;
    if (cutoff >= 0) {
        const BigNat kernel = kernel_multiplicity(bundle);
        builder.add(0, kernel, Witness{{}, {}, {}, BigNat(1), kernel});
    }
    for (std::int64_t k = 0; k < bundle.d; ++k) {
        // Both factors of the eigenvalue are positive and increase with l.
        for (std::int64_t l = std::max<std::int64_t>(0, k + 1 - bundle.v);; ++l) {
            const std::int64_t eigenvalue = eigenvalue_of(bundle, l, k);
            if (eigenvalue > cutoff) break;
            const BigNat mult = eigen_multiplicity(bundle, l, k);
            builder.add(eigenvalue, mult, Witness{{}, l, k, BigNat(1), mult});
        }
    }
    return std::move(builder).finish(cutoff);
}

SpectralLine sphere_oracle(std::int64_t l) {
    if (l < 0) throw std::invalid_argument("sphere_oracle: l must be nonnegative");
    SpectralLine line;
    line.eigenvalue = 4 * (l + 1) * (l + 1);
    line.multiplicity = nat(4 * (l + 1));
    return line;
}

}  // namespace cpdirac
