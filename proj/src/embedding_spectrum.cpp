#include "cpdirac/embedding_spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace cpdirac {

std::vector<DecompositionSummand> decompose_normal_twist(const EmbeddingConfig& config) {
    const std::int64_t codim = config.codimension();
    std::vector<DecompositionSummand> out;
    out.reserve(static_cast<std::size_t>(codim + 1));
    for (std::int64_t s = 0; s <= codim; ++s)
        out.push_back(DecompositionSummand{s, binomial(codim, s), config.r() - s});
    return out;
}

Spectrum twisted_spectrum(const EmbeddingConfig& config, std::int64_t cutoff) {
    SpectrumBuilder builder;
    for (const auto& summand : decompose_normal_twist(config)) {
        Spectrum base = enumerate_base_spectrum(make_bundle(config.d(), summand.v), cutoff);
        for (auto& line : base.lines) {
            for (auto& w : line.witnesses) {
                w.s = summand.s;
                w.factor = summand.factor;
                builder.add(line.eigenvalue, summand.factor * w.multiplicity, std::move(w));
            }
        }
    }
    return std::move(builder).finish(cutoff);
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Optimal: return "optimal";
        case Verdict::NotOptimal: return "not_optimal";
        case Verdict::TheoremViolation: return "theorem_violation";
    }
    return "unknown";
}

SharpnessReport sharpness(const EmbeddingConfig& config) {
    const Bound bound = estimate_bound(config);
    const BigNat mu = killing_dimension(config);

    Spectrum wide = twisted_spectrum(config, 4 * bound.value);
    std::optional<SpectralLine> next_line;
    auto above = std::find_if(wide.lines.begin(), wide.lines.end(),
                              [&](const SpectralLine& l) { return l.eigenvalue > bound.value; });
    if (above != wide.lines.end()) next_line = *above;
    wide.lines.erase(above, wide.lines.end());
    wide.cutoff = bound.value;

    std::optional<std::int64_t> mu_th;
    BigNat running;
    for (const auto& line : wide.lines) {
        running += line.multiplicity;
        if (running >= mu) {
            mu_th = line.eigenvalue;
            break;
        }
    }

    Verdict verdict = Verdict::TheoremViolation;
    std::optional<std::int64_t> margin;
    if (mu_th) {
        verdict = *mu_th == bound.value ? Verdict::Optimal : Verdict::NotOptimal;
        margin = bound.value - *mu_th;
    }
    return SharpnessReport{config, mu, bound, std::move(wide), std::move(next_line), mu_th, verdict, margin};
}

std::vector<SharpnessReport> sweep(IntRange d_range, IntRange m_range, unsigned jobs) {
    if (d_range.lo > d_range.hi || m_range.lo > m_range.hi)
        throw std::invalid_argument("sweep: empty range");

    std::vector<EmbeddingConfig> configs;
    for (std::int64_t d = std::max<std::int64_t>(d_range.lo, 1); d <= d_range.hi; ++d)
        for (std::int64_t m = std::max(m_range.lo, d + 1); m <= m_range.hi; ++m)
            for (std::int64_t q = -(m + 1); q <= m + 1; q += 2) configs.push_back(validate(d, m, q));

    std::vector<std::optional<SharpnessReport>> slots(configs.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, configs.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) slots[i] = sharpness(configs[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<SharpnessReport> out;
    out.reserve(slots.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

std::optional<SpectrumCounts> published_example_counts(const EmbeddingConfig& config) {
    const auto key = std::make_tuple(config.d(), config.m(), config.q());
    if (key == std::make_tuple(1, 2, 1)) return SpectrumCounts{{0, 1}, {4, 4}};
    if (key == std::make_tuple(1, 3, 2)) return SpectrumCounts{{0, 3}, {4, 4}, {8, 6}};
    if (key == std::make_tuple(2, 3, 2)) return SpectrumCounts{{0, 1}, {8, 6}};
    return std::nullopt;
}

}  // namespace cpdirac
