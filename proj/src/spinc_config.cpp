#include "cpdirac/spinc_config.hpp"

#include <cstdlib>

namespace cpdirac {

EmbeddingConfig validate(std::int64_t d, std::int64_t m, std::int64_t q) {
    if (d < 1 || d >= m)
        throw ConfigError(ConfigErrorKind::BadDimension,
                          "need 1 <= d < m, got d=" + std::to_string(d) + " m=" + std::to_string(m));
    if ((q + m + 1) % 2 != 0)
        throw ConfigError(ConfigErrorKind::BadParity,
                          "q + m + 1 must be even, got q=" + std::to_string(q) +
                              " m=" + std::to_string(m));
    if (std::llabs(q) > m + 1)
        throw ConfigError(ConfigErrorKind::QOutOfRange,
                          "need |q| <= m + 1, got q=" + std::to_string(q) +
                              " m=" + std::to_string(m));
    return EmbeddingConfig(d, m, q);
}

BigNat killing_dimension(const EmbeddingConfig& config) {
    return binomial(config.m() + 1, config.r());
}

Bound estimate_bound(const EmbeddingConfig& config) {
    const std::int64_t d = config.d();
    const std::int64_t q = config.q();
    const std::int64_t codim = config.codimension();
    const bool odd = codim % 2 != 0;
    std::int64_t value = (d + 1) * (d + 1) - q * q + 2 * std::llabs(q) * codim;
    if (odd) value -= 1;
    return Bound{value, odd ? CodimParity::Odd : CodimParity::Even};
}

std::int64_t ginoux_bound(std::int64_t d) {
    return d % 2 != 0 ? (d + 1) * (d + 1) : d * (d + 2);
}

std::string to_string(const EmbeddingConfig& config) {
    return "d=" + std::to_string(config.d()) + " m=" + std::to_string(config.m()) +
           " q=" + std::to_string(config.q()) + " r=" + std::to_string(config.r());
}

}  // namespace cpdirac
