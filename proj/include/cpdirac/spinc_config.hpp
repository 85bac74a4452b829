#pragma once

// Spin^c data for the linear embedding CP^d -> CP^m and the eigenvalue
// upper bound attached to it.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cpdirac/exact_arith.hpp"

namespace cpdirac {

enum class ConfigErrorKind { BadDimension, BadParity, QOutOfRange, BadTwist, BadCutoff };

class ConfigError : public std::invalid_argument {
public:
    ConfigError(ConfigErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    [[nodiscard]] ConfigErrorKind kind() const { return kind_; }

private:
    ConfigErrorKind kind_;
};

/// A validated (d, m, q). The ambient CP^m carries the Spin^c structure with
/// auxiliary bundle L^q, and r = (q + m + 1) / 2 indexes its Kaehlerian
/// Killing spinors. Only `validate` constructs one.
class EmbeddingConfig {
public:
    [[nodiscard]] std::int64_t d() const { return d_; }
    [[nodiscard]] std::int64_t m() const { return m_; }
    [[nodiscard]] std::int64_t q() const { return q_; }
    [[nodiscard]] std::int64_t r() const { return (q_ + m_ + 1) / 2; }
    [[nodiscard]] std::int64_t codimension() const { return m_ - d_; }

    friend bool operator==(const EmbeddingConfig&, const EmbeddingConfig&) = default;
    friend auto operator<=>(const EmbeddingConfig&, const EmbeddingConfig&) = default;

    friend EmbeddingConfig validate(std::int64_t d, std::int64_t m, std::int64_t q);

private:
    EmbeddingConfig(std::int64_t d, std::int64_t m, std::int64_t q) : d_(d), m_(m), q_(q) {}
    std::int64_t d_;
    std::int64_t m_;
    std::int64_t q_;
};

enum class CodimParity { Even, Odd };

/// Upper bound for the square of the twisted Dirac operator.
struct Bound {
    std::int64_t value;
    CodimParity parity;  // parity of m - d, which selects the branch
};

/// Throws ConfigError unless 1 <= d < m, q + m + 1 is even and |q| <= m + 1.
EmbeddingConfig validate(std::int64_t d, std::int64_t m, std::int64_t q);

/// Dimension of the space of Kaehlerian Killing spinors, C(m+1, r).
BigNat killing_dimension(const EmbeddingConfig& config);

/// (d+1)^2 - q^2 + 2|q|(m-d), minus one more when m - d is odd.
Bound estimate_bound(const EmbeddingConfig& config);

/// The spin bound for odd m: (d+1)^2 for odd d, d(d+2) for even d.
std::int64_t ginoux_bound(std::int64_t d);

std::string to_string(const EmbeddingConfig& config);

}  // namespace cpdirac
