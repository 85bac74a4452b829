#pragma once

// Exact natural-number arithmetic for multiplicity formulas.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpdirac {

/// Arbitrary-precision natural number. There is no subtraction: every
/// quantity built from it is a count.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t n) : value_(n) {}  // NOLINT: implicit from counts

    /// Parses a decimal string; throws std::invalid_argument on anything
    /// that is not a plain run of digits.
    static BigNat from_string(const std::string& digits);

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] std::string to_string() const { return value_.str(); }

    BigNat& operator+=(const BigNat& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigNat& operator*=(const BigNat& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
    friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend BigNat exact_div(const BigNat& num, const BigNat& den);

private:
    using Rep = boost::multiprecision::cpp_int;
    explicit BigNat(Rep v) : value_(std::move(v)) {}
    Rep value_;
};

/// Raised when a quotient that must be an integer leaves a remainder.
class NonIntegralDivision : public std::domain_error {
public:
    NonIntegralDivision(const BigNat& num, const BigNat& den);
};

/// n! for n >= 0.
BigNat factorial(std::int64_t n);

/// C(n, k); zero when k < 0 or k > n.
BigNat binomial(std::int64_t n, std::int64_t k);

/// num / den, which must divide exactly. den == 0 throws std::invalid_argument.
BigNat exact_div(const BigNat& num, const BigNat& den);

}  // namespace cpdirac
