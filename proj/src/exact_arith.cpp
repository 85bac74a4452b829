#include "cpdirac/exact_arith.hpp"

#include <algorithm>

namespace cpdirac {

BigNat BigNat::from_string(const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a decimal natural number: '" + digits + "'");
    return BigNat(Rep(digits));
}

NonIntegralDivision::NonIntegralDivision(const BigNat& num, const BigNat& den)
    : std::domain_error("non-integral division: " + num.to_string() + " / " + den.to_string()) {}

BigNat factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    BigNat result(1);
    for (std::int64_t i = 2; i <= n; ++i) result *= BigNat(static_cast<std::uint64_t>(i));
    return result;
}

BigNat binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return BigNat(0);
    k = std::min(k, n - k);
    // Running product stays integral: after step i it equals C(n-k+i, i).
    BigNat acc(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= BigNat(static_cast<std::uint64_t>(n - k + i));
        acc = exact_div(acc, BigNat(static_cast<std::uint64_t>(i)));
    }
    return acc;
}

BigNat exact_div(const BigNat& num, const BigNat& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div by zero");
    BigNat::Rep quotient;
    BigNat::Rep remainder;
    boost::multiprecision::divide_qr(num.value_, den.value_, quotient, remainder);
    if (!remainder.is_zero()) throw NonIntegralDivision(num, den);
    return BigNat(std::move(quotient));
}

}  // namespace cpdirac
