#include <doctest.h>

#include <cstdlib>

#include "cpdirac/spinc_config.hpp"

using namespace cpdirac;

namespace {

ConfigErrorKind error_kind(std::int64_t d, std::int64_t m, std::int64_t q) {
    try {
        validate(d, m, q);
    } catch (const ConfigError& e) {
        return e.kind();
    }
    FAIL("expected ConfigError");
    return ConfigErrorKind::BadCutoff;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(1, 2, 1).r() == 2);
    CHECK(validate(2, 3, 2).r() == 3);
    CHECK(validate(1, 3, -4).r() == 0);
    CHECK(validate(1, 3, 4).r() == 4);

    CHECK(error_kind(1, 3, 3) == ConfigErrorKind::BadParity);
    CHECK(error_kind(0, 3, 2) == ConfigErrorKind::BadDimension);
    CHECK(error_kind(3, 3, 2) == ConfigErrorKind::BadDimension);
    CHECK(error_kind(4, 3, 2) == ConfigErrorKind::BadDimension);
    CHECK(error_kind(1, 3, 6) == ConfigErrorKind::QOutOfRange);
    CHECK(error_kind(1, 3, -6) == ConfigErrorKind::QOutOfRange);
}

TEST_CASE("killing_dimension") {
    CHECK(killing_dimension(validate(1, 3, 2)) == BigNat(4));
    CHECK(killing_dimension(validate(1, 2, 1)) == BigNat(3));
    CHECK(killing_dimension(validate(2, 5, -6)) == BigNat(1));  // r = 0
    for (std::int64_t m = 2; m <= 14; ++m)
        for (std::int64_t q = -(m + 1); q <= m + 1; q += 2)
            CHECK(killing_dimension(validate(1, m, q)) == killing_dimension(validate(1, m, -q)));
}

TEST_CASE("estimate_bound") {
    CHECK(estimate_bound(validate(1, 2, 1)).value == 4);
    CHECK(estimate_bound(validate(1, 3, 2)).value == 8);
    CHECK(estimate_bound(validate(2, 3, 2)).value == 8);
    CHECK(estimate_bound(validate(1, 2, 1)).parity == CodimParity::Odd);
    CHECK(estimate_bound(validate(1, 3, 2)).parity == CodimParity::Even);

    SUBCASE("q = 0 on odd m reduces to the spin bound") {
        for (std::int64_t m = 3; m <= 21; m += 2)
            for (std::int64_t d = 1; d < m; ++d) CHECK(estimate_bound(validate(d, m, 0)).value == ginoux_bound(d));
    }

    SUBCASE("sign of q, endpoints and nonnegativity") {
        for (std::int64_t m = 2; m <= 12; ++m) {
            for (std::int64_t d = 1; d < m; ++d) {
                const std::int64_t a = m - d;
                CHECK(estimate_bound(validate(d, m, m + 1)).value == a * a - (a % 2));
                CHECK(estimate_bound(validate(d, m, -(m + 1))).value == a * a - (a % 2));
                for (std::int64_t q = -(m + 1); q <= m + 1; q += 2) {
                    const Bound b = estimate_bound(validate(d, m, q));
                    CHECK(b.value >= 0);
                    CHECK(b.value == estimate_bound(validate(d, m, -q)).value);
                }
            }
        }
    }
}

TEST_CASE("ginoux_bound") {
    CHECK(ginoux_bound(1) == 4);
    CHECK(ginoux_bound(2) == 8);
    CHECK(ginoux_bound(3) == 16);
}
