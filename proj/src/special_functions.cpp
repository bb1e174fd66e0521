#include "hdran/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hdran/error.hpp"

namespace hdran {

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

constexpr double kAsymptoticStart = 12.0;

}  // namespace

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("digamma requires x > 0");
    }
    long double shift = 0.0L;
    long double y = x;
    while (y < kAsymptoticStart) {
        shift += 1.0L / y;
        y += 1.0L;
    }
    const long double inv = 1.0L / y;
    const long double inv2 = inv * inv;
    // Bernoulli-number tail: B_{2m} / (2m y^{2m})
    const long double series =
        inv2 * (1.0L / 12 -
                inv2 * (1.0L / 120 -
                        inv2 * (1.0L / 252 -
                                inv2 * (1.0L / 240 -
                                        inv2 * (1.0L / 132 - inv2 * (691.0L / 32760 - inv2 / 12))))));
    return static_cast<double>(std::log(y) - 0.5L * inv - series - shift);
}

double trigamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("trigamma requires x > 0");
    }
    long double shift = 0.0L;
    long double y = x;
    while (y < kAsymptoticStart) {
        shift += 1.0L / (y * y);
        y += 1.0L;
    }
    const long double inv = 1.0L / y;
    const long double inv2 = inv * inv;
    const long double series =
        inv * (1.0L +
               inv * (0.5L +
                      inv * (1.0L / 6 -
                             inv2 * (1.0L / 30 -
                                     inv2 * (1.0L / 42 -
                                             inv2 * (1.0L / 30 -
                                                     inv2 * (5.0L / 66 - inv2 * (691.0L / 2730 - inv2 * 7.0L / 6))))))));
    return static_cast<double>(series + shift);
}

Rational pochhammer(const Rational& x, std::size_t m) {
    Rational result = 1;
    for (std::size_t i = 0; i < m; ++i) result *= x + static_cast<long long>(i);
    return result;
}

Rational generalized_binomial(const Rational& x, std::size_t m) {
    Rational num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < m; ++i) {
        num *= x - static_cast<long long>(i);
        den *= static_cast<long long>(i + 1);
    }
    return num / Rational(den);
}

double log_pochhammer(double x, double m) {
    if (!(x > 0.0)) throw DomainError("log_pochhammer requires x > 0");
    return std::lgamma(x + m) - std::lgamma(x);
}

SeriesValue hyp3f2_unit_series(const Rational& a1, const Rational& a2, const Rational& a3,
                               const Rational& b1, const Rational& b2) {
    const Rational excess_q = b1 + b2 - a1 - a2 - a3;
    if (excess_q <= 0) {
        throw DomainError("3F2 at unit argument diverges: b1 + b2 - a1 - a2 - a3 must be > 0");
    }
    for (const Rational* b : {&b1, &b2}) {
        if (*b <= 0 && denominator(*b) == 1) {
            throw DomainError("3F2 lower parameter is a non-positive integer");
        }
    }
    const long double p1 = to_double(a1), p2 = to_double(a2), p3 = to_double(a3);
    const long double q1 = to_double(b1), q2 = to_double(b2);
    const double excess = to_double(excess_q);
    // Majorant exponent: terms decay like j^-(excess + 1); use a slack exponent.
    const double majorant_power = 1.0 + 0.5 * excess;
    const double asymptotic_from =
        10.0 * std::max({1.0, std::fabs(static_cast<double>(p1)), std::fabs(static_cast<double>(p2)),
                         std::fabs(static_cast<double>(p3)), std::fabs(static_cast<double>(q1)),
                         std::fabs(static_cast<double>(q2))});

    constexpr std::size_t kMaxTerms = 50'000'000;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double carry = 0.0L;  // Kahan compensation
    for (std::size_t j = 0; j < kMaxTerms; ++j) {
        const long double jj = static_cast<long double>(j);
        const long double ratio = (jj + p1) * (jj + p2) * (jj + p3) / ((jj + q1) * (jj + q2) * (jj + 1.0L));
        term *= ratio;
        if (term == 0.0L) {
            return SeriesValue{static_cast<double>(sum), 0.0, j + 1};
        }
        const long double y = term - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;

        const double index = static_cast<double>(j + 1);
        if (index < asymptotic_from) continue;
        if (std::fabs(static_cast<double>(term)) >= 1e-15 * std::fabs(static_cast<double>(sum))) continue;
        const long double next_ratio = (jj + 1 + p1) * (jj + 1 + p2) * (jj + 1 + p3) /
                                       ((jj + 1 + q1) * (jj + 1 + q2) * (jj + 2.0L));
        const double power_step = std::pow(index / (index + 1.0), majorant_power);
        if (next_ratio < 0.0L || static_cast<double>(next_ratio) > power_step) continue;
        const double tail = std::fabs(static_cast<double>(term)) * index / (majorant_power - 1.0);
        if (tail <= 1e-12) {
            return SeriesValue{static_cast<double>(sum), tail, j + 2};
        }
    }
    throw NumericError("3F2 series did not reach its tail tolerance within " +
                       std::to_string(kMaxTerms) + " terms");
}

BigInt stirling2(int r, int i) {
    if (r < 0 || i < 0) throw DomainError("stirling2 requires r, i >= 0");
    if (i > r) return 0;
    // One row of the triangle at a time: S(m, c) = c S(m-1, c) + S(m-1, c-1).
    std::vector<BigInt> row(static_cast<std::size_t>(i) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= r; ++m) {
        const int top = std::min(m, i);
        for (int c = top; c >= 1; --c) {
            row[static_cast<std::size_t>(c)] =
                c * row[static_cast<std::size_t>(c)] + row[static_cast<std::size_t>(c) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(i)];
}

}  // namespace hdran
