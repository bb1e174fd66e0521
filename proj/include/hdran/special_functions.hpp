#ifndef HDRAN_SPECIAL_FUNCTIONS_HPP
#define HDRAN_SPECIAL_FUNCTIONS_HPP

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace hdran {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Digamma for x > 0: upward recurrence to x >= 12, then the asymptotic
/// series. Absolute error below 1e-13 on (0, inf). Throws DomainError for x <= 0.
double digamma(double x);
/// First derivative of digamma, same scheme.
double trigamma(double x);

/// Rising factorial x (x+1) ... (x+m-1) in exact arithmetic.
Rational pochhammer(const Rational& x, std::size_t m);
/// Generalized binomial coefficient binom(x, m) = x (x-1) ... (x-m+1) / m!.
Rational generalized_binomial(const Rational& x, std::size_t m);

/// log of the rising factorial for x > 0, via lgamma differences.
double log_pochhammer(double x, double m);

/// Result of a convergent series evaluation with a bound on the neglected tail.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// 3F2(a1, a2, a3; b1, b2; 1) by direct summation.
///
/// Requires b1 + b2 - a1 - a2 - a3 > 0 and no b equal to a non-positive
/// integer. Summation stops once the current term drops below 1e-15 of the
/// partial sum and the tail bound is below 1e-12. The tail is bounded by the
/// power-law majorant t_J * (J + c) / (s - 1 + ...) that follows from the
/// term-ratio asymptotics t_{j+1}/t_j = 1 - (s + 1)/j + O(1/j^2), where s is
/// the parameter excess.
SeriesValue hyp3f2_unit_series(const Rational& a1, const Rational& a2, const Rational& a3,
                               const Rational& b1, const Rational& b2);

inline double hyp3f2_unit(const Rational& a1, const Rational& a2, const Rational& a3,
                          const Rational& b1, const Rational& b2) {
    return hyp3f2_unit_series(a1, a2, a3, b1, b2).value;
}

/// Stirling numbers of the second kind; zero when i > r.
BigInt stirling2(int r, int i);

}  // namespace hdran

#endif  // HDRAN_SPECIAL_FUNCTIONS_HPP
