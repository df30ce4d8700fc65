#ifndef RICEBOUNDS_DETAIL_EXTENDED_HPP
#define RICEBOUNDS_DETAIL_EXTENDED_HPP

// Precision-generic building blocks for the finite closed forms. The sums
// are first taken in double; when their terms cancel by many orders of
// magnitude they are repeated in 50-digit binary floating point.

#include "ricebounds/special_core.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <type_traits>

namespace ricebounds::detail {

using Extended = boost::multiprecision::cpp_bin_float_50;

/// Cancellation (sum of |terms| over |sum|) above which double is abandoned.
inline constexpr double kCancellationLimit = 1e4;

/// A finite sum together with the sum of its absolute terms.
template <class Real>
struct ClosedSum {
   Real total = 0;
   Real magnitude = 0;
};

template <class Real>
Real lower_gamma(const Real &s, const Real &x)
{
   if constexpr (std::is_same_v<Real, double>) {
      return gamma_lower(s, x);
   } else {
      return x == 0 ? Real(0) : boost::math::tgamma_lower(s, x);
   }
}

template <class Real>
Real upper_gamma(const Real &s, const Real &x)
{
   if constexpr (std::is_same_v<Real, double>) {
      return gamma_upper(s, x);
   } else {
      return boost::math::tgamma(s, x);
   }
}

/// Exponential integral E_1(x), x > 0.
template <class Real>
Real exp_integral_e1(const Real &x)
{
   if constexpr (std::is_same_v<Real, double>) {
      return -std::expint(-x);
   } else {
      return boost::math::expint(1, x);
   }
}

template <class Real>
Real binomial(int n, int k)
{
   Real c = 1;
   for (int i = 1; i <= k; ++i) {
      c = c * (n - k + i) / i;
   }
   return c;
}

/// Physicists' Hermite polynomial H_j(x).
template <class Real>
Real hermite(int j, const Real &x)
{
   if (j == 0) {
      return Real(1);
   }
   Real prev = 1;
   Real cur = 2 * x;
   for (int i = 1; i < j; ++i) {
      Real next = 2 * x * cur - 2 * i * prev;
      prev = cur;
      cur = next;
   }
   return cur;
}

} // namespace ricebounds::detail

#endif // RICEBOUNDS_DETAIL_EXTENDED_HPP
