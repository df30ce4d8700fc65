#ifndef RICEBOUNDS_SPECIAL_CORE_HPP
#define RICEBOUNDS_SPECIAL_CORE_HPP

// Classical special functions used by the Rice, Toronto and ILHI modules:
// modified Bessel I (real and half-integer order), modified Struve L,
// error function, incomplete gamma, Gaussian Q and the generalized Marcum Q.

#include "ricebounds/errors.hpp"
#include "ricebounds/quad_oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ricebounds {

/// Order nu stored as 2*nu, so half-integer orders are exact.
struct HalfIntOrder {
   int twice_order = 1;

   static HalfIntOrder from_value(double order)
   {
      const double twice = 2.0 * order;
      if (!std::isfinite(order) || twice != std::round(twice) || twice < -1.0) {
         std::ostringstream msg;
         msg << "order " << order << " is not a multiple of 1/2 >= -1/2";
         throw DomainError(msg.str());
      }
      return HalfIntOrder{static_cast<int>(twice)};
   }

   double value() const { return 0.5 * twice_order; }
   bool is_half_integer() const { return twice_order % 2 != 0; }
   /// For nu = n + 1/2 returns n.
   int integer_part() const { return (twice_order - 1) / 2; }
};

/// True when x + 1/2 is a natural number (x = 1/2, 3/2, ...).
inline bool is_half_integer(double x)
{
   return x > 0.0 && std::isfinite(x) && (x - 0.5) == std::round(x - 0.5);
}

inline bool is_integer(double x) { return std::isfinite(x) && x == std::round(x); }

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kLogMax = 709.78271289338397;

inline void require(bool ok, const char *what)
{
   if (!ok) {
      throw DomainError(what);
   }
}

// Ascending series sum_k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)), multiplied by e^(-shift).
inline double bessel_i_series(double nu, double x, double shift)
{
   const double q = 0.25 * x * x;
   double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) - shift);
   double sum = term;
   for (int k = 1; k < 100000; ++k) {
      term *= q / (k * (k + nu));
      sum += term;
      if (term <= 0.25 * kEps * sum && k > 0.5 * x) {
         return sum;
      }
   }
   throw ConvergenceError("bessel_i: ascending series did not converge");
}

// Hankel expansion of e^(-x) I_nu(x); usable once x dominates nu^2.
inline double bessel_i_scaled_asymptotic(double nu, double x)
{
   const double mu = 4.0 * nu * nu;
   double term = 1.0;
   double sum = 1.0;
   for (int k = 1; k < 500; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double next = -term * (mu - odd * odd) / (8.0 * k * x);
      if (std::abs(next) >= std::abs(term)) {
         break;
      }
      term = next;
      sum += term;
      if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) {
         break;
      }
   }
   return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

inline bool bessel_use_asymptotic(double nu, double x) { return x > 50.0 && x > 2.0 * nu * nu; }

inline void check_bessel_args(double order, double x)
{
   if (!std::isfinite(order) || !(order > -1.0)) {
      throw DomainError("bessel_i: order must be finite and > -1");
   }
   if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("bessel_i: x must be finite and >= 0");
   }
   if (x == 0.0 && order < 0.0) {
      throw DomainError("bessel_i: I_nu(0) is unbounded for nu < 0");
   }
}

} // namespace detail

/// e^(-x) I_nu(x) for nu > -1, x >= 0.
inline double bessel_i_scaled(double order, double x)
{
   detail::check_bessel_args(order, x);
   if (x == 0.0) {
      return order == 0.0 ? 1.0 : 0.0;
   }
   if (detail::bessel_use_asymptotic(order, x)) {
      return detail::bessel_i_scaled_asymptotic(order, x);
   }
   if (x > 700.0) {
      throw OverflowError("bessel_i_scaled: ascending series overflows for this (order, x)");
   }
   return detail::bessel_i_series(order, x, x);
}

/// Modified Bessel function of the first kind I_nu(x).
inline double bessel_i(double order, double x)
{
   detail::check_bessel_args(order, x);
   if (x == 0.0) {
      return order == 0.0 ? 1.0 : 0.0;
   }
   if (!detail::bessel_use_asymptotic(order, x)) {
      if (x > 700.0) {
         throw OverflowError("bessel_i: result overflows");
      }
      return detail::bessel_i_series(order, x, 0.0);
   }
   const double log_value = x + std::log(detail::bessel_i_scaled_asymptotic(order, x));
   if (log_value > detail::kLogMax) {
      throw OverflowError("bessel_i: result overflows");
   }
   return std::exp(log_value);
}

/// I_{n+1/2}(x) from its finite exponential sum
///   sum_{k=0}^{n} (n+k)! [(-1)^k e^x + (-1)^(n+1) e^(-x)] / (sqrt(pi) k! (n-k)! (2x)^(k+1/2)).
/// For small x the terms cancel to roughly x^(2n+1); the sum is carried in
/// 113-bit binary floating point so the double result stays accurate.
inline double bessel_i_half(HalfIntOrder order, double x)
{
   using Wide = boost::multiprecision::cpp_bin_float_quad;
   if (!order.is_half_integer() || order.twice_order < 1) {
      throw DomainError("bessel_i_half: order must be n + 1/2 with n >= 0");
   }
   if (!std::isfinite(x) || !(x > 0.0)) {
      throw DomainError("bessel_i_half: x must be > 0");
   }
   if (x > detail::kLogMax) {
      throw OverflowError("bessel_i_half: result overflows");
   }

   const int n = order.integer_part();
   const Wide wx = x;
   const Wide ep = exp(wx);
   const Wide em = exp(-wx);
   const Wide tail_sign = (n % 2 == 0) ? -1 : 1; // (-1)^(n+1)
   const Wide two_x = 2 * wx;

   Wide sum = 0;
   Wide coef = 1;  // (n+k)! / (k! (n-k)!)
   Wide power = sqrt(two_x);
   for (int k = 0; k <= n; ++k) {
      if (k > 0) {
         coef *= Wide((n + k) * (n - k + 1)) / k;
         power *= two_x;
      }
      const Wide bracket = ((k % 2 == 0) ? ep : -ep) + tail_sign * em;
      sum += coef * bracket / power;
   }
   sum /= sqrt(boost::math::constants::pi<Wide>());
   return static_cast<double>(sum);
}

/// Modified Struve function L_nu(x) by its ascending series, for nu >= -1/2.
inline double struve_l(double order, double x)
{
   if (!std::isfinite(order) || order < -0.5) {
      throw DomainError("struve_l: order must be >= -1/2");
   }
   if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("struve_l: x must be finite and >= 0");
   }
   if (x == 0.0) {
      return 0.0;
   }
   const double q = 0.25 * x * x;
   double term = std::exp((order + 1.0) * std::log(0.5 * x) - std::lgamma(1.5) - std::lgamma(order + 1.5));
   double sum = term;
   for (int k = 0; k < 10000; ++k) {
      term *= q / ((k + 1.5) * (k + order + 1.5));
      sum += term;
      if (term < 1e-16 * sum && k > 0.5 * x) {
         if (!std::isfinite(sum)) {
            throw OverflowError("struve_l: result overflows");
         }
         return sum;
      }
   }
   throw ConvergenceError("struve_l: series exceeded 10^4 terms");
}

inline double erf(double x) { return std::erf(x); }
inline double erfc(double x) { return std::erfc(x); }

namespace detail {

// sum_{j>=0} x^j / (a (a+1) ... (a+j)), so that gamma(a, x) = x^a e^-x * series.
inline double gamma_series(double a, double x)
{
   double term = 1.0 / a;
   double sum = term;
   for (int j = 1; j < 100000; ++j) {
      term *= x / (a + j);
      sum += term;
      if (term < 0.25 * kEps * sum) {
         return sum;
      }
   }
   throw ConvergenceError("incomplete gamma: series did not converge");
}

// Continued fraction (modified Lentz) for Gamma(a, x) / (x^a e^-x).
inline double gamma_continued_fraction(double a, double x)
{
   constexpr double tiny = 1e-300;
   double b = x + 1.0 - a;
   double c = 1.0 / tiny;
   double d = 1.0 / b;
   double h = d;
   for (int i = 1; i < 100000; ++i) {
      const double an = -i * (i - a);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) {
         d = tiny;
      }
      c = b + an / c;
      if (std::abs(c) < tiny) {
         c = tiny;
      }
      d = 1.0 / d;
      const double delta = d * c;
      h *= delta;
      if (std::abs(delta - 1.0) < 0.5 * kEps) {
         return h;
      }
   }
   throw ConvergenceError("incomplete gamma: continued fraction did not converge");
}

inline void check_gamma_args(double a, double x)
{
   if (!std::isfinite(a) || !(a > 0.0)) {
      throw DomainError("incomplete gamma: a must be > 0");
   }
   if (std::isnan(x) || x < 0.0) {
      throw DomainError("incomplete gamma: x must be >= 0");
   }
}

} // namespace detail

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
inline double gamma_p(double a, double x)
{
   detail::check_gamma_args(a, x);
   if (x == 0.0) {
      return 0.0;
   }
   if (std::isinf(x)) {
      return 1.0;
   }
   const double log_prefix = a * std::log(x) - x - std::lgamma(a);
   if (x < a + 1.0) {
      return std::exp(log_prefix) * detail::gamma_series(a, x);
   }
   return 1.0 - std::exp(log_prefix) * detail::gamma_continued_fraction(a, x);
}

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
inline double gamma_q(double a, double x)
{
   detail::check_gamma_args(a, x);
   if (x == 0.0) {
      return 1.0;
   }
   if (std::isinf(x)) {
      return 0.0;
   }
   const double log_prefix = a * std::log(x) - x - std::lgamma(a);
   if (x < a + 1.0) {
      return 1.0 - std::exp(log_prefix) * detail::gamma_series(a, x);
   }
   return std::exp(log_prefix) * detail::gamma_continued_fraction(a, x);
}

/// Lower incomplete gamma gamma(a, x) = int_0^x t^(a-1) e^-t dt.
inline double gamma_lower(double a, double x)
{
   detail::check_gamma_args(a, x);
   if (x == 0.0) {
      return 0.0;
   }
   if (std::isinf(x)) {
      return std::tgamma(a);
   }
   if (x < a + 1.0) {
      return std::exp(a * std::log(x) - x) * detail::gamma_series(a, x);
   }
   return std::tgamma(a) - std::exp(a * std::log(x) - x) * detail::gamma_continued_fraction(a, x);
}

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^-t dt.
inline double gamma_upper(double a, double x)
{
   detail::check_gamma_args(a, x);
   if (x == 0.0) {
      return std::tgamma(a);
   }
   if (std::isinf(x)) {
      return 0.0;
   }
   if (x < a + 1.0) {
      return std::tgamma(a) - std::exp(a * std::log(x) - x) * detail::gamma_series(a, x);
   }
   return std::exp(a * std::log(x) - x) * detail::gamma_continued_fraction(a, x);
}

/// Standard normal upper tail.
inline double gaussian_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

namespace detail {

inline void check_marcum_args(double order, double a, double b)
{
   if (!std::isfinite(order) || order < 0.5) {
      throw DomainError("marcum_q: order must be >= 1/2");
   }
   if (!std::isfinite(a) || a < 0.0 || std::isnan(b) || b < 0.0) {
      throw DomainError("marcum_q: a and b must be >= 0");
   }
}

// Noncentral chi density in the Marcum integral:
//   t (t/a)^(nu-1) exp(-(t^2 + a^2)/2) I_{nu-1}(a t)
// evaluated through e^(-at) I_{nu-1}(at) so nothing overflows.
inline double marcum_density(double order, double a, double t)
{
   if (t <= 0.0) {
      return 0.0;
   }
   const double z = a * t;
   const double scaled = bessel_i_scaled(order - 1.0, z);
   if (scaled == 0.0) {
      return 0.0;
   }
   const double d = t - a;
   const double log_part = std::log(t) + (order - 1.0) * (std::log(t) - std::log(a)) - 0.5 * d * d;
   return std::exp(log_part) * scaled;
}

} // namespace detail

/// Generalized Marcum Q_nu(a, b) together with the quadrature error estimate.
/// Whichever tail is smaller is integrated directly and the other obtained by
/// complement, so both Q and 1 - Q keep their absolute accuracy.
inline QuadResult marcum_q_detailed(double order, double a, double b, const QuadConfig &cfg = {})
{
   detail::check_marcum_args(order, a, b);
   if (b == 0.0) {
      return {1.0, 0.0, 0};
   }
   if (std::isinf(b)) {
      return {0.0, 0.0, 0};
   }
   if (a == 0.0) {
      return {gamma_q(order, 0.5 * b * b), 0.0, 0};
   }
   auto density = [order, a](double t) { return detail::marcum_density(order, a, t); };
   if (b < a) {
      QuadResult lower = integrate(density, 0.0, b, cfg);
      return {1.0 - lower.value, lower.est_error, lower.evaluations};
   }
   return integrate_semi_infinite(density, b, cfg);
}

inline double marcum_q(double order, double a, double b, const QuadConfig &cfg = {})
{
   return marcum_q_detailed(order, a, b, cfg).value;
}

/// 1 - Q_nu(a, b), integrated directly over [0, b] when that is the small side.
inline QuadResult marcum_p_detailed(double order, double a, double b, const QuadConfig &cfg = {})
{
   detail::check_marcum_args(order, a, b);
   if (b == 0.0) {
      return {0.0, 0.0, 0};
   }
   if (std::isinf(b)) {
      return {1.0, 0.0, 0};
   }
   if (a == 0.0) {
      return {gamma_p(order, 0.5 * b * b), 0.0, 0};
   }
   auto density = [order, a](double t) { return detail::marcum_density(order, a, t); };
   if (b < a) {
      return integrate(density, 0.0, b, cfg);
   }
   QuadResult upper = integrate_semi_infinite(density, b, cfg);
   return {1.0 - upper.value, upper.est_error, upper.evaluations};
}

/// Q_{1/2}(a, b) = Q(b + a) + Q(b - a).
inline double marcum_q_half(double a, double b)
{
   if (!std::isfinite(a) || a < 0.0 || std::isnan(b) || b < 0.0) {
      throw DomainError("marcum_q_half: a and b must be >= 0");
   }
   return gaussian_q(b + a) + gaussian_q(b - a);
}

} // namespace ricebounds

#endif // RICEBOUNDS_SPECIAL_CORE_HPP
