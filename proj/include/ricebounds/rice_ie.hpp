#ifndef RICEBOUNDS_RICE_IE_HPP
#define RICEBOUNDS_RICE_IE_HPP

// Rice Ie-function
//
//   Ie(k, x) = int_0^x e^(-t) I_0(k t) dt,   0 <= k <= 1, x >= 0,
//
// through every representation the library knows: the defining integral,
// the trigonometric integral, the Struve- and Bessel-series, the two
// first-order Marcum forms, the integration-by-parts identity, and the
// closed-form upper and lower bounds.
//
// Representations that divide by sqrt(1 - k^2) reject k = 1 with a
// DomainError; only the defining integral, series4 and the upper bound are
// available there.

#include "ricebounds/errors.hpp"
#include "ricebounds/eval_result.hpp"
#include "ricebounds/quad_oracle.hpp"
#include "ricebounds/special_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ricebounds {

struct RiceParams {
   double k = 0.0;
   double x = 0.0;

   void validate() const
   {
      if (!std::isfinite(k) || k < 0.0 || k > 1.0) {
         throw DomainError("rice: k must satisfy 0 <= k <= 1");
      }
      if (!std::isfinite(x) || x < 0.0) {
         throw DomainError("rice: x must be finite and >= 0");
      }
   }

   /// sqrt(1 - k^2)
   double complement() const { return std::sqrt((1.0 - k) * (1.0 + k)); }

   /// a = sqrt(x) sqrt(1 + sqrt(1 - k^2))
   double a() const { return std::sqrt(x) * std::sqrt(1.0 + complement()); }

   /// b = sqrt(x) sqrt(1 - sqrt(1 - k^2)), written without the cancellation at small k.
   double b() const { return std::sqrt(x) * k / std::sqrt(1.0 + complement()); }
};

namespace detail {

inline void require_k_below_one(const RiceParams &p, const char *what)
{
   if (!(p.k < 1.0)) {
      throw DomainError(std::string(what) + ": requires k < 1 (the representation is singular at k = 1)");
   }
}

// e^(-x) I_0(k x), well defined for every x.
inline double rice_bessel_term(const RiceParams &p)
{
   return std::exp(-(1.0 - p.k) * p.x) * bessel_i_scaled(0.0, p.k * p.x);
}

} // namespace detail

/// Defining integral, evaluated by the quadrature oracle.
inline EvalResult rice_ie_quad(const RiceParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   if (p.x == 0.0) {
      return {0.0, Method::quadrature, 0.0};
   }
   const double k = p.k;
   auto integrand = [k](double t) { return std::exp(-(1.0 - k) * t) * bessel_i_scaled(0.0, k * t); };
   const QuadResult r = integrate(integrand, 0.0, p.x, cfg);
   return {r.value, Method::quadrature, r.est_error};
}

/// Ie = 1/sqrt(1-k^2) - (1/pi) int_0^pi e^(-x(1 - k cos t)) / (1 - k cos t) dt.
inline EvalResult rice_ie_alt_integral(const RiceParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   detail::require_k_below_one(p, "rice_ie_alt_integral");
   const double k = p.k;
   const double x = p.x;
   auto integrand = [k, x](double theta) {
      // 1 - k cos t written as (1 - k) + 2k sin^2(t/2) to keep precision near t = 0
      const double s = std::sin(0.5 * theta);
      const double d = (1.0 - k) + 2.0 * k * s * s;
      return std::exp(-x * d) / d;
   };
   const QuadResult r = integrate(integrand, 0.0, std::numbers::pi, cfg);
   const double value = 1.0 / p.complement() - r.value / std::numbers::pi;
   return {value, Method::alt_integral, r.est_error / std::numbers::pi};
}

/// Partial sum of the Struve-function series
///   sqrt(x pi / (2c)) e^(-x) sum_n (x k^2 / (2c))^n / n! [L_{n+1/2}(cx)/c + L_{n-1/2}(cx)],
/// c = sqrt(1 - k^2). est_error is the magnitude of the last included term.
inline EvalResult rice_ie_series3(const RiceParams &p, int terms)
{
   p.validate();
   detail::require_k_below_one(p, "rice_ie_series3");
   if (terms < 1) {
      throw DomainError("rice_ie_series3: terms must be >= 1");
   }
   if (p.x == 0.0) {
      return {0.0, Method::series3, 0.0};
   }
   const double c = p.complement();
   const double y = p.x * c;
   const double ratio = p.x * p.k * p.k / (2.0 * c);
   const double prefix = std::sqrt(p.x * std::numbers::pi / (2.0 * c)) * std::exp(-p.x);

   double weight = 1.0; // ratio^n / n!
   double sum = 0.0;
   double last = 0.0;
   for (int n = 0; n < terms; ++n) {
      if (n > 0) {
         weight *= ratio / n;
      }
      const double bracket = struve_l(n + 0.5, y) / c + struve_l(n - 0.5, y);
      last = weight * bracket;
      sum += last;
   }
   const double value = prefix * sum;
   const double err = std::abs(prefix * last);
   if (!std::isfinite(value) || !std::isfinite(err)) {
      throw ConvergenceError("rice_ie_series3: non-finite partial sum (outside the series' working range)");
   }
   return {value, Method::series3, err};
}

/// Partial sum of the Bessel-function series
///   x e^(-x) sqrt(pi)/2 sum_n q^(n+1) I_{n+1}(kx) / Gamma(n + 5/2)
///   + x e^(-x) [I_0(kx) + sqrt(pi)/(2k) sum_n q^n I_{n+1}(kx) / Gamma(n + 3/2)],
/// q = x (1 - k^2) / (2k). Valid at k = 1.
inline EvalResult rice_ie_series4(const RiceParams &p, int terms)
{
   p.validate();
   if (!(p.k > 0.0)) {
      throw DomainError("rice_ie_series4: requires k > 0");
   }
   if (terms < 1) {
      throw DomainError("rice_ie_series4: terms must be >= 1");
   }
   if (p.x == 0.0) {
      return {0.0, Method::series4, 0.0};
   }
   const double kx = p.k * p.x;
   const double q = p.x * (1.0 - p.k) * (1.0 + p.k) / (2.0 * p.k);
   // Bessel values carry e^(-x) so that large x does not overflow.
   const double decay = std::exp(-(1.0 - p.k) * p.x);
   const double sqrt_pi = std::sqrt(std::numbers::pi);

   double first = 0.0;
   double second = 0.0;
   double last = 0.0;
   double q_power = 1.0; // q^n
   for (int n = 0; n < terms; ++n) {
      if (n > 0) {
         q_power *= q;
      }
      const double bessel = decay * bessel_i_scaled(n + 1.0, kx);
      const double t1 = q_power * q * bessel / std::tgamma(n + 2.5);
      const double t2 = q_power * bessel / std::tgamma(n + 1.5);
      first += t1;
      second += t2;
      last = std::abs(p.x * (0.5 * sqrt_pi * t1 + sqrt_pi / (2.0 * p.k) * t2));
   }
   const double value = p.x * (0.5 * sqrt_pi * first) +
                        p.x * (decay * bessel_i_scaled(0.0, kx) + sqrt_pi / (2.0 * p.k) * second);
   if (!std::isfinite(value)) {
      throw ConvergenceError("rice_ie_series4: non-finite partial sum");
   }
   return {value, Method::series4, last};
}

/// Ie = [2 Q_1(a, b) - e^(-x) I_0(kx) - 1] / sqrt(1 - k^2).
inline EvalResult rice_ie_marcum5(const RiceParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   detail::require_k_below_one(p, "rice_ie_marcum5");
   const double c = p.complement();
   const QuadResult q = marcum_q_detailed(1.0, p.a(), p.b(), cfg);
   const double value = (2.0 * q.value - detail::rice_bessel_term(p) - 1.0) / c;
   return {value, Method::marcum5, 2.0 * q.est_error / c};
}

/// Ie = [Q_1(a, b) - Q_1(b, a)] / sqrt(1 - k^2).
inline EvalResult rice_ie_marcum6(const RiceParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   detail::require_k_below_one(p, "rice_ie_marcum6");
   const double c = p.complement();
   const QuadResult qab = marcum_q_detailed(1.0, p.a(), p.b(), cfg);
   const QuadResult qba = marcum_q_detailed(1.0, p.b(), p.a(), cfg);
   return {(qab.value - qba.value) / c, Method::marcum6, (qab.est_error + qba.est_error) / c};
}

/// Integration-by-parts identity Ie = 1 - e^(-x) I_0(kx) + k int_0^x e^(-t) I_1(kt) dt.
inline EvalResult rice_ie_lemma1_rhs(const RiceParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   if (p.x == 0.0) {
      return {0.0, Method::lemma1, 0.0};
   }
   const double k = p.k;
   double integral = 0.0;
   double err = 0.0;
   if (k > 0.0) {
      auto integrand = [k](double t) { return std::exp(-(1.0 - k) * t) * bessel_i_scaled(1.0, k * t); };
      const QuadResult r = integrate(integrand, 0.0, p.x, cfg);
      integral = r.value;
      err = k * r.est_error;
   }
   return {1.0 - detail::rice_bessel_term(p) + k * integral, Method::lemma1, err};
}

namespace detail {

// erf(sqrt(x c)) / sqrt(c), continuous down to c = 0 where it tends to 2 sqrt(x/pi).
inline double erf_over_root(double x, double c)
{
   const double y = std::sqrt(x * c);
   if (y < 1e-4) {
      const double y2 = y * y;
      return std::sqrt(x) * (2.0 / std::sqrt(std::numbers::pi)) * (1.0 - y2 / 3.0 + y2 * y2 / 10.0);
   }
   return std::erf(y) / std::sqrt(c);
}

} // namespace detail

/// Upper bound obtained by replacing I_1 with I_{1/2} in the integration-by-parts identity:
///   1 - e^(-x) I_0(kx) + sqrt(k/2) [erf(sqrt(x(1-k)))/sqrt(1-k) - erf(sqrt(x(1+k)))/sqrt(1+k)].
/// At k = 0 it collapses to 1 - e^(-x) = Ie(0, x); at k = 1 the first erf
/// ratio takes its limit 2 sqrt(x / pi).
inline EvalResult rice_ie_upper(const RiceParams &p)
{
   p.validate();
   if (p.x == 0.0) {
      return {0.0, Method::bound_upper, 0.0};
   }
   const double base = 1.0 - detail::rice_bessel_term(p);
   if (p.k == 0.0) {
      return {-std::expm1(-p.x), Method::bound_upper, 0.0};
   }
   const double bracket = detail::erf_over_root(p.x, 1.0 - p.k) - detail::erf_over_root(p.x, 1.0 + p.k);
   return {base + std::sqrt(0.5 * p.k) * bracket, Method::bound_upper, 0.0};
}

/// Lower bound from Q_1 > Q_{1/2} in the first Marcum form:
///   [2 Q(b + a) + 2 Q(b - a) - e^(-x) I_0(kx) - 1] / sqrt(1 - k^2).
inline EvalResult rice_ie_lower(const RiceParams &p)
{
   p.validate();
   detail::require_k_below_one(p, "rice_ie_lower");
   const double a = p.a();
   const double b = p.b();
   const double numerator = 2.0 * marcum_q_half(a, b) - detail::rice_bessel_term(p) - 1.0;
   return {numerator / p.complement(), Method::bound_lower, 0.0};
}

} // namespace ricebounds

#endif // RICEBOUNDS_RICE_IE_HPP
