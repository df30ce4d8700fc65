#ifndef RICEBOUNDS_ILHI_HPP
#define RICEBOUNDS_ILHI_HPP

// Incomplete Lipschitz-Hankel integral over the modified Bessel kernel
//
//   Ie_{m,n}(z; a) = int_0^z x^m e^(-a x) I_n(x) dx,
//
// canonical argument order (m, n, a, z). For n + 1/2 in N and m >= n,
//
//   Ie = sum_{k=0}^{n'} c_k [(-1)^k S(P, a-1) + (-1)^(n'+1) S(P, a+1)],
//   c_k = (n'+k)! / (sqrt(pi) k! (n'-k)! 2^(k+1/2)),  P = m - k + 1/2,
//   S(P, c) = int_0^z x^(P-1) e^(-c x) dx,
//
// with n' = n - 1/2. S is gamma(P, c z) / c^P for c > 0; for c <= 0 (a <= 1)
// it is evaluated from its everywhere-convergent power series instead.

#include "ricebounds/detail/extended.hpp"
#include "ricebounds/errors.hpp"
#include "ricebounds/eval_result.hpp"
#include "ricebounds/quad_oracle.hpp"
#include "ricebounds/special_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ricebounds {

struct IlhiParams {
   double m = 0.0;
   double n = 0.0;
   double a = 0.0;
   double z = 0.0;

   void validate() const
   {
      if (!std::isfinite(m) || m < 0.0) {
         throw DomainError("ilhi: m must be finite and >= 0");
      }
      if (!std::isfinite(n) || n < 0.0) {
         throw DomainError("ilhi: n must be finite and >= 0");
      }
      if (!std::isfinite(a)) {
         throw DomainError("ilhi: a must be finite");
      }
      if (!std::isfinite(z) || z < 0.0) {
         throw DomainError("ilhi: z must be finite and >= 0");
      }
   }
};

namespace detail {

// int_0^z x^(P-1) e^(-c x) dx for P > 0 and any real c.
template <class Real>
Real ilhi_power_exponential(const Real &P, const Real &c, const Real &z)
{
   using std::exp;
   using std::log;
   using std::pow;
   if (c > 0) {
      return exp(log(lower_gamma(P, Real(c * z))) - P * log(c));
   }
   const Real zp = pow(z, P);
   if (c == 0) {
      return zp / P;
   }
   // z^P sum_j (|c| z)^j / (j! (P + j)); all terms positive.
   const Real y = -c * z;
   const Real eps = std::numeric_limits<Real>::epsilon();
   Real weight = 1;
   Real sum = 1 / P;
   for (int j = 1; j < 100000; ++j) {
      weight *= y / j;
      const Real term = weight / (P + j);
      sum += term;
      if (j > y && term <= eps * sum / 4) {
         return zp * sum;
      }
   }
   throw ConvergenceError("ilhi_closed: power series did not converge");
}

template <class Real>
ClosedSum<Real> ilhi_closed_sum(const IlhiParams &p)
{
   using std::abs;
   const int n_int = static_cast<int>(std::lround(p.n - 0.5));
   const int tail_sign = (n_int % 2 == 0) ? -1 : 1; // (-1)^(n'+1)
   const Real a = p.a;
   const Real z = p.z;
   ClosedSum<Real> out;
   // (n'+k)! / (sqrt(pi) k! (n'-k)! 2^(k+1/2))
   Real coef = 1 / boost::math::constants::root_two_pi<Real>();
   for (int k = 0; k <= n_int; ++k) {
      if (k > 0) {
         coef *= Real((n_int + k) * (n_int - k + 1)) / (2 * k);
      }
      const Real P = Real(p.m) - k + Real(0.5);
      const Real t1 = (k % 2 == 0 ? 1 : -1) * coef * ilhi_power_exponential(P, Real(a - 1), z);
      const Real t2 = tail_sign * coef * ilhi_power_exponential(P, Real(a + 1), z);
      out.total += t1 + t2;
      out.magnitude += abs(t1) + abs(t2);
   }
   return out;
}

} // namespace detail

/// Defining integral by the quadrature oracle.
inline EvalResult ilhi_quad(const IlhiParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   if (p.z == 0.0) {
      return {0.0, Method::quadrature, 0.0};
   }
   // The integrand is bounded by z^m e^((1-a) z) up to algebraic factors.
   const double log_peak = (1.0 - p.a) * p.z + p.m * std::log(std::max(p.z, 1.0));
   if (log_peak > detail::kLogMax - 10.0) {
      throw OverflowError("ilhi_quad: integrand overflows double (a < 1 with large z)");
   }
   const double m = p.m;
   const double n = p.n;
   const double a = p.a;
   auto integrand = [m, n, a](double x) {
      if (x <= 0.0) {
         return 0.0;
      }
      return std::exp(m * std::log(x) + (1.0 - a) * x) * bessel_i_scaled(n, x);
   };
   const QuadResult q = integrate(integrand, 0.0, p.z, cfg);
   return {q.value, Method::quadrature, q.est_error};
}

/// Finite closed form for n + 1/2 in N and m >= n; any real a.
inline EvalResult ilhi_closed(const IlhiParams &p)
{
   p.validate();
   if (!is_half_integer(p.n)) {
      throw DomainError("ilhi_closed: n must satisfy n + 1/2 in N");
   }
   if (p.m < p.n) {
      throw DomainError("ilhi_closed: requires m >= n");
   }
   if (p.z == 0.0) {
      return {0.0, Method::closed_form, 0.0};
   }
   constexpr double eps = std::numeric_limits<double>::epsilon();
   const auto fast = detail::ilhi_closed_sum<double>(p);
   if (!std::isfinite(fast.magnitude)) {
      throw OverflowError("ilhi_closed: value overflows double");
   }
   if (fast.magnitude <= detail::kCancellationLimit * std::abs(fast.total)) {
      return {fast.total, Method::closed_form, 16.0 * eps * fast.magnitude};
   }
   // Terms cancel heavily (small z): repeat in extended precision.
   const auto wide = detail::ilhi_closed_sum<detail::Extended>(p);
   const double value = static_cast<double>(wide.total);
   return {value, Method::closed_form, 0.5 * eps * std::abs(value) + static_cast<double>(wide.magnitude) * 1e-45};
}

/// Lower bound at integer n: the closed form at order n + 1/2 (needs m >= n + 1/2).
inline EvalResult ilhi_lower(const IlhiParams &p)
{
   p.validate();
   if (!is_integer(p.n)) {
      throw DomainError("ilhi_lower: n must be a nonnegative integer");
   }
   if (p.m < p.n + 0.5) {
      throw DomainError("ilhi_lower: requires m >= n + 1/2");
   }
   EvalResult r = ilhi_closed({p.m, p.n + 0.5, p.a, p.z});
   r.method = Method::bound_lower;
   return r;
}

/// Upper bound at integer n >= 1: the closed form at order n - 1/2.
inline EvalResult ilhi_upper(const IlhiParams &p)
{
   p.validate();
   if (!is_integer(p.n) || p.n < 1.0) {
      throw DomainError("ilhi_upper: n must be an integer >= 1 (order -1/2 is not supported)");
   }
   EvalResult r = ilhi_closed({p.m, p.n - 0.5, p.a, p.z});
   r.method = Method::bound_upper;
   return r;
}

} // namespace ricebounds

#endif // RICEBOUNDS_ILHI_HPP
