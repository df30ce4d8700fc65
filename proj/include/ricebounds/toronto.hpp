#ifndef RICEBOUNDS_TORONTO_HPP
#define RICEBOUNDS_TORONTO_HPP

// Incomplete Toronto function
//
//   T_B(m, n, r) = 2 r^(n-m+1) e^(-r^2) int_0^B t^(m-n) e^(-t^2) I_n(2 r t) dt.
//
// Series forms (both valid for real n > -1):
//
//   series10: r^(2n-m+1) e^(-r^2) sum_k r^(2k) gamma(a+k, B^2) / (k! Gamma(n+k+1))
//   series9:  B^(2a) r^(2(n-a+1)) / Gamma(n+1) e^(-B^2-r^2) sum_k B^(2k) Y_k / (a)_(k+1)
//             Y_k = sum_{i<=k} (a)_i r^(2i) / ((n+1)_i i!),  a = (m+1)/2
//
// The incomplete gamma takes B^2, and series9 runs over powers of B^2; both
// are checked against the defining integral in the tests.
//
// Closed form for half-integer n = n' + 1/2 and integer m >= 0: expanding
// I_n with its finite exponential sum gives
//
//   T = sum_{k=0}^{n'} 2 r^(n-m+1) c_k (4r)^(-k-1/2)
//         [(-1)^k G_+(L_k) + (-1)^(n'+1) G_-(L_k)],
//   c_k = (n'+k)! / (sqrt(pi) k! (n'-k)!),   L_k = m - n - k - 1/2,
//   G_s(q) = int_0^B t^q e^(-(t - s r)^2) dt.
//
// For q >= 0, G_s(q) is a finite binomial sum of incomplete gamma functions.
// When m < 2n some L_k are negative: those G_s diverge at t = 0 on their own,
// but the divergences cancel across k. They are evaluated as Hadamard finite
// parts, which are linear and therefore sum to the convergent total. Finite
// parts with q <= -2 follow from q = -1 and q = 0 by integration by parts;
// q = -1 needs E_1(B^2) and one rapidly convergent incomplete-gamma series.

#include "ricebounds/detail/extended.hpp"
#include "ricebounds/errors.hpp"
#include "ricebounds/eval_result.hpp"
#include "ricebounds/quad_oracle.hpp"
#include "ricebounds/special_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>

namespace ricebounds {

struct TorontoParams {
   double m = 0.0;
   double n = 0.0;
   double r = 0.0;
   double B = 0.0;

   void validate() const
   {
      if (!std::isfinite(m) || m < 0.0) {
         throw DomainError("toronto: m must be finite and >= 0");
      }
      if (!std::isfinite(n) || n < 0.0) {
         throw DomainError("toronto: n must be finite and >= 0");
      }
      if (!std::isfinite(r) || r < 0.0) {
         throw DomainError("toronto: r must be finite and >= 0");
      }
      if (!std::isfinite(B) || B < 0.0) {
         throw DomainError("toronto: B must be finite and >= 0");
      }
   }
};

namespace detail {

// r -> 0: r^(n-m+1) I_n(2rt) -> r^(2n-m+1) t^n / Gamma(n+1).
inline double toronto_r0_limit(const TorontoParams &p)
{
   const double exponent = 2.0 * p.n - p.m + 1.0;
   if (exponent > 0.0) {
      return 0.0;
   }
   if (exponent < 0.0) {
      throw DomainError("toronto: the r -> 0 limit diverges when 2n - m + 1 < 0");
   }
   return gamma_p(0.5 * (p.m + 1.0), p.B * p.B) * std::tgamma(0.5 * (p.m + 1.0)) / std::tgamma(p.n + 1.0);
}

// int_lo^hi u^l e^(-u^2) du for 0 <= lo <= hi, from whichever incomplete
// gamma avoids subtracting two nearly equal numbers.
template <class Real>
ClosedSum<Real> gaussian_moment_nonnegative(int l, const Real &lo, const Real &hi)
{
   using std::abs;
   const Real s = Real(l + 1) / 2;
   if (lo == hi) {
      return {};
   }
   Real first;
   Real second;
   if (lo * lo > s) {
      first = upper_gamma(s, Real(lo * lo));
      second = upper_gamma(s, Real(hi * hi));
   } else {
      first = lower_gamma(s, Real(hi * hi));
      second = lower_gamma(s, Real(lo * lo));
   }
   return {(first - second) / 2, (abs(first) + abs(second)) / 2};
}

// int_c1^c2 u^l e^(-u^2) du for any real c1 <= c2.
template <class Real>
ClosedSum<Real> gaussian_moment(int l, const Real &c1, const Real &c2)
{
   const int parity = (l % 2 == 0) ? 1 : -1;
   if (c1 >= 0) {
      return gaussian_moment_nonnegative(l, c1, c2);
   }
   if (c2 <= 0) {
      ClosedSum<Real> m = gaussian_moment_nonnegative(l, Real(-c2), Real(-c1));
      m.total *= parity;
      return m;
   }
   const ClosedSum<Real> left = gaussian_moment_nonnegative(l, Real(0), Real(-c1));
   const ClosedSum<Real> right = gaussian_moment_nonnegative(l, Real(0), c2);
   return {parity * left.total + right.total, left.magnitude + right.magnitude};
}

/// Finite-part moments G(q) = FP int_0^B t^q e^(-(t - shift)^2) dt, shift = +-r.
/// Each moment carries the sum of the absolute values that went into it, so
/// callers can see cancellation inside the moments as well as between them.
template <class Real>
class ShiftedGaussianMoments {
public:
   ShiftedGaussianMoments(Real shift, Real B) : shift_(std::move(shift)), B_(std::move(B)) {}

   const ClosedSum<Real> &operator()(int q)
   {
      if (auto it = cache_.find(q); it != cache_.end()) {
         return it->second;
      }
      ClosedSum<Real> value;
      if (q >= 0) {
         value = binomial_form(q);
      } else if (q == -1) {
         value = finite_part_inverse();
      } else {
         // (q+1) G(q) = [t^(q+1) e^(-(t-s)^2)]_0^B (finite part at 0) + 2 G(q+2) - 2 s G(q+1)
         using std::abs;
         using std::exp;
         using std::pow;
         const int j = -(q + 1);
         const Real at_zero = exp(-shift_ * shift_) * hermite(j, shift_) / boost::math::factorial<Real>(j);
         const Real at_b = pow(B_, q + 1) * exp(-(B_ - shift_) * (B_ - shift_));
         const ClosedSum<Real> g2 = (*this)(q + 2);
         const ClosedSum<Real> g1 = (*this)(q + 1);
         value.total = (at_b - at_zero + 2 * g2.total - 2 * shift_ * g1.total) / (q + 1);
         value.magnitude =
             (abs(at_b) + abs(at_zero) + 2 * g2.magnitude + 2 * abs(shift_) * g1.magnitude) / abs(Real(q + 1));
      }
      return cache_.emplace(q, value).first->second;
   }

private:
   // t = u + s:  sum_l C(q,l) s^(q-l) int_{-s}^{B-s} u^l e^(-u^2) du
   ClosedSum<Real> binomial_form(int q) const
   {
      using std::abs;
      using std::pow;
      ClosedSum<Real> sum;
      for (int l = 0; l <= q; ++l) {
         const Real weight = binomial<Real>(q, l) * pow(shift_, q - l);
         const ClosedSum<Real> moment = gaussian_moment(l, Real(-shift_), Real(B_ - shift_));
         sum.total += weight * moment.total;
         sum.magnitude += abs(weight) * moment.magnitude;
      }
      return sum;
   }

   // FP int_0^B t^-1 e^(-t^2) e^(2st) dt
   //   = -(E1(B^2) + gamma_E)/2 + sum_{j>=1} (2s)^j / j! gamma(j/2, B^2) / 2, times e^(-s^2).
   ClosedSum<Real> finite_part_inverse() const
   {
      using std::abs;
      using std::exp;
      const Real b2 = B_ * B_;
      const Real base = -(exp_integral_e1(b2) + boost::math::constants::euler<Real>()) / 2;
      const Real eps = std::numeric_limits<Real>::epsilon();
      const double reach = 4.0 * std::abs(static_cast<double>(shift_)) * std::max(static_cast<double>(B_), 1.0);
      Real weight = 1;
      Real series = 0;
      Real absolute = abs(base);
      Real scale = abs(base);
      for (int j = 1; j < 20000; ++j) {
         weight *= 2 * shift_ / j;
         const Real term = weight * lower_gamma(Real(j) / 2, b2) / 2;
         series += term;
         absolute += abs(term);
         if (abs(term) > scale) {
            scale = abs(term);
         }
         if (j > reach && abs(term) <= eps * scale / 4) {
            const Real damp = exp(-shift_ * shift_);
            return {damp * (base + series), damp * absolute};
         }
      }
      throw ConvergenceError("toronto_closed: finite-part series did not converge");
   }

   Real shift_;
   Real B_;
   std::map<int, ClosedSum<Real>> cache_;
};

// sum_k 2 r^(n-m+1) c_k (4r)^(-k-1/2) [(-1)^k G_+(L_k) + (-1)^(n'+1) G_-(L_k)]
template <class Real>
ClosedSum<Real> toronto_closed_sum(const TorontoParams &p)
{
   using std::abs;
   using std::exp;
   using std::log;
   const int n_int = static_cast<int>(std::lround(p.n - 0.5));
   const int m_offset = static_cast<int>(std::lround(p.m - p.n - 0.5)); // L_0
   const int tail_sign = (n_int % 2 == 0) ? -1 : 1;                     // (-1)^(n'+1)
   const Real r = p.r;
   const Real B = p.B;
   ShiftedGaussianMoments<Real> plus(r, B);
   ShiftedGaussianMoments<Real> minus(Real(-r), B);

   const Real log_r = log(r);
   const Real log_4r = log(Real(4)) + log_r;
   ClosedSum<Real> out;
   Real coef = 1 / boost::math::constants::root_pi<Real>(); // (n'+k)! / (sqrt(pi) k! (n'-k)!)
   for (int k = 0; k <= n_int; ++k) {
      if (k > 0) {
         coef *= Real((n_int + k) * (n_int - k + 1)) / k;
      }
      const int L = m_offset - k;
      const Real scale = 2 * coef * exp(Real(p.n - p.m + 1.0) * log_r - (Real(k) + Real(0.5)) * log_4r);
      const ClosedSum<Real> &gp = plus(L);
      const ClosedSum<Real> &gm = minus(L);
      out.total += scale * ((k % 2 == 0 ? 1 : -1) * gp.total + tail_sign * gm.total);
      out.magnitude += abs(scale) * (gp.magnitude + gm.magnitude);
   }
   return out;
}

inline void require_closed_form_params(const TorontoParams &p, const char *what)
{
   p.validate();
   if (!is_half_integer(p.n)) {
      throw DomainError(std::string(what) + ": n must satisfy n + 1/2 in N");
   }
   if (!is_integer(p.m)) {
      throw DomainError(std::string(what) + ": m - n - 1/2 must be an integer (m integer)");
   }
}

} // namespace detail

/// Defining integral by the quadrature oracle. r = 0 uses the analytic limit.
inline EvalResult toronto_quad(const TorontoParams &p, const QuadConfig &cfg = {})
{
   p.validate();
   if (p.B == 0.0) {
      return {0.0, Method::quadrature, 0.0};
   }
   if (p.r == 0.0) {
      return {detail::toronto_r0_limit(p), Method::quadrature, 0.0};
   }
   const double m = p.m;
   const double n = p.n;
   const double r = p.r;
   // t^(m-n) e^(-(t-r)^2) [e^(-2rt) I_n(2rt)] carries the e^(-r^2) prefactor.
   auto integrand = [m, n, r](double t) {
      if (t <= 0.0) {
         return 0.0;
      }
      const double d = t - r;
      return std::exp((m - n) * std::log(t) - d * d) * bessel_i_scaled(n, 2.0 * r * t);
   };
   const QuadResult q = integrate(integrand, 0.0, p.B, cfg);
   const double scale = 2.0 * std::pow(r, n - m + 1.0);
   return {scale * q.value, Method::quadrature, scale * q.est_error};
}

/// T_B(m, (m-1)/2, r) = 1 - Q_{(m+1)/2}(r sqrt2, B sqrt2).
inline EvalResult toronto_marcum_case(double m, double r, double B, const QuadConfig &cfg = {})
{
   TorontoParams{m, 0.5 * std::max(m - 1.0, 0.0), r, B}.validate();
   const QuadResult q = marcum_p_detailed(0.5 * (m + 1.0), r * std::numbers::sqrt2, B * std::numbers::sqrt2, cfg);
   return {q.value, Method::marcum8, q.est_error};
}

/// Partial sum of series10 through `terms` terms; est_error is the last term.
inline EvalResult toronto_series10(const TorontoParams &p, int terms)
{
   p.validate();
   if (terms < 1) {
      throw DomainError("toronto_series10: terms must be >= 1");
   }
   if (p.B == 0.0) {
      return {0.0, Method::series10, 0.0};
   }
   if (p.r == 0.0) {
      return {detail::toronto_r0_limit(p), Method::series10, 0.0};
   }
   const double a = 0.5 * (p.m + 1.0);
   const double b2 = p.B * p.B;
   const double log_r = std::log(p.r);
   const double lead = (2.0 * p.n - p.m + 1.0) * log_r - p.r * p.r;
   double sum = 0.0;
   double last = 0.0;
   for (int k = 0; k < terms; ++k) {
      const double log_weight =
          lead + 2.0 * k * log_r + std::lgamma(a + k) - std::lgamma(k + 1.0) - std::lgamma(p.n + k + 1.0);
      last = std::exp(log_weight) * gamma_p(a + k, b2);
      sum += last;
   }
   if (!std::isfinite(sum)) {
      throw ConvergenceError("toronto_series10: non-finite partial sum");
   }
   return {sum, Method::series10, std::abs(last)};
}

/// Partial sum of series9 through `terms` terms; est_error is the last term.
inline EvalResult toronto_series9(const TorontoParams &p, int terms)
{
   p.validate();
   if (terms < 1) {
      throw DomainError("toronto_series9: terms must be >= 1");
   }
   if (p.B == 0.0) {
      return {0.0, Method::series9, 0.0};
   }
   if (p.r == 0.0) {
      return {detail::toronto_r0_limit(p), Method::series9, 0.0};
   }
   const double a = 0.5 * (p.m + 1.0);
   const double b2 = p.B * p.B;
   const double r2 = p.r * p.r;
   const double log_prefix = 2.0 * a * std::log(p.B) + 2.0 * (p.n - a + 1.0) * std::log(p.r) -
                             std::lgamma(p.n + 1.0) - b2 - r2;

   double y_term = 1.0;      // (a)_i r^(2i) / ((n+1)_i i!)
   double y_sum = 1.0;       // Y_k
   double weight = 1.0 / a;  // B^(2k) / (a)_(k+1)
   double sum = weight * y_sum;
   double last = sum;
   for (int k = 1; k < terms; ++k) {
      y_term *= (a + k - 1.0) * r2 / ((p.n + k) * k);
      y_sum += y_term;
      weight *= b2 / (a + k);
      last = weight * y_sum;
      sum += last;
   }
   const double prefix = std::exp(log_prefix);
   if (!std::isfinite(sum * prefix)) {
      throw ConvergenceError("toronto_series9: non-finite partial sum");
   }
   return {prefix * sum, Method::series9, std::abs(prefix * last)};
}

/// Finite incomplete-gamma representation for n + 1/2 in N and integer m >= 0,
/// requiring r > 0. The sum is repeated in 50-digit arithmetic when its terms
/// cancel heavily (small r and B); est_error is the rounding bound of the
/// arithmetic actually used.
inline EvalResult toronto_closed(const TorontoParams &p)
{
   detail::require_closed_form_params(p, "toronto_closed");
   if (p.B == 0.0) {
      return {0.0, Method::closed_form, 0.0};
   }
   if (!(p.r > 0.0)) {
      throw DomainError("toronto_closed: requires r > 0");
   }
   constexpr double eps = std::numeric_limits<double>::epsilon();
   const auto fast = detail::toronto_closed_sum<double>(p);
   if (std::isfinite(fast.total) && fast.magnitude <= detail::kCancellationLimit * std::abs(fast.total)) {
      return {fast.total, Method::closed_form, 16.0 * eps * fast.magnitude};
   }
   const auto wide = detail::toronto_closed_sum<detail::Extended>(p);
   const double value = static_cast<double>(wide.total);
   const double err = 0.5 * eps * std::abs(value) + static_cast<double>(wide.magnitude) * 1e-45;
   if (!std::isfinite(value)) {
      throw OverflowError("toronto_closed: value is not representable in double");
   }
   return {value, Method::closed_form, err};
}

/// Lower bound at integer n: the closed form at order n + 1/2.
inline EvalResult toronto_lower(const TorontoParams &p)
{
   p.validate();
   if (!is_integer(p.n)) {
      throw DomainError("toronto_lower: n must be a nonnegative integer");
   }
   EvalResult r = toronto_closed({p.m, p.n + 0.5, p.r, p.B});
   r.method = Method::bound_lower;
   return r;
}

/// Upper bound at integer n >= 1: the closed form at order n - 1/2.
inline EvalResult toronto_upper(const TorontoParams &p)
{
   p.validate();
   if (!is_integer(p.n) || p.n < 1.0) {
      throw DomainError("toronto_upper: n must be an integer >= 1 (order -1/2 is not supported)");
   }
   EvalResult r = toronto_closed({p.m, p.n - 0.5, p.r, p.B});
   r.method = Method::bound_upper;
   return r;
}

} // namespace ricebounds

#endif // RICEBOUNDS_TORONTO_HPP
