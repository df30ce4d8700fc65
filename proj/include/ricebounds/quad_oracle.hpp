#ifndef RICEBOUNDS_QUAD_ORACLE_HPP
#define RICEBOUNDS_QUAD_ORACLE_HPP

// Adaptive Gauss-Kronrod (7/15) integration with global subdivision.
//
// Each finite interval [lo, hi] is first mapped to [0, 1] through the cubic
// substitution t = lo + (hi - lo) u^2 (3 - 2u). Its Jacobian 6u(1-u) vanishes
// at both ends, which turns endpoint singularities of type (t - lo)^(-1/2)
// into smooth integrands. Kronrod nodes are interior, so the integrand is
// never evaluated exactly at an endpoint.

#include "ricebounds/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace ricebounds {

struct QuadConfig {
   double abs_tol = 1e-12;
   double rel_tol = 1e-12;
   int max_depth = 60;
   /// Hard cap on the number of live subintervals.
   int max_subintervals = 4000;

   void validate() const
   {
      if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
         throw DomainError("QuadConfig: abs_tol and rel_tol must be > 0");
      }
      if (max_depth < 1) {
         throw DomainError("QuadConfig: max_depth must be >= 1");
      }
      if (max_subintervals < 1) {
         throw DomainError("QuadConfig: max_subintervals must be >= 1");
      }
   }

   double tolerance_for(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

struct QuadResult {
   double value = 0.0;
   double est_error = 0.0;
   long evaluations = 0;
};

namespace detail {

// Abscissae and weights of the 15-point Kronrod rule and its embedded
// 7-point Gauss rule on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
   double lo;
   double hi;
   double value;
   double error;
   int depth;
};

struct SegmentOrder {
   bool operator()(const Segment &a, const Segment &b) const { return a.error < b.error; }
};

template <class G>
Segment kronrod_segment(G &g, double lo, double hi, int depth, long &evaluations)
{
   const double center = 0.5 * (lo + hi);
   const double half = 0.5 * (hi - lo);

   const double fc = g(center);
   double kronrod = fc * kronrod15_weights[7];
   double gauss = fc * gauss7_weights[3];
   double abs_sum = std::abs(kronrod);

   for (int j = 0; j < 7; ++j) {
      const double dx = half * kronrod15_nodes[j];
      const double f1 = g(center - dx);
      const double f2 = g(center + dx);
      kronrod += kronrod15_weights[j] * (f1 + f2);
      abs_sum += kronrod15_weights[j] * (std::abs(f1) + std::abs(f2));
      if (j % 2 == 1) {
         gauss += gauss7_weights[j / 2] * (f1 + f2);
      }
   }
   evaluations += 15;

   const double value = kronrod * half;
   double error = std::abs((kronrod - gauss) * half);
   // Below this floor the difference is rounding noise.
   const double floor = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
   error = std::max(error, floor);
   return {lo, hi, value, error, depth};
}

template <class G>
QuadResult adaptive_unit(G &&g, const QuadConfig &cfg)
{
   long evaluations = 0;
   std::vector<Segment> heap;
   heap.reserve(64);
   heap.push_back(kronrod_segment(g, 0.0, 1.0, 0, evaluations));

   double total = heap.front().value;
   double total_error = heap.front().error;

   auto resum = [&] {
      total = 0.0;
      total_error = 0.0;
      for (const auto &s : heap) {
         total += s.value;
         total_error += s.error;
      }
   };

   for (;;) {
      if (total_error <= cfg.tolerance_for(total)) {
         resum();
         if (total_error <= cfg.tolerance_for(total)) {
            break;
         }
      }

      std::pop_heap(heap.begin(), heap.end(), SegmentOrder{});
      const Segment worst = heap.back();

      if (worst.depth >= cfg.max_depth || static_cast<int>(heap.size()) >= cfg.max_subintervals) {
         resum();
         std::ostringstream msg;
         msg << "quadrature tolerance not met (estimate " << total << ", est_error " << total_error
             << ", requested " << cfg.tolerance_for(total) << "; "
             << (worst.depth >= cfg.max_depth ? "max_depth reached" : "max_subintervals reached") << ")";
         throw QuadratureError(msg.str(), total, total_error);
      }
      heap.pop_back();

      const double mid = 0.5 * (worst.lo + worst.hi);
      const Segment left = kronrod_segment(g, worst.lo, mid, worst.depth + 1, evaluations);
      const Segment right = kronrod_segment(g, mid, worst.hi, worst.depth + 1, evaluations);

      total += left.value + right.value - worst.value;
      total_error += left.error + right.error - worst.error;

      heap.push_back(left);
      std::push_heap(heap.begin(), heap.end(), SegmentOrder{});
      heap.push_back(right);
      std::push_heap(heap.begin(), heap.end(), SegmentOrder{});
   }

   return {total, total_error, evaluations};
}

inline void check_finite(double value, double t)
{
   if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "integrand returned a non-finite value at t = " << t;
      throw NumericalError(msg.str());
   }
}

} // namespace detail

/// Integrates f over [lo, hi]. Throws QuadratureError when the tolerance
/// contract cannot be met within cfg.max_depth / cfg.max_subintervals.
template <class F>
QuadResult integrate(F &&f, double lo, double hi, const QuadConfig &cfg = {})
{
   cfg.validate();
   if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw DomainError("integrate: requires finite lo <= hi");
   }
   if (lo == hi) {
      return {};
   }

   const double width = hi - lo;
   auto g = [&](double u) {
      // Map from whichever end is closer so that points near either endpoint
      // keep their full relative resolution.
      double t = 0.0;
      if (u <= 0.5) {
         t = lo + width * (u * u * (3.0 - 2.0 * u));
      } else {
         const double v = 1.0 - u;
         t = hi - width * (v * v * (3.0 - 2.0 * v));
      }
      const double value = f(t) * (6.0 * width * u * (1.0 - u));
      detail::check_finite(value, t);
      return value;
   };
   return detail::adaptive_unit(g, cfg);
}

/// Integrates f over [lo, inf) via t = lo + u / (1 - u). f must decay at
/// least exponentially.
template <class F>
QuadResult integrate_semi_infinite(F &&f, double lo, const QuadConfig &cfg = {})
{
   if (!std::isfinite(lo)) {
      throw DomainError("integrate_semi_infinite: lo must be finite");
   }
   auto mapped = [&](double u) {
      const double w = 1.0 - u;
      if (w <= 0.0) {
         return 0.0;
      }
      const double t = lo + u / w;
      if (!std::isfinite(t)) {
         return 0.0;
      }
      const double ft = f(t);
      return ft == 0.0 ? 0.0 : ft / (w * w);
   };
   return integrate(mapped, 0.0, 1.0, cfg);
}

} // namespace ricebounds

#endif // RICEBOUNDS_QUAD_ORACLE_HPP
