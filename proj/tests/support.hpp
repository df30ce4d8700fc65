#ifndef RICEBOUNDS_TESTS_SUPPORT_HPP
#define RICEBOUNDS_TESTS_SUPPORT_HPP

// Independent oracles and generators shared by the unit tests.

#include "ricebounds/quad_oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n)
{
   std::vector<double> nodes(n);
   std::vector<double> weights(n);
   for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
         double p0 = 1.0;
         double p1 = x;
         for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
         }
         dp = n * (x * p1 - p0) / (x * x - 1.0);
         const double dx = p1 / dp;
         x -= dx;
         if (std::abs(dx) < 1e-16) {
            break;
         }
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
   }
   return {nodes, weights};
}

/// Fixed composite Gauss-Legendre rule: `panels` equal panels of `order` points.
template <class F>
double composite_gauss_legendre(F &&f, double lo, double hi, int panels = 200, int order = 20)
{
   static const auto rule = gauss_legendre(20);
   const auto &[nodes, weights] = order == 20 ? rule : gauss_legendre(order);
   const double h = (hi - lo) / panels;
   double sum = 0.0;
   for (int p = 0; p < panels; ++p) {
      const double c = lo + (p + 0.5) * h;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
         sum += weights[i] * f(c + 0.5 * h * nodes[i]);
      }
   }
   return 0.5 * h * sum;
}

inline std::mt19937_64 &rng()
{
   static std::mt19937_64 engine(0x5eed2026u);
   return engine;
}

inline double uniform(double lo, double hi)
{
   return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi)
{
   return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// Relative-tolerance oracle for comparisons with very small values.
inline ricebounds::QuadConfig tight()
{
   ricebounds::QuadConfig cfg;
   cfg.rel_tol = 1e-13;
   cfg.abs_tol = 1e-300;
   return cfg;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace testsupport

#endif // RICEBOUNDS_TESTS_SUPPORT_HPP
