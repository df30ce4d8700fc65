#ifndef RICEBOUNDS_CLI_VERIFY_HPP
#define RICEBOUNDS_CLI_VERIFY_HPP

// Cross-representation identity suite behind `verify`.

#include "point.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ricebounds::cli {

struct VerifyRow {
   std::string identity;
   double residual = 0.0;
   double threshold = 0.0;
   bool pass() const { return residual <= threshold; }
};

/// Residual thresholds scale with the requested tolerance.
inline double verify_threshold(double base, double tol) { return std::max(base, 100.0 * tol); }

/// Quadrature settings used by `verify` for a given --tol.
inline QuadConfig verify_config(double tol)
{
   QuadConfig cfg;
   cfg.rel_tol = tol;
   cfg.abs_tol = tol * 1e-6;
   return cfg;
}

inline double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// Runs every identity. Numerical failures propagate as exceptions.
inline std::vector<VerifyRow> run_verify(double tol)
{
   const QuadConfig cfg = verify_config(tol);
   std::vector<VerifyRow> rows;

   {
      double worst = 0.0;
      for (double k : {0.1, 0.5, 0.9, 1.0}) {
         for (double x : {0.5, 2.0, 10.0, 40.0}) {
            const RiceParams p{k, x};
            worst = std::max(worst, std::abs(rice_ie_lemma1_rhs(p, cfg).value - rice_ie_quad(p, cfg).value));
         }
      }
      rows.push_back({"rice lemma1 vs quadrature (abs)", worst, verify_threshold(1e-9, tol)});
   }
   {
      double worst = 0.0;
      for (double k : {0.1, 0.5, 0.9}) {
         for (double x : {0.5, 2.0, 10.0, 40.0}) {
            const RiceParams p{k, x};
            worst = std::max(worst, std::abs(rice_ie_marcum5(p, cfg).value - rice_ie_marcum6(p, cfg).value));
         }
      }
      rows.push_back({"rice marcum5 vs marcum6 (abs)", worst, verify_threshold(1e-9, tol)});
   }
   {
      double worst = 0.0;
      for (double m : {1.0, 2.0, 3.0}) {
         for (double r : {0.5, 1.0, 2.0}) {
            for (double B : {0.5, 1.0, 2.0}) {
               const double viaq = toronto_quad({m, 0.5 * (m - 1.0), r, B}, cfg).value;
               worst = std::max(worst, std::abs(toronto_marcum_case(m, r, B, cfg).value - viaq));
            }
         }
      }
      rows.push_back({"toronto marcum8 vs quadrature (abs)", worst, verify_threshold(1e-9, tol)});
   }
   {
      double worst = 0.0;
      for (auto [m, n] : {std::pair{1.0, 0.5}, std::pair{3.0, 2.5}}) {
         for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            for (double B : {0.5, 1.0, 2.0}) {
               const TorontoParams p{m, n, r, B};
               worst = std::max(worst, relative_gap(toronto_closed(p).value, toronto_quad(p, cfg).value));
            }
         }
      }
      rows.push_back({"toronto closed-form vs quadrature (rel)", worst, verify_threshold(1e-9, tol)});
   }
   {
      double worst = 0.0;
      for (auto [m, n] : {std::pair{1.0, 0.5}, std::pair{2.0, 1.5}, std::pair{3.0, 2.5}}) {
         for (double a : {0.5, 1.5, 2.0, 3.0, 5.0}) {
            for (double z : {0.5, 2.0, 10.0}) {
               const IlhiParams p{m, n, a, z};
               worst = std::max(worst, relative_gap(ilhi_closed(p).value, ilhi_quad(p, cfg).value));
            }
         }
      }
      rows.push_back({"ilhi closed-form vs quadrature (rel)", worst, verify_threshold(1e-9, tol)});
   }
   {
      double worst = 0.0;
      for (double k : {0.5, 0.95, 1.0}) {
         for (double x : {2.0, 8.0}) {
            const RiceParams p{k, x};
            worst = std::max(worst, std::abs(rice_ie_series4(p, kDefaultRiceTerms).value - rice_ie_quad(p, cfg).value));
         }
      }
      rows.push_back({"rice series4 vs quadrature (abs)", worst, verify_threshold(1e-8, tol)});
   }
   return rows;
}

inline void print_verify(const std::vector<VerifyRow> &rows, std::ostream &out)
{
   char line[160];
   std::snprintf(line, sizeof line, "%-42s %-10s %-10s %s\n", "identity", "residual", "threshold", "status");
   out << line;
   for (const auto &row : rows) {
      std::snprintf(line, sizeof line, "%-42s %-10.2e %-10.2e %s\n", row.identity.c_str(), row.residual,
                    row.threshold, row.pass() ? "PASS" : "FAIL");
      out << line;
   }
}

} // namespace ricebounds::cli

#endif // RICEBOUNDS_CLI_VERIFY_HPP
