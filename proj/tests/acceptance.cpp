// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.

#include "ricebounds/ricebounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#ifndef RICEBOUNDS_CLI_PATH
#error "RICEBOUNDS_CLI_PATH must point at the CLI binary"
#endif

namespace {

using namespace ricebounds;
using Clock = std::chrono::steady_clock;

// Ground truth: relative tolerance 1e-12 with a negligible absolute floor.
QuadConfig oracle()
{
   QuadConfig cfg;
   cfg.rel_tol = 1e-12;
   cfg.abs_tol = 1e-300;
   return cfg;
}

struct Outcome {
   bool pass = false;
   std::string detail;
};

int failures = 0;

void report(int id, const char *title, const std::function<Outcome()> &body, double budget_s = 0.0)
{
   const auto t0 = Clock::now();
   Outcome out;
   try {
      out = body();
   } catch (const std::exception &e) {
      out = {false, std::string("exception: ") + e.what()};
   }
   const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
   if (budget_s > 0.0 && secs >= budget_s) {
      out.pass = false;
      out.detail += " [runtime budget exceeded]";
   }
   std::printf("criterion %d %-4s %s: %s (%.2fs)\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
   std::fflush(stdout);
   if (!out.pass) {
      ++failures;
   }
}

std::string fmt(const char *f, double v)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, f, v);
   return buf;
}

std::vector<double> kgrid(double lo, double step, int count)
{
   std::vector<double> out;
   for (int i = 0; i < count; ++i) {
      out.push_back(std::round((lo + step * i) * 100.0) / 100.0);
   }
   return out;
}

const std::vector<double> kRiceX = {0.5, 1.0, 2.0, 5.0, 7.0, 10.0, 20.0, 40.0, 80.0};
const std::vector<double> kTorontoR = {0.25, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> kTorontoB = {0.5, 1.0, 2.0};

Outcome lower_bound_accuracy()
{
   const auto ks = kgrid(0.05, 0.05, 18);
   int below_1e6 = 0;
   double worst = 0.0;
   double worst_k = 0.0;
   for (double k : ks) {
      const RiceParams p{k, 80.0};
      const double truth = rice_ie_quad(p, oracle()).value;
      const double rel = std::abs(truth - rice_ie_lower(p).value) / truth;
      below_1e6 += rel < 1e-6 ? 1 : 0;
      if (rel > worst) {
         worst = rel;
         worst_k = k;
      }
   }
   const double frac = static_cast<double>(below_1e6) / static_cast<double>(ks.size());
   const bool pass = frac >= 0.9 && worst < 1e-5;
   return {pass, std::to_string(below_1e6) + "/" + std::to_string(ks.size()) + " below 1e-6 (" +
                     fmt("%.1f", 100.0 * frac) + "%), max rel " + fmt("%.3e", worst) + " at k=" + fmt("%.2f", worst_k) +
                     " (need all < 1e-5)"};
}

Outcome bound_ordering()
{
   int violations = 0;
   std::string first;
   for (double k : kgrid(0.1, 0.1, 9)) {
      for (double x : kRiceX) {
         const RiceParams p{k, x};
         const double lo = rice_ie_lower(p).value;
         const double mid = rice_ie_quad(p, oracle()).value;
         const double hi = rice_ie_upper(p).value;
         if (!(lo < mid && mid < hi)) {
            if (violations++ == 0) {
               first = "k=" + fmt("%.1f", k) + " x=" + fmt("%g", x) + " lower-Ie=" + fmt("%.2e", lo - mid) +
                       " upper-Ie=" + fmt("%.2e", hi - mid);
            }
         }
      }
   }
   auto gaps = [](double x) {
      const RiceParams p{0.5, x};
      const double mid = rice_ie_quad(p, oracle()).value;
      return std::pair{rice_ie_upper(p).value - mid, mid - rice_ie_lower(p).value};
   };
   const auto [up05, low05] = gaps(0.5);
   const auto [up20, low20] = gaps(20.0);
   const bool shape = up05 < low05 && up20 > low20;
   std::string detail = std::to_string(violations) + " ordering violations on 81 points";
   if (violations > 0) {
      detail += " (first: " + first + ")";
   }
   detail += "; k=0.5 gaps x=0.5 upper " + fmt("%.2e", up05) + " vs lower " + fmt("%.2e", low05) + ", x=20 upper " +
             fmt("%.2e", up20) + " vs lower " + fmt("%.2e", low20);
   return {violations == 0 && shape, detail};
}

Outcome rice_equivalence()
{
   double worst = 0.0;
   for (double k : kgrid(0.1, 0.1, 9)) {
      for (double x : kRiceX) {
         const RiceParams p{k, x};
         const double v[] = {rice_ie_quad(p, oracle()).value, rice_ie_alt_integral(p, oracle()).value,
                             rice_ie_marcum5(p, oracle()).value, rice_ie_marcum6(p, oracle()).value,
                             rice_ie_lemma1_rhs(p, oracle()).value};
         const auto [lo, hi] = std::minmax_element(std::begin(v), std::end(v));
         worst = std::max(worst, *hi - *lo);
      }
   }
   return {worst <= 1e-9, "max pairwise |diff| " + fmt("%.3e", worst) + " (limit 1e-9)"};
}

Outcome toronto_closed_form()
{
   double worst = 0.0;
   for (auto [m, n] : {std::pair{1.0, 0.5}, std::pair{3.0, 2.5}}) {
      for (double r : kTorontoR) {
         for (double B : kTorontoB) {
            const TorontoParams p{m, n, r, B};
            const double q = toronto_quad(p, oracle()).value;
            worst = std::max(worst, std::abs(toronto_closed(p).value - q) / q);
         }
      }
   }
   return {worst <= 1e-9, "max rel " + fmt("%.3e", worst) + " (limit 1e-9)"};
}

Outcome toronto_sandwich()
{
   int violations = 0;
   std::string listing;
   for (auto [m, n] : {std::pair{1.0, 1.0}, std::pair{3.0, 2.0}}) {
      for (double r : kTorontoR) {
         for (double B : kTorontoB) {
            const TorontoParams p{m, n, r, B};
            const double q = toronto_quad(p, oracle()).value;
            const double lo = toronto_lower(p).value;
            const double hi = toronto_upper(p).value;
            if (!(lo < q && q < hi)) {
               ++violations;
               listing += " (" + fmt("%g", m) + "," + fmt("%g", n) + "," + fmt("%g", r) + "," + fmt("%g", B) + ")";
            }
         }
      }
   }
   return {violations == 0, std::to_string(violations) + "/30 points violate lower < T < upper;" + listing};
}

Outcome toronto_marcum()
{
   double worst = 0.0;
   for (double m : {1.0, 2.0, 3.0}) {
      for (double r : {0.5, 1.0, 2.0}) {
         for (double B : {0.5, 1.0, 2.0}) {
            const double q = toronto_quad({m, 0.5 * (m - 1.0), r, B}, oracle()).value;
            worst = std::max(worst, std::abs(toronto_marcum_case(m, r, B, oracle()).value - q));
         }
      }
   }
   return {worst <= 1e-9, "max |diff| " + fmt("%.3e", worst) + " (limit 1e-9)"};
}

Outcome ilhi_closed_form()
{
   const double as[] = {1.5, 2.0, 3.0, 5.0};
   const double zs[] = {0.5, 1.0, 2.0, 5.0, 10.0};
   double worst = 0.0;
   for (auto [m, n] : {std::pair{1.0, 0.5}, std::pair{2.0, 1.5}, std::pair{3.0, 2.5}}) {
      for (double a : as) {
         for (double z : zs) {
            const IlhiParams p{m, n, a, z};
            const double q = ilhi_quad(p, oracle()).value;
            worst = std::max(worst, std::abs(ilhi_closed(p).value - q) / std::abs(q));
         }
      }
   }
   int violations = 0;
   for (auto [m, n] : {std::pair{2.0, 1.0}, std::pair{3.0, 2.0}}) {
      for (double a : as) {
         for (double z : zs) {
            const IlhiParams p{m, n, a, z};
            const double q = ilhi_quad(p, oracle()).value;
            if (!(ilhi_lower(p).value < q && q < ilhi_upper(p).value)) {
               ++violations;
            }
         }
      }
   }
   return {worst <= 1e-9 && violations == 0, "max rel " + fmt("%.3e", worst) + " (limit 1e-9); sandwich violations " +
                                                 std::to_string(violations) + "/40 at (m,n) in {(2,1),(3,2)}"};
}

Outcome series_regimes()
{
   const RiceParams s3{0.1, 30.0};
   const RiceParams s4{0.95, 8.0};
   const double d3 = std::abs(rice_ie_series3(s3, 40).value - rice_ie_quad(s3, oracle()).value);
   const double d4 = std::abs(rice_ie_series4(s4, 40).value - rice_ie_quad(s4, oracle()).value);
   double d10 = 0.0;
   for (double r : kTorontoR) {
      const TorontoParams p{1.0, 0.5, r, 2.0};
      d10 = std::max(d10, std::abs(toronto_series10(p, 100).value - toronto_quad(p, oracle()).value));
   }
   return {d3 <= 1e-8 && d4 <= 1e-8 && d10 <= 1e-8, "series3 " + fmt("%.2e", d3) + ", series4 " + fmt("%.2e", d4) +
                                                        ", series10 (m=1,n=0.5,B=2, r-grid) " + fmt("%.2e", d10) +
                                                        " (limit 1e-8)"};
}

std::string slurp(const std::string &path)
{
   std::ifstream in(path, std::ios::binary);
   return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism()
{
   const std::string a = "acceptance_figure1_a.csv";
   const std::string b = "acceptance_figure1_b.csv";
   for (const auto &path : {a, b}) {
      const std::string cmd = std::string("\"") + RICEBOUNDS_CLI_PATH + "\" preset run figure1 --out " + path;
      if (std::system(cmd.c_str()) != 0) {
         return {false, "CLI run failed: " + cmd};
      }
   }
   const std::string ca = slurp(a);
   const std::string cb = slurp(b);
   const bool same = !ca.empty() && ca == cb;
   return {same, std::to_string(ca.size()) + " bytes, " + (same ? "identical" : "different")};
}

} // namespace

int main()
{
   report(1, "lower-bound accuracy at x=80", lower_bound_accuracy, 5.0);
   report(2, "Rice bound ordering", bound_ordering, 10.0);
   report(3, "Rice representation equivalence", rice_equivalence, 30.0);
   report(4, "Toronto closed form vs quadrature", toronto_closed_form, 10.0);
   report(5, "Toronto sandwich", toronto_sandwich);
   report(6, "Toronto-Marcum identity", toronto_marcum);
   report(7, "ILHI closed form and sandwich", ilhi_closed_form);
   report(8, "series regime checks", series_regimes);
   report(9, "figure1 CSV determinism", determinism);
   std::printf("%d of 9 criteria failed\n", failures);
   return failures;
}
