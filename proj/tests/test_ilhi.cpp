#include "ricebounds/ilhi.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ricebounds;
using testsupport::rel_diff;

namespace {

struct Reference {
   IlhiParams p;
   double value;
};

// mpmath, 40 digits.
constexpr Reference kIlhi[] = {
    {{1, 0.5, 2.0, 3.0}, 0.2460817633203212406},       {{2, 1.5, 1.5, 5.0}, 1.0672560753941568082},
    {{3, 2.5, 3.0, 2.0}, 0.0067403348633101154269},    {{1, 0.0, 2.0, 3.0}, 0.34387999138454053551},
    {{3, 2.0, 3.0, 2.0}, 0.013630746091209868859},     {{3, 1.5, 3.0, 2.0}, 0.025665985723458685716},
    {{1, 0.5, 0.5, 3.0}, 3.4694199716188153103},       {{2, 1.5, 1.5, 10.0}, 1.935968747501977809},
};

double gl_reference(const IlhiParams &p)
{
   auto f = [&p](double x) { return std::pow(x, p.m) * std::exp(-p.a * x) * std::cyl_bessel_i(p.n, x); };
   return testsupport::composite_gauss_legendre(f, 0.0, p.z, 200);
}

} // namespace

TEST(IlhiQuad, ReferenceValues)
{
   for (const auto &r : kIlhi) {
      EXPECT_LT(rel_diff(ilhi_quad(r.p).value, r.value), 1e-11) << r.p.m << "," << r.p.n << "," << r.p.a << ","
                                                                << r.p.z;
   }
}

TEST(IlhiClosed, ReferenceValues)
{
   for (const auto &r : kIlhi) {
      if (!is_half_integer(r.p.n)) {
         continue;
      }
      EXPECT_LT(rel_diff(ilhi_closed(r.p).value, r.value), 1e-13) << r.p.m << "," << r.p.n << "," << r.p.a << ","
                                                                  << r.p.z;
   }
}

TEST(IlhiClosed, SingleTermForLowestOrder)
{
   // n = 1/2: [gamma(P, (a-1)z)/(a-1)^P - gamma(P, (a+1)z)/(a+1)^P] / sqrt(2 pi), P = m + 1/2
   const double m = 1.0, a = 2.0, z = 3.0, P = m + 0.5;
   const double expected = (gamma_lower(P, (a - 1.0) * z) / std::pow(a - 1.0, P) -
                            gamma_lower(P, (a + 1.0) * z) / std::pow(a + 1.0, P)) /
                           std::sqrt(2.0 * std::numbers::pi);
   EXPECT_LT(rel_diff(ilhi_closed({m, 0.5, a, z}).value, expected), 1e-15);
}

TEST(IlhiClosed, RateAtOrBelowOne)
{
   for (double a : {1.0, 0.5, 0.0, -0.5}) {
      const IlhiParams p{2, 1.5, a, 4.0};
      EXPECT_LT(rel_diff(ilhi_closed(p).value, ilhi_quad(p).value), 1e-11) << "a=" << a;
   }
}

TEST(IlhiClosed, SmallUpperLimitStaysAccurate)
{
   // Terms of order z^(m-k+1/2) cancel down to z^(m+n+1).
   const IlhiParams p{3, 2.5, 2.0, 1e-3};
   const double series = [&] {
      // x^m e^-ax I_n(x) expanded term by term and integrated.
      double sum = 0.0;
      for (int j = 0; j < 20; ++j) {
         for (int i = 0; i < 20; ++i) {
            const double power = p.m + p.n + 2 * j + i + 1;
            sum += std::pow(-p.a, i) / std::tgamma(i + 1.0) / (std::pow(2.0, 2 * j + p.n) * std::tgamma(j + 1.0) *
                                                                std::tgamma(j + p.n + 1.0)) *
                   std::pow(p.z, power) / power;
         }
      }
      return sum;
   }();
   EXPECT_LT(rel_diff(ilhi_closed(p).value, series), 1e-13);
}

TEST(IlhiClosed, DomainErrors)
{
   EXPECT_THROW(ilhi_closed({2, 1.0, 2.0, 1.0}), DomainError);
   EXPECT_THROW(ilhi_closed({1, 1.5, 2.0, 1.0}), DomainError);
   EXPECT_THROW(ilhi_closed({1, 0.5, std::nan(""), 1.0}), DomainError);
   EXPECT_THROW(ilhi_closed({1, 0.5, 2.0, -1.0}), DomainError);
   EXPECT_EQ(ilhi_closed({1, 0.5, 2.0, 0.0}).value, 0.0);
}

TEST(IlhiQuad, EdgeCases)
{
   EXPECT_EQ(ilhi_quad({1, 0.5, 2.0, 0.0}).value, 0.0);
   EXPECT_THROW(ilhi_quad({1, 0.5, -2.0, 400.0}), OverflowError);
   EXPECT_THROW(ilhi_quad({-1, 0.5, 2.0, 1.0}), DomainError);
}

TEST(IlhiQuad, ContinuousAcrossUnitRate)
{
   const double below = ilhi_quad({2, 1.0, 1.0 - 1e-6, 5.0}).value;
   const double at = ilhi_quad({2, 1.0, 1.0, 5.0}).value;
   const double above = ilhi_quad({2, 1.0, 1.0 + 1e-6, 5.0}).value;
   EXPECT_GT(below, at);
   EXPECT_GT(at, above);
   EXPECT_LT(rel_diff(below, above), 1e-4);
   EXPECT_NEAR(at - above, below - at, 1e-9 * at);
}

TEST(IlhiBounds, ReferenceSandwich)
{
   const IlhiParams p{3, 2.0, 3.0, 2.0};
   EXPECT_LT(rel_diff(ilhi_lower(p).value, 0.0067403348633101154269), 1e-13);
   EXPECT_LT(rel_diff(ilhi_upper(p).value, 0.025665985723458685716), 1e-13);
   const double q = ilhi_quad(p).value;
   EXPECT_LT(ilhi_lower(p).value, q);
   EXPECT_GT(ilhi_upper(p).value, q);
   EXPECT_LT(ilhi_lower({1, 0.0, 2.0, 3.0}).value, 0.34387999138454053551);
}

TEST(IlhiBounds, DomainErrors)
{
   EXPECT_THROW(ilhi_upper({1, 0.0, 2.0, 3.0}), DomainError);
   EXPECT_THROW(ilhi_lower({1, 1.0, 2.0, 3.0}), DomainError);
   EXPECT_THROW(ilhi_lower({2, 0.5, 2.0, 3.0}), DomainError);
   EXPECT_EQ(ilhi_lower({2, 1.0, 2.0, 0.0}).value, 0.0);
   EXPECT_EQ(ilhi_upper({2, 1.0, 2.0, 0.0}).value, 0.0);
}

TEST(IlhiProperty, ClosedFormMatchesQuadrature)
{
   for (int trial = 0; trial < 150; ++trial) {
      const double n = testsupport::uniform_int(0, 3) + 0.5;
      const double m = n + testsupport::uniform_int(0, 3) + (testsupport::uniform_int(0, 1) == 0 ? 0.0 : 0.25);
      const double a = testsupport::uniform(-0.5, 6.0);
      const double z = testsupport::uniform(0.05, 12.0);
      const IlhiParams p{m, n, a, z};
      EXPECT_LT(rel_diff(ilhi_closed(p).value, ilhi_quad(p, testsupport::tight()).value), 1e-11) << m << "," << n << "," << a << "," << z;
   }
}

TEST(IlhiProperty, QuadratureMatchesGaussLegendre)
{
   for (int trial = 0; trial < 60; ++trial) {
      // Integer m and n keep the integrand smooth, where the fixed rule is a valid oracle.
      const IlhiParams p{static_cast<double>(testsupport::uniform_int(0, 4)),
                         static_cast<double>(testsupport::uniform_int(0, 3)), testsupport::uniform(0.5, 5.0),
                         testsupport::uniform(0.1, 10.0)};
      EXPECT_LT(rel_diff(ilhi_quad(p, testsupport::tight()).value, gl_reference(p)), 1e-10) << p.m << "," << p.n << "," << p.a << ","
                                                                      << p.z;
   }
}

TEST(IlhiProperty, StrictlyDecreasingInOrder)
{
   for (int trial = 0; trial < 60; ++trial) {
      const double m = testsupport::uniform(0.0, 4.0);
      const double a = testsupport::uniform(0.5, 5.0);
      const double z = testsupport::uniform(0.1, 10.0);
      double previous = ilhi_quad({m, 0.0, a, z}).value;
      for (double n : {0.5, 1.0, 1.5, 2.0}) {
         const double v = ilhi_quad({m, n, a, z}).value;
         EXPECT_LT(v, previous) << m << "," << n << "," << a << "," << z;
         previous = v;
      }
   }
}

TEST(IlhiProperty, NondecreasingInUpperLimit)
{
   for (int trial = 0; trial < 60; ++trial) {
      const double m = testsupport::uniform(0.0, 4.0);
      const double n = testsupport::uniform(0.0, 3.0);
      const double a = testsupport::uniform(0.0, 5.0);
      const double z = testsupport::uniform(0.1, 10.0);
      EXPECT_LE(ilhi_quad({m, n, a, z}).value, ilhi_quad({m, n, a, z + 0.5}).value);
   }
}

TEST(IlhiProperty, SandwichAtIntegerOrders)
{
   for (int trial = 0; trial < 80; ++trial) {
      const double n = testsupport::uniform_int(1, 3);
      const double m = n + 0.5 + testsupport::uniform_int(0, 2);
      const double a = testsupport::uniform(1.1, 6.0);
      const double z = testsupport::uniform(0.1, 12.0);
      const IlhiParams p{m, n, a, z};
      const double q = ilhi_quad(p).value;
      EXPECT_LT(ilhi_lower(p).value, q) << m << "," << n << "," << a << "," << z;
      EXPECT_GT(ilhi_upper(p).value, q) << m << "," << n << "," << a << "," << z;
   }
}
