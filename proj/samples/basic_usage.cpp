// Evaluate each function by its defining integral and by its closed forms.

#include "ricebounds/ricebounds.hpp"

#include <cstdio>

int main()
{
   using namespace ricebounds;

   const RiceParams rice{0.5, 7.0};
   std::printf("Ie(0.5, 7)        quadrature  %.15f\n", rice_ie_quad(rice).value);
   std::printf("                  lower bound %.15f\n", rice_ie_lower(rice).value);
   std::printf("                  upper bound %.15f\n", rice_ie_upper(rice).value);

   const TorontoParams toronto{1.0, 0.5, 1.0, 2.0};
   std::printf("T_2(1, 0.5, 1)    quadrature  %.15f\n", toronto_quad(toronto).value);
   std::printf("                  closed form %.15f\n", toronto_closed(toronto).value);

   const IlhiParams ilhi{3.0, 2.0, 3.0, 2.0};
   std::printf("Ie_{3,2}(2; 3)    quadrature  %.15f\n", ilhi_quad(ilhi).value);
   std::printf("                  bracket     [%.15f, %.15f]\n", ilhi_lower(ilhi).value, ilhi_upper(ilhi).value);

   try {
      QuadConfig strict;
      strict.rel_tol = 1e-20;
      strict.abs_tol = 1e-30;
      rice_ie_quad(rice, strict);
   } catch (const QuadratureError &e) {
      std::printf("tolerance 1e-20 rejected: best estimate %.15f\n", e.best_estimate());
   }
   return 0;
}
