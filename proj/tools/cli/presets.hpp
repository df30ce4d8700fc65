#ifndef RICEBOUNDS_CLI_PRESETS_HPP
#define RICEBOUNDS_CLI_PRESETS_HPP

// Sweeps that regenerate the data behind the six figures.
// Axis ranges and unstated parameters (Toronto B, ILHI a) are defaults that
// reproduce the curve shapes; every fixed value accepts an override.

#include "sweep.hpp"

#include <string>
#include <vector>

namespace ricebounds::cli {

struct Preset {
   std::string name;
   std::string description;
   SweepSpec spec;
};

inline std::vector<MethodColumn> columns(std::initializer_list<const char *> tokens)
{
   std::vector<MethodColumn> out;
   for (const char *t : tokens) {
      out.push_back(parse_method_column(t));
   }
   return out;
}

inline const std::vector<Preset> &presets()
{
   static const std::vector<Preset> all = [] {
      std::vector<Preset> p;
      p.push_back({"figure1", "Rice Ie and its bounds vs x at k=0.5",
                   {Function::rice, {{"k", 0.5}}, "x", 0.1, 20.0, 200,
                    columns({"quadrature", "bound-upper", "bound-lower"})}});
      p.push_back({"figure2", "Rice Ie and its bounds vs k at x=7",
                   {Function::rice, {{"x", 7.0}}, "k", 0.01, 0.99, 99,
                    columns({"quadrature", "bound-upper", "bound-lower"})}});
      p.push_back({"figure3", "Rice Ie and the lower bound vs k at x=80 (use --set x=40 for the alternative)",
                   {Function::rice, {{"x", 80.0}}, "k", 0.01, 0.99, 99, columns({"quadrature", "bound-lower"})}});
      p.push_back({"figure4", "Toronto T_B(1,n,r) vs r at B=2, closed form n=0.5 and quadrature n=0.4,0.5,0.6",
                   {Function::toronto, {{"m", 1.0}, {"B", 2.0}}, "r", 0.05, 4.0, 80,
                    columns({"closed-form@n=0.5", "quadrature@n=0.4", "quadrature@n=0.5", "quadrature@n=0.6"})}});
      p.push_back({"figure5", "Toronto T_B(3,n,r) vs r at B=2, closed form n=2.5 and quadrature n=2.4,2.5,2.6",
                   {Function::toronto, {{"m", 3.0}, {"B", 2.0}}, "r", 0.05, 4.0, 80,
                    columns({"closed-form@n=2.5", "quadrature@n=2.4", "quadrature@n=2.5", "quadrature@n=2.6"})}});
      p.push_back({"figure6", "ILHI vs z at a=2 for (m,n) = (1,0.5), (3,2.5) and bounds at (3,2)",
                   {Function::ilhi, {{"a", 2.0}}, "z", 0.1, 10.0, 100,
                    columns({"closed-form@m=1,n=0.5", "quadrature@m=1,n=0.5", "closed-form@m=3,n=2.5",
                             "quadrature@m=3,n=2.5", "bound-lower@m=3,n=2", "quadrature@m=3,n=2",
                             "bound-upper@m=3,n=2"})}});
      return p;
   }();
   return all;
}

inline const Preset *find_preset(const std::string &name)
{
   for (const auto &p : presets()) {
      if (p.name == name) {
         return &p;
      }
   }
   return nullptr;
}

} // namespace ricebounds::cli

#endif // RICEBOUNDS_CLI_PRESETS_HPP
