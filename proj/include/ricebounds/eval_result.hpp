#ifndef RICEBOUNDS_EVAL_RESULT_HPP
#define RICEBOUNDS_EVAL_RESULT_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace ricebounds {

/// Which representation produced a value.
enum class Method {
   quadrature,
   alt_integral,
   series3,
   series4,
   marcum5,
   marcum6,
   lemma1,
   series9,
   series10,
   marcum8,
   closed_form,
   bound_upper,
   bound_lower,
};

inline constexpr std::array<std::pair<Method, std::string_view>, 13> kMethodNames = {{
    {Method::quadrature, "quadrature"},
    {Method::alt_integral, "alt-integral"},
    {Method::series3, "series3"},
    {Method::series4, "series4"},
    {Method::marcum5, "marcum5"},
    {Method::marcum6, "marcum6"},
    {Method::lemma1, "lemma1"},
    {Method::series9, "series9"},
    {Method::series10, "series10"},
    {Method::marcum8, "marcum8"},
    {Method::closed_form, "closed-form"},
    {Method::bound_upper, "bound-upper"},
    {Method::bound_lower, "bound-lower"},
}};

constexpr std::string_view to_string(Method m)
{
   for (const auto &[method, name] : kMethodNames) {
      if (method == m) {
         return name;
      }
   }
   return "unknown";
}

constexpr std::optional<Method> parse_method(std::string_view name)
{
   for (const auto &[method, label] : kMethodNames) {
      if (label == name) {
         return method;
      }
   }
   return std::nullopt;
}

/// A computed value, the representation that produced it, and an error
/// estimate. est_error is rigorous-ish for quadrature (engine estimate), the
/// last-term magnitude for series (heuristic), and 0 for closed forms.
struct EvalResult {
   double value = 0.0;
   Method method = Method::quadrature;
   double est_error = 0.0;
};

} // namespace ricebounds

#endif // RICEBOUNDS_EVAL_RESULT_HPP
