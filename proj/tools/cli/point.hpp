#ifndef RICEBOUNDS_CLI_POINT_HPP
#define RICEBOUNDS_CLI_POINT_HPP

// Maps (function, method, named parameters) onto the library entry points.

#include "ricebounds/ricebounds.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ricebounds::cli {

enum class Function { rice, toronto, ilhi };

using ParamMap = std::map<std::string, double>;

inline std::optional<Function> parse_function(std::string_view name)
{
   if (name == "rice") {
      return Function::rice;
   }
   if (name == "toronto") {
      return Function::toronto;
   }
   if (name == "ilhi") {
      return Function::ilhi;
   }
   return std::nullopt;
}

inline std::string_view to_string(Function f)
{
   switch (f) {
   case Function::rice:
      return "rice";
   case Function::toronto:
      return "toronto";
   case Function::ilhi:
      return "ilhi";
   }
   return "unknown";
}

inline const std::vector<std::string> &parameter_names(Function f)
{
   static const std::vector<std::string> rice{"k", "x"};
   static const std::vector<std::string> toronto{"m", "n", "r", "B"};
   static const std::vector<std::string> ilhi{"m", "n", "a", "z"};
   switch (f) {
   case Function::rice:
      return rice;
   case Function::toronto:
      return toronto;
   case Function::ilhi:
      return ilhi;
   }
   return rice;
}

inline bool is_parameter_of(Function f, const std::string &name)
{
   for (const auto &p : parameter_names(f)) {
      if (p == name) {
         return true;
      }
   }
   return false;
}

struct EvalOptions {
   QuadConfig quad;
   /// Series truncation; 0 picks the method default.
   int terms = 0;
};

inline constexpr int kDefaultRiceTerms = 40;
inline constexpr int kDefaultTorontoTerms = 100;

namespace detail {

inline double require_param(const ParamMap &params, Function f, const std::string &name)
{
   auto it = params.find(name);
   if (it == params.end()) {
      throw DomainError(std::string(to_string(f)) + ": missing parameter --" + name);
   }
   return it->second;
}

inline int terms_or(const EvalOptions &opt, int fallback) { return opt.terms > 0 ? opt.terms : fallback; }

[[noreturn]] inline void unsupported(Function f, Method m)
{
   throw DomainError("method '" + std::string(to_string(m)) + "' is not available for function '" +
                     std::string(to_string(f)) + "'");
}

inline EvalResult eval_rice(Method method, const ParamMap &params, const EvalOptions &opt)
{
   const RiceParams p{require_param(params, Function::rice, "k"), require_param(params, Function::rice, "x")};
   switch (method) {
   case Method::quadrature:
      return rice_ie_quad(p, opt.quad);
   case Method::alt_integral:
      return rice_ie_alt_integral(p, opt.quad);
   case Method::series3:
      return rice_ie_series3(p, terms_or(opt, kDefaultRiceTerms));
   case Method::series4:
      return rice_ie_series4(p, terms_or(opt, kDefaultRiceTerms));
   case Method::marcum5:
      return rice_ie_marcum5(p, opt.quad);
   case Method::marcum6:
      return rice_ie_marcum6(p, opt.quad);
   case Method::lemma1:
      return rice_ie_lemma1_rhs(p, opt.quad);
   case Method::bound_upper:
      return rice_ie_upper(p);
   case Method::bound_lower:
      return rice_ie_lower(p);
   default:
      unsupported(Function::rice, method);
   }
}

inline EvalResult eval_toronto(Method method, const ParamMap &params, const EvalOptions &opt)
{
   const double m = require_param(params, Function::toronto, "m");
   const double r = require_param(params, Function::toronto, "r");
   const double B = require_param(params, Function::toronto, "B");
   if (method == Method::marcum8) {
      // n is implied; accept it only when it matches.
      if (auto it = params.find("n"); it != params.end() && it->second != 0.5 * (m - 1.0)) {
         throw DomainError("toronto marcum8: requires n = (m - 1)/2");
      }
      return toronto_marcum_case(m, r, B, opt.quad);
   }
   const TorontoParams p{m, require_param(params, Function::toronto, "n"), r, B};
   switch (method) {
   case Method::quadrature:
      return toronto_quad(p, opt.quad);
   case Method::series9:
      return toronto_series9(p, terms_or(opt, kDefaultTorontoTerms));
   case Method::series10:
      return toronto_series10(p, terms_or(opt, kDefaultTorontoTerms));
   case Method::closed_form:
      return toronto_closed(p);
   case Method::bound_upper:
      return toronto_upper(p);
   case Method::bound_lower:
      return toronto_lower(p);
   default:
      unsupported(Function::toronto, method);
   }
}

inline EvalResult eval_ilhi(Method method, const ParamMap &params, const EvalOptions &opt)
{
   const IlhiParams p{require_param(params, Function::ilhi, "m"), require_param(params, Function::ilhi, "n"),
                      require_param(params, Function::ilhi, "a"), require_param(params, Function::ilhi, "z")};
   switch (method) {
   case Method::quadrature:
      return ilhi_quad(p, opt.quad);
   case Method::closed_form:
      return ilhi_closed(p);
   case Method::bound_upper:
      return ilhi_upper(p);
   case Method::bound_lower:
      return ilhi_lower(p);
   default:
      unsupported(Function::ilhi, method);
   }
}

} // namespace detail

inline EvalResult evaluate(Function f, Method method, const ParamMap &params, const EvalOptions &opt = {})
{
   switch (f) {
   case Function::rice:
      return detail::eval_rice(method, params, opt);
   case Function::toronto:
      return detail::eval_toronto(method, params, opt);
   case Function::ilhi:
      return detail::eval_ilhi(method, params, opt);
   }
   throw DomainError("unknown function");
}

/// 17 significant figures, fixed layout.
inline std::string format_value(double v)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, "%.16e", v);
   return buf;
}

/// 3 significant figures.
inline std::string format_error(double v)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, "%.2e", v);
   return buf;
}

inline std::string format_eval_line(Function f, const EvalResult &r)
{
   return std::string(to_string(f)) + " " + std::string(to_string(r.method)) + " value=" + format_value(r.value) +
          " est_error=" + format_error(r.est_error);
}

} // namespace ricebounds::cli

#endif // RICEBOUNDS_CLI_POINT_HPP
