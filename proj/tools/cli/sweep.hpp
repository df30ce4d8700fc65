#ifndef RICEBOUNDS_CLI_SWEEP_HPP
#define RICEBOUNDS_CLI_SWEEP_HPP

#include "point.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace ricebounds::cli {

/// One CSV column: a method plus parameter overrides, e.g. "quadrature@n=0.4".
struct MethodColumn {
   std::string label;
   Method method = Method::quadrature;
   ParamMap overrides;
};

struct SweepSpec {
   Function function = Function::rice;
   ParamMap fixed;
   std::string varying;
   double lo = 0.0;
   double hi = 1.0;
   int steps = 2;
   std::vector<MethodColumn> methods;

   void validate() const
   {
      if (steps < 2) {
         throw DomainError("sweep: steps must be >= 2");
      }
      if (!(lo < hi)) {
         throw DomainError("sweep: requires lo < hi");
      }
      if (!is_parameter_of(function, varying)) {
         throw DomainError("sweep: '" + varying + "' is not a parameter of " + std::string(to_string(function)));
      }
      if (fixed.count(varying) != 0) {
         throw DomainError("sweep: varying parameter '" + varying + "' is also fixed");
      }
      for (const auto &[name, value] : fixed) {
         if (!is_parameter_of(function, name)) {
            throw DomainError("sweep: '" + name + "' is not a parameter of " + std::string(to_string(function)));
         }
      }
      if (methods.empty()) {
         throw DomainError("sweep: at least one method is required");
      }
      for (const auto &col : methods) {
         if (col.overrides.count(varying) != 0) {
            throw DomainError("sweep: column '" + col.label + "' overrides the varying parameter");
         }
      }
   }

   double grid_point(int i) const
   {
      if (i == steps - 1) {
         return hi;
      }
      return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
   }
};

inline double parse_number(std::string_view text, std::string_view context)
{
   double value = 0.0;
   const char *first = text.data();
   const char *last = text.data() + text.size();
   auto [ptr, ec] = std::from_chars(first, last, value);
   if (ec != std::errc{} || ptr != last || text.empty()) {
      throw DomainError(std::string(context) + ": cannot parse number '" + std::string(text) + "'");
   }
   return value;
}

/// "name=value"
inline std::pair<std::string, double> parse_assignment(std::string_view text)
{
   const auto eq = text.find('=');
   if (eq == std::string_view::npos || eq == 0) {
      throw DomainError("expected name=value, got '" + std::string(text) + "'");
   }
   return {std::string(text.substr(0, eq)), parse_number(text.substr(eq + 1), text)};
}

/// "name:lo:hi:steps"
inline void parse_vary(std::string_view text, SweepSpec &spec)
{
   std::vector<std::string_view> parts;
   std::size_t start = 0;
   for (;;) {
      const auto colon = text.find(':', start);
      parts.push_back(text.substr(start, colon - start));
      if (colon == std::string_view::npos) {
         break;
      }
      start = colon + 1;
   }
   if (parts.size() != 4 || parts[0].empty()) {
      throw DomainError("expected --vary name:lo:hi:steps, got '" + std::string(text) + "'");
   }
   spec.varying = std::string(parts[0]);
   spec.lo = parse_number(parts[1], "--vary lo");
   spec.hi = parse_number(parts[2], "--vary hi");
   const double steps = parse_number(parts[3], "--vary steps");
   if (steps != static_cast<int>(steps)) {
      throw DomainError("--vary steps must be an integer");
   }
   spec.steps = static_cast<int>(steps);
}

/// "method" or "method@p=v,q=w"
inline MethodColumn parse_method_column(std::string_view text)
{
   MethodColumn col;
   col.label = std::string(text);
   const auto at = text.find('@');
   const auto name = text.substr(0, at);
   const auto method = parse_method(name);
   if (!method) {
      throw DomainError("unknown method '" + std::string(name) + "'");
   }
   col.method = *method;
   if (at == std::string_view::npos) {
      return col;
   }
   auto rest = text.substr(at + 1);
   while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto [key, value] = parse_assignment(rest.substr(0, comma));
      col.overrides[key] = value;
      if (comma == std::string_view::npos) {
         break;
      }
      rest = rest.substr(comma + 1);
   }
   return col;
}

/// Writes the CSV to `out` row by row in grid order; failed points become
/// empty cells with a warning on `warn`.
inline void run_sweep(const SweepSpec &spec, const EvalOptions &opt, std::ostream &out, std::ostream &warn)
{
   spec.validate();
   out << spec.varying;
   for (const auto &col : spec.methods) {
      out << ',' << col.label;
   }
   out << '\n';

   for (int i = 0; i < spec.steps; ++i) {
      const double v = spec.grid_point(i);
      out << format_value(v);
      for (const auto &col : spec.methods) {
         ParamMap params = spec.fixed;
         for (const auto &[key, value] : col.overrides) {
            params[key] = value;
         }
         params[spec.varying] = v;
         out << ',';
         try {
            out << format_value(evaluate(spec.function, col.method, params, opt).value);
         } catch (const std::exception &e) {
            warn << "warning: " << spec.varying << '=' << format_value(v) << " [" << col.label << "]: " << e.what()
                 << '\n';
         }
      }
      out << '\n';
   }
}

} // namespace ricebounds::cli

#endif // RICEBOUNDS_CLI_SWEEP_HPP
