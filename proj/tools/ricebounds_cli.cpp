// ricebounds command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 numerical error (quadrature tolerance, overflow, non-convergence).

#include "cli/point.hpp"
#include "cli/presets.hpp"
#include "cli/sweep.hpp"
#include "cli/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ricebounds;
using namespace ricebounds::cli;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// RICEBOUNDS_TOL replaces the default rel_tol; --tol replaces abs_tol and rel_tol.
QuadConfig quad_config(std::optional<double> tol)
{
   QuadConfig cfg;
   if (const char *env = std::getenv("RICEBOUNDS_TOL"); env != nullptr && *env != '\0') {
      cfg.rel_tol = parse_number(env, "RICEBOUNDS_TOL");
   }
   if (tol) {
      cfg.abs_tol = *tol;
      cfg.rel_tol = *tol;
   }
   cfg.validate();
   return cfg;
}

Function require_function(const std::string &name)
{
   auto f = parse_function(name);
   if (!f) {
      throw DomainError("unknown function '" + name + "' (expected rice, toronto or ilhi)");
   }
   return *f;
}

template <class Body>
void write_output(const std::string &path, Body &&body)
{
   if (path.empty() || path == "-") {
      body(std::cout);
      return;
   }
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if (!out) {
      throw DomainError("cannot open output file '" + path + "'");
   }
   body(out);
   if (!out) {
      throw DomainError("failed writing '" + path + "'");
   }
}

struct EvalArgs {
   std::string function;
   std::string method = "quadrature";
   std::optional<double> k, x, m, n, r, B, a, z, tol;
   int terms = 0;
};

struct SweepArgs {
   std::string function;
   std::vector<std::string> fixed;
   std::string vary;
   std::vector<std::string> methods;
   std::string out;
   std::optional<double> tol;
};

struct PresetArgs {
   std::string name;
   std::vector<std::string> sets;
   std::optional<int> steps;
   std::string out;
   std::optional<double> tol;
};

int run_eval(const EvalArgs &args)
{
   const Function f = require_function(args.function);
   const auto method = parse_method(args.method);
   if (!method) {
      throw DomainError("unknown method '" + args.method + "'");
   }
   ParamMap params;
   const std::pair<const char *, const std::optional<double> *> named[] = {
       {"k", &args.k}, {"x", &args.x}, {"m", &args.m}, {"n", &args.n},
       {"r", &args.r}, {"B", &args.B}, {"a", &args.a}, {"z", &args.z}};
   for (const auto &[name, value] : named) {
      if (value->has_value()) {
         if (!is_parameter_of(f, name)) {
            throw DomainError("--" + std::string(name) + " is not a parameter of " + std::string(to_string(f)));
         }
         params[name] = **value;
      }
   }
   EvalOptions opt{quad_config(args.tol), args.terms};
   std::cout << format_eval_line(f, evaluate(f, *method, params, opt)) << '\n';
   return 0;
}

int run_sweep_command(const SweepArgs &args)
{
   SweepSpec spec;
   spec.function = require_function(args.function);
   for (const auto &item : args.fixed) {
      const auto [name, value] = parse_assignment(item);
      spec.fixed[name] = value;
   }
   parse_vary(args.vary, spec);
   for (const auto &token : args.methods) {
      spec.methods.push_back(parse_method_column(token));
   }
   spec.validate();
   const EvalOptions opt{quad_config(args.tol), 0};
   write_output(args.out, [&](std::ostream &os) { run_sweep(spec, opt, os, std::cerr); });
   return 0;
}

int run_preset(const PresetArgs &args)
{
   const Preset *preset = find_preset(args.name);
   if (preset == nullptr) {
      throw DomainError("unknown preset '" + args.name + "' (see `preset list`)");
   }
   SweepSpec spec = preset->spec;
   for (const auto &item : args.sets) {
      const auto [name, value] = parse_assignment(item);
      if (name == spec.varying) {
         throw DomainError("--set cannot fix the swept parameter '" + name + "'");
      }
      spec.fixed[name] = value;
   }
   if (args.steps) {
      spec.steps = *args.steps;
   }
   spec.validate();
   const EvalOptions opt{quad_config(args.tol), 0};
   write_output(args.out, [&](std::ostream &os) { run_sweep(spec, opt, os, std::cerr); });
   return 0;
}

int run_verify_command(std::optional<double> tol_flag)
{
   const double tol = quad_config(tol_flag).rel_tol;
   const auto rows = run_verify(tol);
   print_verify(rows, std::cout);
   for (const auto &row : rows) {
      if (!row.pass()) {
         std::cerr << "verify: identity failed: " << row.identity << '\n';
         return kExitVerifyFailed;
      }
   }
   std::cout << "PASS\n";
   return 0;
}

} // namespace

int main(int argc, char **argv)
{
   CLI::App app{"Rice Ie, incomplete Toronto and incomplete Lipschitz-Hankel integrals with bounds"};
   app.require_subcommand(1);

   EvalArgs eval_args;
   auto *eval = app.add_subcommand("eval", "Evaluate one function at one point");
   eval->add_option("function", eval_args.function, "rice | toronto | ilhi")->required();
   eval->add_option("--method", eval_args.method, "Representation (quadrature, closed-form, bound-upper, ...)");
   eval->add_option("--k", eval_args.k, "Rice k in [0, 1]");
   eval->add_option("--x", eval_args.x, "Rice upper limit x >= 0");
   eval->add_option("--m", eval_args.m, "Power m >= 0");
   eval->add_option("--n", eval_args.n, "Bessel order n >= 0");
   eval->add_option("--r", eval_args.r, "Toronto r >= 0");
   eval->add_option("--B", eval_args.B, "Toronto upper limit B >= 0");
   eval->add_option("--a", eval_args.a, "ILHI exponential rate a");
   eval->add_option("--z", eval_args.z, "ILHI upper limit z >= 0");
   eval->add_option("--terms", eval_args.terms, "Series truncation (0 = method default)");
   eval->add_option("--tol", eval_args.tol, "Quadrature abs_tol and rel_tol");

   SweepArgs sweep_args;
   auto *sweep = app.add_subcommand("sweep", "Evaluate methods over a one-dimensional grid and write CSV");
   sweep->add_option("function", sweep_args.function, "rice | toronto | ilhi")->required();
   sweep->add_option("--fixed", sweep_args.fixed, "name=value (repeatable)");
   sweep->add_option("--vary", sweep_args.vary, "name:lo:hi:steps")->required();
   sweep->add_option("--method", sweep_args.methods, "method[@name=value,...] (repeatable)")->required();
   sweep->add_option("--out", sweep_args.out, "Output CSV path (default stdout)");
   sweep->add_option("--tol", sweep_args.tol, "Quadrature abs_tol and rel_tol");

   std::optional<double> verify_tol;
   auto *verify = app.add_subcommand("verify", "Run the cross-representation identity suite");
   verify->add_option("--tol", verify_tol, "Quadrature rel_tol; residual thresholds become max(base, 100 tol)");

   auto *preset = app.add_subcommand("preset", "Figure presets");
   preset->require_subcommand(1);
   preset->add_subcommand("list", "List available presets");
   PresetArgs preset_args;
   auto *preset_run = preset->add_subcommand("run", "Run one preset sweep");
   preset_run->add_option("name", preset_args.name, "figure1 .. figure6")->required();
   preset_run->add_option("--set", preset_args.sets, "Override a fixed value, name=value (repeatable)");
   preset_run->add_option("--steps", preset_args.steps, "Number of grid points (>= 2)");
   preset_run->add_option("--out", preset_args.out, "Output CSV path (default stdout)");
   preset_run->add_option("--tol", preset_args.tol, "Quadrature abs_tol and rel_tol");

   try {
      app.parse(argc, argv);
   } catch (const CLI::ParseError &e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : kExitUsage;
   }

   try {
      if (eval->parsed()) {
         return run_eval(eval_args);
      }
      if (sweep->parsed()) {
         return run_sweep_command(sweep_args);
      }
      if (verify->parsed()) {
         return run_verify_command(verify_tol);
      }
      if (preset->get_subcommand("list")->parsed()) {
         for (const auto &p : presets()) {
            std::cout << p.name << "  " << p.description << '\n';
         }
         return 0;
      }
      if (preset_run->parsed()) {
         return run_preset(preset_args);
      }
   } catch (const DomainError &e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
   } catch (const QuadratureError &e) {
      std::cerr << "numerical error: " << e.what() << '\n';
      return kExitNumerical;
   } catch (const NumericalError &e) {
      std::cerr << "numerical error: " << e.what() << '\n';
      return kExitNumerical;
   }
   return kExitUsage;
}
