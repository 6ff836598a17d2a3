// perispec command-line front end. Every command prints one JSON report
// (schema perispec.report/1) unless a CSV or text format is requested.
//
// Exit codes: 0 success, 2 input error, 3 domain or contract error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "perispec/cli/commands.hpp"
#include "perispec/error.hpp"
#include "perispec/io/problem_file.hpp"
#include "perispec/io/report.hpp"
#include "perispec/topo/mod2_rational.hpp"

namespace {

using namespace perispec;

constexpr int kInputError = 2;
constexpr int kDomainError = 3;

// SPECTRAL_TOL replaces the default of every --tol option.
std::optional<double> env_tolerance() {
  const char* raw = std::getenv("SPECTRAL_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || !(v > 0.0)) {
    throw InputError(std::string("SPECTRAL_TOL must be a positive number, got '") + raw + "'");
  }
  return v;
}

SymbolProblem load_symbol(const std::string& path) {
  auto p = load_problem(path);
  if (auto* s = std::get_if<SymbolProblem>(&p)) {
    if (s->name.empty()) s->name = path;
    return std::move(*s);
  }
  throw InputError("'" + path + "' does not describe a [symbol]");
}

std::string text_invariant(const Json& r) {
  if (r.at("kind") == "alpha") {
    return r.at("value").get<std::string>() + " in KO_" + std::to_string(r.at("n").get<long>()) + " = " +
           r.at("group").get<std::string>() + "\n";
  }
  return r.at("value").get<std::string>() + " = " + r.at("mod2").get<std::string>() + " (mod 2)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Dirac spectra, Floquet/Toeplitz analysis and exact spin invariants"};
  app.set_version_flag("--version", "perispec 0.1.0");
  bool show_convention = false;
  std::string output_path;
  app.add_flag("--convention", show_convention, "Print the convention block and exit");
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");
  app.require_subcommand(0, 1);

  std::optional<double> env_tol;
  try {
    env_tol = env_tolerance();
  } catch (const InputError& e) {
    std::cerr << "perispec: " << e.what() << "\n";
    return kInputError;
  }
  const double fredholm_tol = env_tol.value_or(conventions::kFredholmTol);

  // spectrum
  cli::SpectrumOptions spec_opts;
  std::string spec_format = "json";
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form Dirac spectra of model manifolds");
  spectrum->add_option("kind", spec_opts.kind, "circle | sphere | product")->required();
  spectrum->add_option("--spin", spec_opts.spin, "bounding | nonbounding")->capture_default_str();
  spectrum->add_option("--c", spec_opts.c, "Twist coefficient")->capture_default_str();
  spectrum->add_option("--band", spec_opts.band, "Circle modes with |kappa| <= band")->capture_default_str();
  spectrum->add_option("--l", spec_opts.ell, "Sphere dimension")->capture_default_str();
  spectrum->add_option("--kmax", spec_opts.kmax, "Sphere eigenvalue levels 0..kmax")->capture_default_str();
  spectrum->add_option("--cutoff", spec_opts.cutoff, "Largest D^2 eigenvalue kept (product)")->capture_default_str();
  spectrum->add_option("--format", spec_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // twist-scan
  cli::TwistScanOptions scan_opts;
  if (env_tol) scan_opts.tol = *env_tol;
  auto* scan = app.add_subcommand("twist-scan", "Locate c with a kernel of the discrete D^c");
  scan->add_option("--spin", scan_opts.spin, "bounding | nonbounding")->capture_default_str();
  scan->add_option("--scheme", scan_opts.scheme, "spectral | central")->capture_default_str();
  scan->add_option("--c-from", scan_opts.c_from)->capture_default_str();
  scan->add_option("--c-to", scan_opts.c_to)->capture_default_str();
  scan->add_option("--steps", scan_opts.steps)->capture_default_str();
  scan->add_option("--grid", scan_opts.grid, "Circle grid points")->capture_default_str();
  scan->add_option("--mass", scan_opts.mass, "Anticommuting mass (synthetic invertible model)")->capture_default_str();
  scan->add_option("--tol", scan_opts.tol, "Zero threshold")->capture_default_str();

  // fredholm / index / spectral-flow
  std::string symbol_path;
  cli::FredholmOptions fred_opts;
  fred_opts.tol = fredholm_tol;
  auto* fred = app.add_subcommand("fredholm", "Invertibility of a symbol on the unit circle");
  fred->add_option("file", symbol_path, "Problem file with a [symbol] section")->required()->check(CLI::ExistingFile);
  fred->add_option("--tol", fred_opts.tol)->capture_default_str();
  fred->add_option("--grid", fred_opts.grid)->capture_default_str();
  fred->add_option("--sections", fred_opts.sections, "Finite-section sizes for a cross-check")->delimiter(',');

  double index_tol = fredholm_tol;
  auto* idx = app.add_subcommand("index", "Toeplitz index of a Fredholm symbol");
  idx->add_option("file", symbol_path)->required()->check(CLI::ExistingFile);
  idx->add_option("--tol", index_tol)->capture_default_str();

  int flow_steps = 200;
  auto* flow = app.add_subcommand("spectral-flow", "Spectral flow of c -> A(z(c)) over one period");
  flow->add_option("file", symbol_path)->required()->check(CLI::ExistingFile);
  flow->add_option("--steps", flow_steps)->capture_default_str();

  // invariant
  std::string inv_kind;
  std::string inv_file;
  std::string inv_format = "json";
  bool inv_strict = false;
  std::map<std::string, std::string> inv_raw;
  auto* inv = app.add_subcommand("invariant", "Exact alpha, Rohlin, w, beta and w_cs arithmetic");
  inv->add_option("kind", inv_kind, "alpha | rohlin | w | beta | wcs");
  inv->add_option("--file", inv_file, "Problem file with an [invariant] section")->check(CLI::ExistingFile);
  for (const char* key : {"n", "ind-plus", "dim-ker", "dim-ker-plus", "sign", "sig-w", "sig-w-prime", "rho", "sig-v"}) {
    inv->add_option(std::string("--") + key, inv_raw[key]);
  }
  inv->add_flag("--strict", inv_strict, "Require the classical divisibility");
  inv->add_option("--format", inv_format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  // forms
  std::string forms_action;
  std::string forms_arg;
  auto* forms = app.add_subcommand("forms", "Intersection forms: list | show NAME | sum SPEC");
  forms->add_option("action", forms_action, "list | show | sum")->required()->check(CLI::IsMember({"list", "show", "sum"}));
  forms->add_option("spec", forms_arg, "Form name or sum such as -E8+E8+3H");
  forms->positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  auto emit = [&](const std::string& text) {
    if (output_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(output_path);
    if (!out) throw InputError("cannot write '" + output_path + "'");
    out << text;
  };

  try {
    if (show_convention) {
      emit(convention_block().dump(2) + "\n");
      return 0;
    }
    const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (sub == nullptr) {
      std::cerr << app.help();
      return kInputError;
    }
    const auto start = std::chrono::steady_clock::now();
    cli::CommandOutput out;
    std::string raw_text;  // non-JSON output, when requested
    const std::string name = sub->get_name();
    if (sub == spectrum) {
      out = cli::spectrum(spec_opts);
      if (spec_format == "csv") raw_text = cli::spectrum_csv(out.results);
    } else if (sub == scan) {
      out = cli::twist_scan(scan_opts);
    } else if (sub == fred) {
      out = cli::fredholm(load_symbol(symbol_path), fred_opts);
    } else if (sub == idx) {
      out = cli::index(load_symbol(symbol_path), index_tol);
    } else if (sub == flow) {
      out = cli::spectral_flow(load_symbol(symbol_path), flow_steps);
    } else if (sub == inv) {
      InvariantProblem p;
      if (!inv_file.empty()) {
        auto parsed = load_problem(inv_file);
        auto* ip = std::get_if<InvariantProblem>(&parsed);
        if (ip == nullptr) throw InputError("'" + inv_file + "' does not describe an [invariant]");
        p = std::move(*ip);
      }
      if (!inv_kind.empty()) p.kind = inv_kind;
      if (p.kind.empty()) throw InputError("invariant: kind is required");
      p.strict = p.strict || inv_strict;
      for (const auto& [key, value] : inv_raw) {
        if (value.empty()) continue;
        std::string k = key;
        for (char& ch : k) ch = ch == '-' ? '_' : ch;
        try {
          p.args[k] = parse_rational(value);
        } catch (const ParseError&) {
          throw InputError("--" + key + ": not a rational number: '" + value + "'");
        }
      }
      out = cli::invariant(p);
      if (inv_format == "text") raw_text = text_invariant(out.results);
    } else if (sub == forms) {
      if (forms_action == "list") {
        out = cli::forms_list();
      } else {
        if (forms_arg.empty()) throw InputError("forms " + forms_action + " needs an argument");
        out = forms_action == "show" ? cli::forms_show(forms_arg) : cli::forms_sum(forms_arg);
      }
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!raw_text.empty()) {
      emit(raw_text);
    } else {
      emit(dump_report(make_report(name, out.args, out.results, out.tolerances, ms)));
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "perispec: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "perispec: " << e.what() << "\n";
    return kInputError;
  } catch (const ContractViolation& e) {
    std::cerr << "perispec: contract violation: " << e.what() << "\n";
    return kDomainError;
  } catch (const DomainError& e) {
    std::cerr << "perispec: " << e.what() << "\n";
    return kDomainError;
  }
}
