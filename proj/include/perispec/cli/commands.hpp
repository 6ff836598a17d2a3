#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perispec/conventions.hpp"
#include "perispec/discretize/circle_dirac.hpp"
#include "perispec/io/problem_file.hpp"
#include "perispec/io/report.hpp"

// Command bodies shared by the `perispec` executable and the Python module.
// Each returns the `results` and `tolerances` members of a report; range
// problems in the options raise InputError.
namespace perispec::cli {

struct CommandOutput {
  Json args;
  Json results;
  Json tolerances;
};

SpinStructure parse_spin_name(const std::string& name);
Scheme parse_scheme_name(const std::string& name);

struct SpectrumOptions {
  std::string kind = "circle";  // circle | sphere | product
  std::string spin = "bounding";
  double c = 0.0;
  std::size_t band = 3;
  std::size_t ell = 2;
  std::size_t kmax = 3;
  double cutoff = 100.0;
};
CommandOutput spectrum(const SpectrumOptions& o);
/// "eigenvalue,multiplicity" header then one row per distinct eigenvalue.
std::string spectrum_csv(const Json& results);

struct TwistScanOptions {
  std::string spin = "bounding";
  std::string scheme = "spectral";
  double c_from = 0.0;
  double c_to = 1.0;
  int steps = 200;
  std::size_t grid = 32;
  double mass = 0.0;
  double tol = 1e-10;  // zero threshold for eigenvalue sign counts
};
CommandOutput twist_scan(const TwistScanOptions& o);

struct FredholmOptions {
  double tol = conventions::kFredholmTol;
  int grid = conventions::kCircleGrid;
  std::vector<std::size_t> sections;  // optional finite-section cross-check
};
CommandOutput fredholm(const SymbolProblem& p, const FredholmOptions& o);

/// Toeplitz index; DomainError when the symbol is not Fredholm.
CommandOutput index(const SymbolProblem& p, double tol = conventions::kFredholmTol);

/// Flow of c ↦ A(z(c)) over c ∈ [0, 1]; the symbol must be Hermitian-symmetric.
CommandOutput spectral_flow(const SymbolProblem& p, int steps = 200);

CommandOutput invariant(const InvariantProblem& p);

CommandOutput forms_list();
CommandOutput forms_show(const std::string& name);
CommandOutput forms_sum(const std::string& spec);

}  // namespace perispec::cli
