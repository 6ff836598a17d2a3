#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "perispec/floquet/laurent_symbol.hpp"
#include "perispec/linalg/rational.hpp"
#include "perispec/topo/intersection_form.hpp"

namespace perispec {

// Problem files are line-oriented text: `#` comments, one bracketed section
// header, then `key = value` lines. Matrix values are JSON-style nested arrays
// and may continue over several lines until the brackets balance.
//
//   [symbol]                       [form]                [invariant]
//   block = 1                      sum = -E8+E8+3H       kind = beta
//   A[0] = [[-2]]                  # or builtin = K3     rho = 1
//   A[1] = [[1]]                   # or matrix = [[..]]  sig_v = -16
//   A[-1].im = [[0.5]]
//
// A symbol section may instead read `source = circle` with `spin`, `grid`
// and optional `mass`: the period blocks of the central-difference circle
// operator on the cyclic cover.

struct SymbolProblem {
  std::string name;
  LaurentSymbol symbol;
};

struct FormProblem {
  IntersectionForm form;
};

struct InvariantProblem {
  std::string kind;  // alpha | rohlin | w | beta | wcs
  std::map<std::string, Rational> args;
  bool strict = false;
};

using ProblemFile = std::variant<SymbolProblem, FormProblem, InvariantProblem>;

/// Throws ParseError (with line and column) on malformed input and
/// ContractViolation when a well-formed file describes an invalid object.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Canonical text of a symbol, readable by parse_problem.
std::string format_symbol(const LaurentSymbol& s, const std::string& name = "");

}  // namespace perispec
