#include "perispec/io/problem_file.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "perispec/discretize/circle_dirac.hpp"
#include "perispec/error.hpp"
#include "perispec/topo/mod2_rational.hpp"

namespace perispec {

namespace {

using nlohmann::json;

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // of the value's first character
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::map<std::string, Entry> entries;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long bracket_balance(const std::string& s) {
  long depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
  }
  return depth;
}

Section read_section(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Section> section;
  std::string pending_key;
  Entry pending;
  long depth = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (depth > 0) {
      pending.value += " " + trim(line);
      depth += bracket_balance(line);
      if (depth <= 0) {
        section->entries[pending_key] = pending;
        pending_key.clear();
        depth = 0;
      }
      continue;
    }
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = line.find_first_not_of(" \t") + 1;
    if (body.front() == '[' && body.back() == ']' && body.find('=') == std::string::npos) {
      if (section) {
        throw ParseError("a problem file holds exactly one section; second header '" + body + "'",
                         line_no, indent);
      }
      section = Section{trim(body.substr(1, body.size() - 2)), line_no, {}};
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, indent);
    if (!section) throw ParseError("entry before any [section] header", line_no, indent);
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("missing key before '='", line_no, eq + 1);
    if (section->entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, indent);
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no, eq + 2);
    const std::size_t vcol = line.find_first_not_of(" \t", eq + 1) + 1;
    Entry e{value, line_no, vcol};
    depth = bracket_balance(value);
    if (depth > 0) {
      pending_key = key;
      pending = e;
      continue;
    }
    if (depth < 0) throw ParseError("unbalanced ']'", line_no, vcol);
    section->entries[key] = e;
  }
  if (depth > 0) throw ParseError("unterminated array for '" + pending_key + "'", pending.line, pending.column);
  if (!section) throw ParseError("no [section] header found", line_no == 0 ? 1 : line_no, 1);
  return *section;
}

json parse_json_value(const Entry& e) {
  try {
    return json::parse(e.value);
  } catch (const json::parse_error& err) {
    const std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    throw ParseError("malformed value: " + std::string(err.what()), e.line,
                     e.column + std::min(offset, e.value.size()));
  }
}

double as_number(const json& v, const Entry& e) {
  if (!v.is_number()) throw ParseError("expected a number", e.line, e.column);
  return v.get<double>();
}

// Number → 1×1, [a, b] → 1×2, [[..], [..]] → rows×cols.
std::vector<std::vector<double>> as_table(const Entry& e) {
  const json v = parse_json_value(e);
  if (v.is_number()) return {{v.get<double>()}};
  if (!v.is_array() || v.empty()) throw ParseError("expected a number or a nested array", e.line, e.column);
  std::vector<std::vector<double>> rows;
  if (!v.front().is_array()) {
    rows.emplace_back();
    for (const auto& x : v) rows.back().push_back(as_number(x, e));
    return rows;
  }
  for (const auto& row : v) {
    if (!row.is_array()) throw ParseError("mixed scalars and rows in array", e.line, e.column);
    rows.emplace_back();
    for (const auto& x : row) rows.back().push_back(as_number(x, e));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("ragged matrix rows", e.line, e.column);
    }
  }
  return rows;
}

long as_integer(const Entry& e) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(e.value, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + e.value + "'", e.line, e.column);
  }
  if (used != e.value.size()) throw ParseError("trailing text after integer", e.line, e.column + used);
  return v;
}

double as_real(const Entry& e) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(e.value, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + e.value + "'", e.line, e.column);
  }
  if (used != e.value.size()) throw ParseError("trailing text after number", e.line, e.column + used);
  return v;
}

const Entry* find(const Section& s, const std::string& key) {
  const auto it = s.entries.find(key);
  return it == s.entries.end() ? nullptr : &it->second;
}

const Entry& require(const Section& s, const std::string& key) {
  if (const Entry* e = find(s, key)) return *e;
  throw ParseError("[" + s.name + "] requires '" + key + "'", s.line, 1);
}

void reject_unknown(const Section& s, const std::regex& allowed) {
  for (const auto& [key, e] : s.entries) {
    if (!std::regex_match(key, allowed)) {
      throw ParseError("unknown key '" + key + "' in [" + s.name + "]", e.line, 1);
    }
  }
}

SpinStructure parse_spin(const Entry& e) {
  if (e.value == "bounding") return SpinStructure::Bounding;
  if (e.value == "nonbounding" || e.value == "non-bounding") return SpinStructure::NonBounding;
  throw ParseError("spin must be 'bounding' or 'nonbounding'", e.line, e.column);
}

SymbolProblem parse_symbol(const Section& s) {
  SymbolProblem out{"", LaurentSymbol::scalar({{0, 1.0}})};
  if (const Entry* n = find(s, "name")) out.name = n->value;
  if (const Entry* src = find(s, "source")) {
    reject_unknown(s, std::regex("name|source|spin|grid|mass"));
    if (src->value != "circle") throw ParseError("unknown symbol source '" + src->value + "'", src->line, src->column);
    const SpinStructure spin = parse_spin(require(s, "spin"));
    const Entry* g = find(s, "grid");
    const long grid = g ? as_integer(*g) : conventions::kDefaultGrid;
    const double mass = find(s, "mass") ? as_real(*find(s, "mass")) : 0.0;
    if (grid < 8 || grid % 2 != 0) {
      throw ParseError("grid must be an even integer >= 8", g->line, g->column);
    }
    const auto d = build_circle_dirac(static_cast<std::size_t>(grid), Scheme::CentralDifference, spin,
                                      TwistParameter(0.0), mass);
    out.symbol = fourier_laplace_symbol(d);
    if (out.name.empty()) out.name = "circle";
    return out;
  }
  static const std::regex coeff_key(R"(A\[(-?\d+)\](\.im)?)");
  reject_unknown(s, std::regex(R"(name|block|A\[-?\d+\](\.im)?)"));
  const long block = as_integer(require(s, "block"));
  if (block < 1) {
    const Entry& b = require(s, "block");
    throw ParseError("block must be positive", b.line, b.column);
  }
  const auto n = static_cast<std::size_t>(block);
  std::map<int, ComplexMatrix> coeffs;
  for (const auto& [key, e] : s.entries) {
    std::smatch m;
    if (!std::regex_match(key, m, coeff_key)) continue;
    const int j = std::stoi(m[1]);
    const bool imag = m[2].matched;
    const auto table = as_table(e);
    if (table.size() != n || table.front().size() != n) {
      throw ParseError(key + " must be " + std::to_string(n) + "x" + std::to_string(n), e.line, e.column);
    }
    auto [it, fresh] = coeffs.try_emplace(j, n, n);
    (void)fresh;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Complex& z = it->second(r, c);
        z = imag ? Complex(z.real(), table[r][c]) : Complex(table[r][c], z.imag());
      }
    }
  }
  if (coeffs.empty()) throw ParseError("[symbol] has no coefficients A[j]", s.line, 1);
  out.symbol = LaurentSymbol(n, std::move(coeffs));
  return out;
}

FormProblem parse_form(const Section& s) {
  reject_unknown(s, std::regex("name|builtin|sum|matrix"));
  const Entry* builtin = find(s, "builtin");
  const Entry* sum = find(s, "sum");
  const Entry* matrix = find(s, "matrix");
  if ((builtin != nullptr) + (sum != nullptr) + (matrix != nullptr) != 1) {
    throw ParseError("[form] needs exactly one of builtin, sum, matrix", s.line, 1);
  }
  const Entry* name = find(s, "name");
  try {
    if (builtin) return {builtin_form(builtin->value)};
    if (sum) return {parse_form_sum(sum->value)};
  } catch (const ContractViolation& err) {
    const Entry* e = builtin ? builtin : sum;
    throw ParseError(err.what(), e->line, e->column);
  }
  const auto table = as_table(*matrix);
  const std::size_t rank = table.size();
  if (table.front().size() != rank) throw ParseError("form matrix must be square", matrix->line, matrix->column);
  std::vector<std::int64_t> entries;
  for (const auto& row : table) {
    for (double x : row) {
      if (x != std::floor(x)) throw ParseError("form entries must be integers", matrix->line, matrix->column);
      entries.push_back(static_cast<std::int64_t>(x));
    }
  }
  return {IntersectionForm(name ? name->value : "custom", rank, std::move(entries))};
}

InvariantProblem parse_invariant(const Section& s) {
  InvariantProblem out;
  const Entry& kind = require(s, "kind");
  out.kind = kind.value;
  static const std::regex kinds("alpha|rohlin|w|beta|wcs");
  if (!std::regex_match(out.kind, kinds)) {
    throw ParseError("unknown invariant kind '" + out.kind + "'", kind.line, kind.column);
  }
  reject_unknown(s, std::regex("kind|strict|n|ind_plus|dim_ker|dim_ker_plus|sign|sig_w|sig_w_prime|sig_v|rho"));
  for (const auto& [key, e] : s.entries) {
    if (key == "kind") continue;
    if (key == "strict") {
      if (e.value != "true" && e.value != "false") throw ParseError("strict must be true or false", e.line, e.column);
      out.strict = e.value == "true";
      continue;
    }
    try {
      out.args[key] = parse_rational(e.value);
    } catch (const ParseError& err) {
      throw ParseError("bad value for '" + key + "': '" + e.value + "'", e.line, e.column + err.column() - 1);
    }
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  const Section s = read_section(text);
  if (s.name == "symbol") return parse_symbol(s);
  if (s.name == "form") return parse_form(s);
  if (s.name == "invariant") return parse_invariant(s);
  throw ParseError("unknown section [" + s.name + "]", s.line, 2);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string format_symbol(const LaurentSymbol& s, const std::string& name) {
  std::ostringstream out;
  out.precision(17);
  out << "[symbol]\n";
  if (!name.empty()) out << "name = " << name << "\n";
  out << "block = " << s.block_size() << "\n";
  auto table = [&](const ComplexMatrix& m, bool imag) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
      rows.push_back(row);
    }
    return rows.dump();
  };
  for (const auto& [j, a] : s.coefficients()) {
    out << "A[" << j << "] = " << table(a, false) << "\n";
    bool has_imag = false;
    for (const auto& z : a.entries()) has_imag = has_imag || z.imag() != 0.0;
    if (has_imag) out << "A[" << j << "].im = " << table(a, true) << "\n";
  }
  return out.str();
}

}  // namespace perispec
