#include "perispec/topo/intersection_form.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "perispec/error.hpp"

namespace perispec {

namespace {

// Cartan matrix of E8, Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2
// attached to node 4.
IntersectionForm e8() {
  constexpr std::size_t n = 8;
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) {
    m[(a - 1) * n + (b - 1)] = -1;
    m[(b - 1) * n + (a - 1)] = -1;
  }
  return IntersectionForm("E8", n, std::move(m));
}

IntersectionForm hyperbolic() { return IntersectionForm("H", 2, {0, 1, 1, 0}); }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::optional<IntersectionForm> parse_diag(const std::string& name) {
  if (name.rfind("Diag(", 0) != 0 || name.back() != ')') return std::nullopt;
  const std::string body = name.substr(5, name.size() - 6);
  std::vector<std::int64_t> diag;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const std::string tok = trim(std::string_view(body).substr(pos, comma - pos));
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ContractViolation("builtin_form: bad Diag entry '" + tok + "'");
    }
    diag.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  const std::size_t n = diag.size();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = diag[i];
  return IntersectionForm(name, n, std::move(m));
}

}  // namespace

IntersectionForm::IntersectionForm(std::string name, std::size_t rank, std::vector<std::int64_t> entries)
    : name_(std::move(name)), rank_(rank), entries_(std::move(entries)) {
  if (rank_ == 0) throw ContractViolation("IntersectionForm: rank must be positive");
  if (entries_.size() != rank_ * rank_) throw ContractViolation("IntersectionForm: entry count mismatch");
  const RationalMatrix m = RationalMatrix::from_integers(rank_, entries_);
  if (!m.is_symmetric()) throw ContractViolation("IntersectionForm '" + name_ + "' is not symmetric");
  inertia_ = rational_ldl_inertia(m);
}

bool IntersectionForm::is_even() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (at(i, i) % 2 != 0) return false;
  return true;
}

IntersectionForm builtin_form(std::string_view raw) {
  const std::string name = trim(raw);
  if (name == "E8") return e8();
  if (name == "H") return hyperbolic();
  if (name == "K3") {
    IntersectionForm k3 = direct_sum(repeat(negate(e8()), 2), repeat(hyperbolic(), 3));
    return IntersectionForm("K3", k3.rank(), k3.entries());
  }
  if (auto d = parse_diag(name)) return *d;
  throw ContractViolation("unknown intersection form '" + name + "'");
}

std::vector<std::string> builtin_form_names() { return {"E8", "H", "K3", "Diag(a,b,...)"}; }

IntersectionForm direct_sum(const IntersectionForm& a, const IntersectionForm& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m[i * n + j] = a.at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) m[(a.rank() + i) * n + a.rank() + j] = b.at(i, j);
  return IntersectionForm(a.name() + "+" + b.name(), n, std::move(m));
}

IntersectionForm negate(const IntersectionForm& a) {
  std::vector<std::int64_t> m = a.entries();
  for (auto& v : m) v = -v;
  const std::string name = a.name().starts_with("-") ? a.name().substr(1) : "-" + a.name();
  return IntersectionForm(name, a.rank(), std::move(m));
}

IntersectionForm repeat(const IntersectionForm& a, std::size_t k) {
  if (k == 0) throw ContractViolation("repeat: multiplicity must be positive");
  IntersectionForm out = a;
  for (std::size_t i = 1; i < k; ++i) out = direct_sum(out, a);
  return IntersectionForm(k == 1 ? a.name() : std::to_string(k) + a.name(), out.rank(), out.entries());
}

IntersectionForm parse_form_sum(std::string_view spec) {
  std::optional<IntersectionForm> acc;
  std::string text(spec);
  // Split on '+' and '-' outside parentheses; a '-' also negates its term.
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else if (ch == '-' && depth == 0 && !trim(cur).empty()) {
      terms.push_back(cur);
      cur = "-";
    } else {
      cur.push_back(ch);
    }
  }
  terms.push_back(cur);
  for (const auto& raw : terms) {
    std::string term = trim(raw);
    if (term.empty()) throw ContractViolation("form sum '" + text + "' has an empty term");
    bool neg = false;
    if (term[0] == '-') {
      neg = true;
      term = trim(term.substr(1));
    }
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    const std::size_t mult = digits ? std::stoul(term.substr(0, digits)) : 1;
    IntersectionForm f = builtin_form(term.substr(digits));
    if (neg) f = negate(f);
    f = repeat(f, mult);
    acc = acc ? direct_sum(*acc, f) : f;
  }
  return IntersectionForm(trim(text), acc->rank(), acc->entries());
}

}  // namespace perispec
