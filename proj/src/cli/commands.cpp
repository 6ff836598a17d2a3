#include "perispec/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "perispec/error.hpp"
#include "perispec/floquet/fredholm.hpp"
#include "perispec/floquet/spectral_flow.hpp"
#include "perispec/spectra/model_spectra.hpp"
#include "perispec/topo/intersection_form.hpp"
#include "perispec/topo/invariants.hpp"
#include "perispec/topo/mod2_rational.hpp"

namespace perispec::cli {

namespace {

Json spectrum_json(const SpectrumSample& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs()) pairs.push_back({{"value", p.value}, {"multiplicity", p.multiplicity}});
  return pairs;
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json form_json(const IntersectionForm& f) {
  Json m = Json::array();
  for (std::size_t i = 0; i < f.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.rank(); ++j) row.push_back(f.at(i, j));
    m.push_back(row);
  }
  const auto& in = f.inertia();
  return {{"name", f.name()},
          {"rank", f.rank()},
          {"signature", f.signature()},
          {"inertia", {{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}}},
          {"even", f.is_even()},
          {"matrix", m}};
}

long integer_arg(const InvariantProblem& p, const std::string& key) {
  const auto it = p.args.find(key);
  if (it == p.args.end()) throw InputError("invariant " + p.kind + " requires --" + key);
  if (it->second.get_den() != 1) throw InputError("--" + key + " must be an integer");
  if (!it->second.get_num().fits_slong_p()) throw InputError("--" + key + " is out of range");
  return it->second.get_num().get_si();
}

std::optional<long> optional_integer(const InvariantProblem& p, const std::string& key) {
  if (!p.args.count(key)) return std::nullopt;
  return integer_arg(p, key);
}

void allow_only(const InvariantProblem& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p.args) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw InputError("invariant " + p.kind + " does not take --" + k);
    }
  }
}

Json mod2_json(const Mod2Rational& m) { return {{"value", to_string(m.value())}, {"mod2", to_string(m.residue())}}; }

Json sigma_table(const SectionReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.sizes.size(); ++i) rows.push_back({{"periods", r.sizes[i]}, {"sigma_min", r.sigma_min[i]}});
  return rows;
}

}  // namespace

SpinStructure parse_spin_name(const std::string& name) {
  if (name == "bounding") return SpinStructure::Bounding;
  if (name == "nonbounding" || name == "non-bounding") return SpinStructure::NonBounding;
  throw InputError("unknown spin structure '" + name + "' (bounding | nonbounding)");
}

Scheme parse_scheme_name(const std::string& name) {
  if (name == "spectral") return Scheme::Spectral;
  if (name == "central" || name == "central-difference") return Scheme::CentralDifference;
  throw InputError("unknown scheme '" + name + "' (spectral | central)");
}

CommandOutput spectrum(const SpectrumOptions& o) {
  if (!std::isfinite(o.c)) throw InputError("--c must be finite");
  CommandOutput out;
  out.args = {{"kind", o.kind}};
  Json& r = out.results;
  r["kind"] = o.kind;
  if (o.kind == "circle" || o.kind == "product") {
    if (o.band < 1) throw InputError("--band must be at least 1");
    out.args["spin"] = o.spin;
    out.args["c"] = o.c;
    out.args["band"] = o.band;
  }
  if (o.kind == "sphere" || o.kind == "product") {
    if (o.ell < 1) throw InputError("--l must be at least 1");
    if (o.kmax > 500) throw InputError("--kmax must be at most 500");
    out.args["l"] = o.ell;
    out.args["kmax"] = o.kmax;
  }
  SpectrumSample s;
  if (o.kind == "circle") {
    s = circle_spectrum(parse_spin_name(o.spin), TwistParameter(o.c), o.band);
    r["operator"] = "D^c";
  } else if (o.kind == "sphere") {
    s = sphere_spectrum(o.ell, o.kmax);
    r["operator"] = "D";
  } else if (o.kind == "product") {
    if (!(o.cutoff > 0.0)) throw InputError("--cutoff must be positive");
    out.args["cutoff"] = o.cutoff;
    const auto base = circle_spectrum(parse_spin_name(o.spin), TwistParameter(o.c), o.band);
    s = product_square_spectrum(base, sphere_spectrum(o.ell, o.kmax), o.cutoff);
    const double bound = 0.25 * static_cast<double>(o.ell * o.ell);
    r["operator"] = "D^2";
    r["lower_bound"] = bound;
    r["bound_holds"] = lichnerowicz_bound_check(s, static_cast<double>(o.ell * o.ell));
  } else {
    throw InputError("unknown spectrum kind '" + o.kind + "' (circle | sphere | product)");
  }
  r["eigenvalues"] = spectrum_json(s);
  r["total_multiplicity"] = s.total_multiplicity();
  if (!s.empty()) {
    r["min"] = s.min();
    r["max"] = s.max();
  }
  out.tolerances = {{"grouping", s.grouping_tol()}};
  return out;
}

std::string spectrum_csv(const Json& results) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "eigenvalue,multiplicity\n";
  for (const auto& p : results.at("eigenvalues")) {
    csv << p.at("value").get<double>() << "," << p.at("multiplicity").get<std::size_t>() << "\n";
  }
  return csv.str();
}

CommandOutput twist_scan(const TwistScanOptions& o) {
  if (!(o.c_to > o.c_from)) throw InputError("--c-to must exceed --c-from");
  if (o.steps < 2) throw InputError("--steps must be at least 2");
  if (o.grid < 8 || o.grid % 2 != 0) throw InputError("--grid must be an even integer >= 8");
  if (!(o.tol > 0.0)) throw InputError("--tol must be positive");
  const SpinStructure spin = parse_spin_name(o.spin);
  const Scheme scheme = parse_scheme_name(o.scheme);

  const double width = o.c_to - o.c_from;
  auto family = [&](double t) {
    return build_circle_dirac(o.grid, scheme, spin, TwistParameter(o.c_from + t * width), o.mass).matrix;
  };
  SpectralFlowOptions opts;
  opts.steps = o.steps;
  opts.zero_tol = o.tol;
  const auto flow = perispec::spectral_flow(family, opts);

  std::vector<double> locations;
  for (const auto& x : flow.crossings) {
    double c = o.c_from + x.parameter * width;
    c -= std::floor(c);
    if (c > 1.0 - 1e-6) c = 0.0;
    if (std::none_of(locations.begin(), locations.end(), [&](double y) { return std::abs(y - c) < 1e-6; })) {
      locations.push_back(c);
    }
  }
  std::sort(locations.begin(), locations.end());

  CommandOutput out;
  out.args = {{"spin", o.spin}, {"scheme", o.scheme}, {"c_from", o.c_from}, {"c_to", o.c_to},
              {"steps", o.steps}, {"grid", o.grid}, {"mass", o.mass}};
  Json crossings = Json::array();
  for (const auto& x : flow.crossings) {
    crossings.push_back({{"c", o.c_from + x.parameter * width}, {"direction", x.direction}});
  }
  out.results = {{"kernel_locations", locations},
                 {"crossings", crossings},
                 {"spectral_flow", flow.flow},
                 {"verdict", locations.empty() ? "fredholm" : "not-fredholm"}};
  out.tolerances = {{"zero", o.tol}, {"locate", opts.locate_tol}};
  return out;
}

CommandOutput fredholm(const SymbolProblem& p, const FredholmOptions& o) {
  if (!(o.tol > 0.0)) throw InputError("--tol must be positive");
  if (o.grid < 8) throw InputError("--grid must be at least 8");
  const auto rep = is_fredholm(p.symbol, o.tol, o.grid);
  CommandOutput out;
  out.args = {{"symbol", p.name}, {"tol", o.tol}, {"grid", o.grid}};
  Json& r = out.results;
  r["block_size"] = p.symbol.block_size();
  r["bandwidth"] = p.symbol.bandwidth();
  r["is_fredholm"] = rep.is_fredholm;
  r["min_singular"] = rep.min_singular;
  if (rep.witness) {
    r["witness"] = {{"theta", rep.witness->theta}, {"z", complex_json(rep.witness->z)}};
  }
  r["index"] = rep.index ? Json(*rep.index) : Json(nullptr);
  r["grid_used"] = rep.grid_used;
  if (!o.sections.empty()) {
    const auto sec = fredholm_via_sections(p.symbol, o.sections, o.tol);
    r["sections"] = {{"table", sigma_table(sec)}, {"verdict", to_string(sec.verdict)}};
    out.args["sections"] = o.sections;
  }
  out.tolerances = {{"fredholm", rep.tol}, {"refine", conventions::kRefineTol}};
  return out;
}

CommandOutput index(const SymbolProblem& p, double tol) {
  const auto rep = is_fredholm(p.symbol, tol);
  if (!rep.is_fredholm) {
    std::ostringstream msg;
    msg << "index: symbol is not Fredholm (min singular value " << rep.min_singular << " <= " << tol << ")";
    throw DomainError(msg.str());
  }
  CommandOutput out;
  out.args = {{"symbol", p.name}, {"tol", tol}};
  const long w = winding_number(p.symbol);
  out.results = {{"index", toeplitz_index(p.symbol)},
                 {"winding", w},
                 {"index_sign", conventions::kIndexSign},
                 {"min_singular", rep.min_singular}};
  out.tolerances = {{"fredholm", tol}};
  return out;
}

CommandOutput spectral_flow(const SymbolProblem& p, int steps) {
  if (steps < 2) throw InputError("--steps must be at least 2");
  if (!p.symbol.hermitian_symmetric(1e-12)) {
    throw ContractViolation("spectral-flow: symbol is not Hermitian on |z| = 1 (A_{-j} != A_j^*)");
  }
  const LaurentSymbol& s = p.symbol;
  auto family = [&s](double c) { return symbol_eval(s, twist_to_z(c)); };
  SpectralFlowOptions opts;
  opts.steps = steps;
  const auto flow = perispec::spectral_flow(family, opts);
  CommandOutput out;
  out.args = {{"symbol", p.name}, {"steps", steps}};
  Json crossings = Json::array();
  for (const auto& x : flow.crossings) crossings.push_back({{"c", x.parameter}, {"direction", x.direction}});
  out.results = {{"flow", flow.flow},
                 {"crossings", crossings},
                 {"endpoints_isospectral", flow.endpoints_isospectral}};
  out.tolerances = {{"zero", opts.zero_tol}, {"locate", opts.locate_tol}};
  return out;
}

CommandOutput invariant(const InvariantProblem& p) {
  CommandOutput out;
  out.args = {{"kind", p.kind}};
  for (const auto& [k, v] : p.args) out.args[k] = to_string(v);
  if (p.strict) out.args["strict"] = true;
  Json& r = out.results;
  r["kind"] = p.kind;
  if (p.kind == "alpha") {
    allow_only(p, {"n", "ind_plus", "dim_ker", "dim_ker_plus", "sign"});
    const long n = integer_arg(p, "n");
    if (n < 0) throw InputError("--n must be non-negative");
    AlphaData data;
    int given = 0;
    if (auto v = optional_integer(p, "ind_plus")) {
      data = IndPlus{*v};
      ++given;
    }
    if (auto v = optional_integer(p, "sign")) {
      data = SignatureData{*v};
      ++given;
    }
    for (const char* key : {"dim_ker", "dim_ker_plus"}) {
      if (auto v = optional_integer(p, key)) {
        if (*v < 0) throw InputError(std::string("--") + key + " must be non-negative");
        const auto u = static_cast<unsigned long>(*v);
        data = std::string(key) == "dim_ker" ? AlphaData(DimKer{u}) : AlphaData(DimKerPlus{u});
        ++given;
      }
    }
    if (given > 1) throw InputError("invariant alpha takes at most one index datum");
    const auto e = alpha_n(static_cast<int>(n), data);
    r["n"] = n;
    r["group"] = to_string(e.group);
    r["value"] = std::to_string(e.value);
  } else if (p.kind == "rohlin") {
    allow_only(p, {"sig_w"});
    r.update(mod2_json(rohlin(integer_arg(p, "sig_w"), p.strict)));
  } else if (p.kind == "w") {
    allow_only(p, {"ind_plus", "sig_w", "sig_w_prime"});
    const long ind = integer_arg(p, "ind_plus");
    const long sw = integer_arg(p, "sig_w");
    r.update(mod2_json(Mod2Rational(w_invariant(ind, sw))));
    r["rohlin"] = to_string(rohlin(sw).residue());
    r["matches_rohlin"] = ind % 2 == 0 ? Json(w_mod2_equals_rohlin(ind, sw)) : Json(nullptr);
    if (auto swp = optional_integer(p, "sig_w_prime")) {
      r["index_jump"] = to_string(w_welldefined_delta(sw, *swp));
      r["glued_signature"] = novikov_glue_signature(sw, *swp);
    }
  } else if (p.kind == "beta") {
    allow_only(p, {"rho", "sig_v"});
    const auto it = p.args.find("rho");
    if (it == p.args.end()) throw InputError("invariant beta requires --rho");
    r.update(mod2_json(beta(Mod2Rational(it->second), integer_arg(p, "sig_v"), p.strict)));
  } else if (p.kind == "wcs") {
    allow_only(p, {"ind_plus", "sig_w", "sig_v"});
    const long ind = integer_arg(p, "ind_plus");
    const long sw = integer_arg(p, "sig_w");
    const long sv = integer_arg(p, "sig_v");
    r.update(mod2_json(Mod2Rational(w_cs(ind, sw, sv))));
    r["beta"] = to_string(beta(rohlin(sw), sv).residue());
    r["matches_beta"] = ind % 2 == 0 ? Json(w_cs_matches_beta(ind, sw, sv)) : Json(nullptr);
  } else {
    throw InputError("unknown invariant kind '" + p.kind + "' (alpha | rohlin | w | beta | wcs)");
  }
  out.tolerances = {{"exact", true}};
  return out;
}

CommandOutput forms_list() {
  CommandOutput out;
  out.args = {{"action", "list"}};
  out.results = {{"forms", builtin_form_names()}};
  out.tolerances = {{"exact", true}};
  return out;
}

CommandOutput forms_show(const std::string& name) {
  CommandOutput out;
  out.args = {{"action", "show"}, {"name", name}};
  try {
    out.results = form_json(builtin_form(name));
  } catch (const ContractViolation& e) {
    throw InputError(e.what());
  }
  out.tolerances = {{"exact", true}};
  return out;
}

CommandOutput forms_sum(const std::string& spec) {
  CommandOutput out;
  out.args = {{"action", "sum"}, {"spec", spec}};
  try {
    out.results = form_json(parse_form_sum(spec));
  } catch (const ContractViolation& e) {
    throw InputError(e.what());
  }
  out.tolerances = {{"exact", true}};
  return out;
}

}  // namespace perispec::cli
