#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "perispec/cli/commands.hpp"
#include "perispec/error.hpp"
#include "perispec/io/problem_file.hpp"
#include "perispec/io/report.hpp"
#include "test_support.hpp"

using namespace perispec;
using namespace perispec::testing;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const SymbolProblem& as_symbol(const ProblemFile& p) { return std::get<SymbolProblem>(p); }

}  // namespace

TEST_CASE("problem file: scalar and block symbols") {
  const auto p = parse_problem(
      "# z - 2\n"
      "[symbol]\n"
      "name = zm2\n"
      "block = 1\n"
      "A[0] = -2\n"
      "A[1] = 1   # trailing comment\n");
  const auto& s = as_symbol(p);
  CHECK(s.name == "zm2");
  CHECK(s.symbol.block_size() == 1);
  CHECK(s.symbol.coefficient(0)(0, 0) == Complex(-2.0));
  CHECK(s.symbol.coefficient(1)(0, 0) == Complex(1.0));

  const auto q = parse_problem(
      "[symbol]\n"
      "block = 2\n"
      "A[0] = [[1, 0],\n"
      "        [0, -1]]\n"
      "A[1] = [[0, 0.5], [0, 0]]\n"
      "A[-1] = [[0, 0], [0.5, 0]]\n"
      "A[-1].im = [[0, 0], [0.25, 0]]\n");
  const auto& t = as_symbol(q).symbol;
  CHECK(t.block_size() == 2);
  CHECK(t.bandwidth() == 1);
  CHECK(t.coefficient(-1)(1, 0) == Complex(0.5, 0.25));
  CHECK(t.coefficient(0)(1, 1) == Complex(-1.0));
}

TEST_CASE("problem file: circle source") {
  const auto p = parse_problem("[symbol]\nsource = circle\nspin = bounding\ngrid = 16\n");
  const auto& s = as_symbol(p).symbol;
  CHECK(s.block_size() == 16);
  CHECK(s.hermitian_symmetric());
  const auto m = parse_problem("[symbol]\nsource = circle\nspin = nonbounding\ngrid = 8\nmass = 1\n");
  CHECK(as_symbol(m).symbol.block_size() == 16);
}

TEST_CASE("problem file: forms and invariants") {
  auto p = parse_problem("[form]\nsum = -E8+E8+3H\n");
  CHECK(std::get<FormProblem>(p).form.signature() == 0);
  CHECK(std::get<FormProblem>(p).form.rank() == 22);
  p = parse_problem("[form]\nname = two\nmatrix = [[2, 1], [1, 2]]\n");
  CHECK(std::get<FormProblem>(p).form.signature() == 2);
  p = parse_problem("[invariant]\nkind = beta\nrho = 1/2\nsig_v = -16\nstrict = true\n");
  const auto& inv = std::get<InvariantProblem>(p);
  CHECK(inv.kind == "beta");
  CHECK(inv.args.at("rho") == Rational(1, 2));
  CHECK(inv.args.at("sig_v") == -16);
  CHECK(inv.strict);
}

TEST_CASE("problem file: errors carry line and column") {
  CHECK(parse_error_line("") > 0);
  CHECK(parse_error_line("[symbol]\nblock = 1\nA[0] = [[1, 2]\n") == 3);
  CHECK(parse_error_line("[symbol]\nblock = 1\nA[0] = [[1]]\nfoo = 2\n") == 4);
  CHECK(parse_error_line("[nonsense]\n") == 1);
  CHECK(parse_error_line("[form]\nbuiltin = K3\n[form]\nbuiltin = H\n") == 3);
  CHECK(parse_error_line("[symbol]\nblock = 2\nA[0] = [[1]]\n") == 3);
  CHECK(parse_error_line("[invariant]\nkind = beta\nrho = x\n") == 3);
  CHECK(parse_error_line("[symbol]\nblock = 1\nA[x] = 1\n") == 3);
  CHECK(parse_error_line("[form]\nmatrix = [[1, 0.5], [0.5, 1]]\n") == 2);
  try {
    parse_problem("[symbol]\nblock = 1\n  A[0] == 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("format_symbol round-trips") {
  std::mt19937_64 rng(3);
  std::map<int, ComplexMatrix> c;
  for (int j = -2; j <= 1; ++j) c[j] = random_matrix(3, 3, rng);
  const LaurentSymbol s(3, c);
  const auto back = as_symbol(parse_problem(format_symbol(s, "rand"))).symbol;
  CHECK(back.block_size() == 3);
  for (int j = -2; j <= 1; ++j) CHECK(max_abs_diff(back.coefficient(j), s.coefficient(j)) == 0.0);
  CHECK(as_symbol(parse_problem(format_symbol(s, "rand"))).name == "rand");
}

TEST_CASE("shipped problem files load") {
  const std::filesystem::path dir = PERISPEC_DATA_DIR "/problems";
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".problem") continue;
    CHECK_NOTHROW(load_problem(entry.path()));
    ++count;
  }
  CHECK(count >= 10);
  CHECK_THROWS_AS(load_problem(dir / "missing.problem"), ParseError);
}

TEST_CASE("report documents round-trip byte for byte") {
  auto out = cli::spectrum({.kind = "sphere", .ell = 2, .kmax = 1});
  const auto doc = make_report("spectrum", out.args, out.results, out.tolerances, 1.25);
  const std::string text = dump_report(doc);
  CHECK(dump_report(parse_report(text)) == text);
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["conventions"]["clifford_sign"] == -1);
  CHECK(doc["conventions"]["index_sign"] == -1);

  CHECK_THROWS_AS(parse_report("{\"schema\": \"other/1\"}"), ParseError);
  try {
    parse_report("{\n  \"schema\": \n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("commands: spectrum tables") {
  auto out = cli::spectrum({.kind = "circle", .spin = "bounding", .c = 0.0, .band = 3});
  const std::string csv = cli::spectrum_csv(out.results);
  CHECK(csv.rfind("eigenvalue,multiplicity\n", 0) == 0);
  for (const char* v : {"-2.5,", "-1.5,", "-0.5,", "0.5,", "1.5,", "2.5,"}) CHECK(csv.find(v) != std::string::npos);

  out = cli::spectrum({.kind = "circle", .spin = "bounding", .c = 0.5, .band = 2});
  CHECK(cli::spectrum_csv(out.results).find("\n0,") != std::string::npos);

  out = cli::spectrum({.kind = "sphere", .ell = 2, .kmax = 1});
  const auto& rows = out.results["eigenvalues"];
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["value"] == -2.0);
  CHECK(rows[0]["multiplicity"] == 4);
  CHECK(rows[1]["value"] == -1.0);
  CHECK(rows[1]["multiplicity"] == 2);

  out = cli::spectrum({.kind = "product", .spin = "bounding", .ell = 3, .kmax = 2});
  CHECK(out.results["bound_holds"] == true);
  CHECK_THROWS_AS(cli::spectrum({.kind = "torus"}), InputError);
  CHECK_THROWS_AS(cli::spectrum({.kind = "circle", .spin = "weird"}), InputError);
  CHECK_THROWS_AS(cli::spectrum({.kind = "sphere", .ell = 0}), InputError);
}

TEST_CASE("commands: twist scan verdicts") {
  auto out = cli::twist_scan({.spin = "bounding"});
  REQUIRE(out.results["kernel_locations"].size() == 1);
  CHECK(std::abs(out.results["kernel_locations"][0].get<double>() - 0.5) < 1e-6);
  CHECK(out.results["verdict"] == "not-fredholm");

  out = cli::twist_scan({.spin = "nonbounding"});
  REQUIRE(out.results["kernel_locations"].size() == 1);
  CHECK(out.results["kernel_locations"][0].get<double>() < 1e-6);

  out = cli::twist_scan({.spin = "bounding", .mass = 0.5});
  CHECK(out.results["kernel_locations"].empty());
  CHECK(out.results["verdict"] == "fredholm");
  CHECK_THROWS_AS(cli::twist_scan({.c_from = 1.0, .c_to = 0.0}), InputError);
}

TEST_CASE("commands: fredholm, index and spectral flow on symbols") {
  const SymbolProblem zm2{"zm2", LaurentSymbol::scalar({{0, -2.0}, {1, 1.0}})};
  auto out = cli::fredholm(zm2, {});
  CHECK(out.results["is_fredholm"] == true);
  CHECK(out.results["index"] == 0);

  const SymbolProblem zm1{"zm1", LaurentSymbol::scalar({{0, -1.0}, {1, 1.0}})};
  out = cli::fredholm(zm1, {});
  CHECK(out.results["is_fredholm"] == false);
  CHECK(std::abs(out.results["witness"]["theta"].get<double>()) < 1e-6);
  CHECK_THROWS_AS(cli::index(zm1), DomainError);

  const SymbolProblem shift{"shift", LaurentSymbol::scalar({{1, 1.0}})};
  CHECK(cli::index(shift).results["index"] == -1);
  CHECK_THROWS_AS(cli::spectral_flow(shift), ContractViolation);

  const auto circle = as_symbol(parse_problem("[symbol]\nsource = circle\nspin = bounding\ngrid = 16\n"));
  out = cli::spectral_flow(circle, 100);
  // A(z(c)) is a closed loop of finite matrices, so the net flow vanishes:
  // the continuum-like mode and its lattice double cross at c = 1/2 in
  // opposite directions.
  CHECK(out.results["flow"] == 0);
  REQUIRE(out.results["crossings"].size() == 2);
  long dirs = 0;
  for (const auto& x : out.results["crossings"]) {
    CHECK(std::abs(x["c"].get<double>() - 0.5) < 1e-6);
    dirs += x["direction"].get<long>();
  }
  CHECK(dirs == 0);
  CHECK(out.results["endpoints_isospectral"] == true);
}

TEST_CASE("commands: invariants and forms") {
  InvariantProblem p{"beta", {{"rho", Rational(1)}, {"sig_v", Rational(-16)}}, false};
  auto out = cli::invariant(p);
  CHECK(out.results["mod2"] == "0");
  p.args["rho"] = 0;
  CHECK(cli::invariant(p).results["mod2"] == "1");

  p = {"alpha", {{"n", Rational(4)}, {"sign", Rational(-16)}}, false};
  CHECK(cli::invariant(p).results["value"] == "1");
  p.args["sign"] = 8;
  CHECK_THROWS_AS(cli::invariant(p), DomainError);

  p = {"rohlin", {{"sig_w", Rational(8)}}, false};
  CHECK(cli::invariant(p).results["mod2"] == "1");

  CHECK(cli::forms_show("K3").results["signature"] == -16);
  CHECK(cli::forms_show("K3").results["rank"] == 22);
  CHECK(cli::forms_sum("-E8+E8+3H").results["signature"] == 0);
  CHECK(cli::forms_show("H").results["signature"] == 0);
  CHECK_THROWS_AS(cli::forms_show("E7"), InputError);
}

TEST_CASE("worked-example fixtures match their expected results") {
  const std::filesystem::path dir = PERISPEC_DATA_DIR "/fixtures";
  std::ifstream in(dir / "expected.json");
  REQUIRE(in);
  const Json expected = Json::parse(in);
  REQUIRE(expected.size() >= 10);
  for (const auto& [file, want] : expected.items()) {
    CAPTURE(file);
    const auto p = load_problem(dir / file);
    if (const auto* f = std::get_if<FormProblem>(&p)) {
      CHECK(f->form.signature() == want["signature"].get<long>());
      CHECK(static_cast<long>(f->form.rank()) == want["rank"].get<long>());
      continue;
    }
    const auto got = cli::invariant(std::get<InvariantProblem>(p)).results;
    for (const auto& [key, value] : want.items()) CHECK(got.at(key) == value);
  }
}
