// planarharm: build, verify and tabulate planar harmonic polynomials for the
// type-B Dunkl Laplacian.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "planarharm/planarharm.hpp"

namespace ph = planarharm;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<int> N;
  std::optional<std::string> k;
  std::optional<std::string> k1;
  std::uint64_t seed = 1;
  int samples = 3;
  std::string format = "json";
  int max_n = 11;
};

ph::Rational parse_or_usage(const std::string& text, const char* flag) {
  try {
    return ph::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

ph::Params params_from(const Globals& g) {
  const int N = g.N.value_or(3);
  if (N < 2 || N > static_cast<int>(ph::kMaxVars)) throw UsageError("--N must lie in [2, 12]");
  return ph::Params(N, parse_or_usage(g.k.value_or("1"), "--k"), parse_or_usage(g.k1.value_or("1"), "--k1"));
}

template <class W>
void emit(const ph::BasicPoly<W>& p, const std::string& format, char symbol) {
  if (format == "latex")
    std::cout << ph::to_latex(p, symbol) << '\n';
  else if (format == "csv")
    std::cout << ph::to_csv(p, symbol);
  else
    std::cout << ph::serialize(p) << '\n';
}

// ---- build ----------------------------------------------------------------

struct BuildOpts {
  std::string basis = "h";
  int n = 0;
  int eps = 0;
  int order = 0;
  int j = 0;
  std::string alpha;
};

int cmd_build(const Globals& g, const BuildOpts& o) {
  const ph::Params p = params_from(g);
  if (o.basis == "h") {
    const ph::HarmonicLabel l{o.n, o.eps};
    if (!l.valid()) throw UsageError("invalid harmonic label: need n >= 0 and eps in {0, 1}");
    emit(ph::build_harmonic(l, p).poly, g.format, 'x');
  } else if (o.basis == "phi" || o.basis == "psi") {
    if (o.order < 0 || o.j < 0 || o.j > o.order) throw UsageError("need 0 <= j <= order");
    const ph::PlanarBasis basis(p, o.order);
    emit(o.basis == "phi" ? basis.phi(o.order, o.j) : basis.psi(o.order, o.j), g.format, 'x');
  } else {
    ph::Composition alpha;
    std::stringstream ss(o.alpha);
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(part, &used);
        if (used != part.size() || v < 0) throw std::invalid_argument(part);
        alpha.parts.push_back(v);
      } catch (const std::exception&) {
        throw UsageError("--alpha must be a comma-separated list of non-negative integers");
      }
    }
    if (static_cast<int>(alpha.parts.size()) != p.N()) throw UsageError("--alpha must have N entries");
    ph::PBasis basis(p);
    emit(basis.p_alpha(alpha), g.format, 'y');
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
  std::vector<std::string> suites;
  bool corrupt = false;
};

int cmd_verify(const Globals& g, const VerifyOpts& o) {
  if (g.samples < 1) throw UsageError("--samples must be at least 1");
  if (g.max_n < 0) throw UsageError("--max-n must be non-negative");
  if (g.k.has_value() != g.k1.has_value()) throw UsageError("give both --k and --k1, or neither");
  ph::VerifyConfig c = ph::default_config(g.seed, g.samples);
  if (g.k) {
    c.samples.assign(static_cast<std::size_t>(g.samples),
                     ph::ParamSample{parse_or_usage(*g.k, "--k"), parse_or_usage(*g.k1, "--k1")});
    if (c.samples.front().k < 0 || c.samples.front().k1 < 0) throw UsageError("--k and --k1 must be non-negative");
  }
  if (g.N) {
    if (*g.N < 3 || *g.N > static_cast<int>(ph::kMaxVars)) throw UsageError("verify needs --N in [3, 12]");
    c.Ns = {*g.N};
  }
  c.max_n = g.max_n;
  c.corrupt = o.corrupt;
  for (const auto& s : o.suites) {
    bool known = false;
    for (const auto& e : ph::all_suites()) known = known || s == e.name;
    if (!known) throw UsageError("unknown suite: " + s);
  }
  c.only = o.suites;

  std::cout << "seed " << g.seed << ", max-n " << c.max_n << ", samples";
  for (const auto& s : c.samples) std::cout << " (k=" << ph::to_string(s.k) << ", k1=" << ph::to_string(s.k1) << ")";
  std::cout << ", omega";
  for (const auto& w : c.omegas) std::cout << ' ' << ph::to_string(w);
  std::cout << '\n';

  const auto results = ph::run_suites(c);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks << " failures=" << r.failures
              << '\n';
    if (!r.passed()) {
      ++failed;
      std::cout << "  counterexample: " << r.counterexample->dump() << '\n';
    }
  }
  std::cout << (failed == 0 ? "ALL PASS" : "FAILED") << " (" << results.size() - failed << "/" << results.size()
            << " suites)\n";
  return failed == 0 ? 0 : kExitFail;
}

// ---- table ----------------------------------------------------------------

struct Row {
  std::vector<std::string> cells;
  bool agree;
};

void print_table(const std::vector<std::string>& header, const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json o;
      for (std::size_t i = 0; i < r.cells.size(); ++i) {
        if (header[i] == "n" || header[i] == "eps")
          o[header[i]] = std::stoi(r.cells[i]);
        else
          o[header[i]] = r.cells[i];
      }
      o["agree"] = r.agree;
      out.push_back(std::move(o));
    }
    std::cout << out.dump(2) << '\n';
    return;
  }
  if (format == "latex") {
    std::cout << "\\begin{tabular}{" << std::string(header.size() + 1, 'l') << "}\n";
    for (const auto& h : header) std::cout << "\\texttt{" << h << "} & ";
    std::cout << "agree \\\\\n\\hline\n";
    for (const auto& r : rows) {
      for (const auto& c : r.cells) std::cout << '$' << c << "$ & ";
      std::cout << (r.agree ? "true" : "false") << " \\\\\n";
    }
    std::cout << "\\end{tabular}\n";
    return;
  }
  for (const auto& h : header) std::cout << h << ',';
  std::cout << "agree\n";
  for (const auto& r : rows) {
    for (const auto& c : r.cells) std::cout << c << ',';
    std::cout << (r.agree ? "true" : "false") << '\n';
  }
}

std::string monomial_text(const ph::Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

int cmd_table(const Globals& g, const std::string& kind) {
  if (g.max_n < 0) throw UsageError("--max-n must be non-negative");
  const ph::Params p = params_from(g);
  ph::HarmonicCache cache(p);
  const auto N = static_cast<std::size_t>(p.N());
  std::vector<std::string> header;
  std::vector<Row> rows;
  auto cell = [&](const ph::Rational& r) { return g.format == "latex" ? ph::detail::latex_rational(r) : ph::to_string(r); };
  for (int n = 0; n <= g.max_n; ++n)
    for (int eps = 0; eps <= 1; ++eps) {
      const ph::HarmonicLabel l{n, eps};
      const auto& h = cache.get(l).poly;
      if (kind == "values") {
        header = {"n", "eps", "closed", "direct"};
        const ph::Rational closed = ph::value_at_ones(l, p);
        const ph::Rational direct = ph::poly_eval(h, std::vector<ph::Rational>(N, ph::Rational(1)));
        rows.push_back({{std::to_string(n), std::to_string(eps), cell(closed), cell(direct)}, closed == direct});
      } else if (kind == "leading") {
        header = {"n", "eps", "monomial", "closed", "direct"};
        for (auto sel : {ph::CofSelector::Leading, ph::CofSelector::Companion}) {
          const ph::Monomial m = ph::cof_monomial(l, sel, N);
          const ph::Rational closed = ph::leading_coefficient(l, sel, p);
          const ph::Rational direct = h.coefficient(m);
          rows.push_back({{std::to_string(n), std::to_string(eps), monomial_text(m), cell(closed), cell(direct)},
                          closed == direct});
        }
      } else {
        header = {"n", "eps", "oracle", "closed", "x0_value", "t_scalar"};
        ph::NormCertificate cert;
        bool agree = true;
        try {
          cert = ph::norm_squared(l, cache);
        } catch (const std::logic_error&) {
          agree = false;
        }
        rows.push_back({{std::to_string(n), std::to_string(eps), cell(cert.oracle), cell(cert.closed),
                         cell(cert.x0_value), cell(cert.t_scalar)},
                        agree});
      }
    }
  print_table(header, rows, g.format);
  for (const auto& r : rows)
    if (!r.agree) return kExitFail;
  return 0;
}

// ---- calogero -------------------------------------------------------------

struct CalogeroOpts {
  int m = 0;
  int n = 0;
  int eps = 0;
  std::string omega = "1";
};

int cmd_calogero_check(const Globals& g, const CalogeroOpts& o) {
  const ph::Params p = params_from(g);
  const ph::Rational omega = parse_or_usage(o.omega, "--omega");
  if (omega <= 0) throw UsageError("--omega must be positive");
  if (o.m < o.eps || o.n < 0) throw UsageError("need m >= eps and n >= 0");
  const ph::CalogeroParams cp(p, omega);
  const ph::EigenLabel el = ph::EigenLabel::standard(o.m, o.n, p);
  const ph::HarmonicLabel hl{o.m - o.eps, o.eps};
  const ph::MultiPoly f = ph::eigenfunction(el, hl, cp);
  const bool ok = ph::conjugated_hamiltonian(f, cp) == f * el.eigenvalue(cp);
  std::cout << "harmonic " << ph::to_string(hl) << ", Laguerre degree " << o.n << ", index c = " << ph::to_string(el.c)
            << '\n';
  std::cout << "eigenvalue " << ph::to_string(el.eigenvalue(cp)) << '\n';
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar harmonic polynomials for the type-B Dunkl Laplacian"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--N", g.N, "Number of variables (default 3; verify: 3 and 4)")->check(CLI::Range(2, 12));
  app.add_option("--k", g.k, "Parameter k as p/q (default 1)");
  app.add_option("--k1", g.k1, "Parameter k1 as p/q (default 1)");
  app.add_option("--seed", g.seed, "Seed for parameter sampling")->capture_default_str();
  app.add_option("--samples", g.samples, "Random (k, k1) samples per suite")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex"}))
      ->capture_default_str();
  app.add_option("--max-n", g.max_n, "Largest harmonic index n")->capture_default_str();

  BuildOpts bo;
  auto* build = app.add_subcommand("build", "Emit h_{n,eps}, phi, psi or p_alpha");
  build->add_option("--basis", bo.basis, "h, phi, psi or p")
      ->check(CLI::IsMember({"h", "phi", "psi", "p"}))
      ->capture_default_str();
  build->add_option("--n", bo.n, "Harmonic index n");
  build->add_option("--eps", bo.eps, "Harmonic index eps (0 or 1)");
  build->add_option("--order", bo.order, "phi/psi order");
  build->add_option("--j", bo.j, "phi/psi index j");
  build->add_option("--alpha", bo.alpha, "Composition for p_alpha, e.g. 2,1,0");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", vo.suites, "Restrict to the named suites");
  verify->add_flag("--corrupt", vo.corrupt, "Negative control: perturb one coefficient");

  std::string table_kind;
  auto* table = app.add_subcommand("table", "Closed forms against direct computation");
  table->add_option("kind", table_kind, "values, leading or norms")
      ->required()
      ->check(CLI::IsMember({"values", "leading", "norms"}));

  CalogeroOpts co;
  auto* calogero = app.add_subcommand("calogero", "Spin Calogero eigenfunctions");
  calogero->require_subcommand(1);
  auto* check = calogero->add_subcommand("check", "Check one eigen-relation");
  check->add_option("--m", co.m, "Degree of the harmonic factor")->required();
  check->add_option("--n", co.n, "Laguerre degree")->required();
  check->add_option("--omega", co.omega, "Frequency as p/q")->capture_default_str();
  check->add_option("--eps", co.eps, "Use h_{m-1,1} instead of h_{m,0}")->check(CLI::Range(0, 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(g, bo);
    if (*verify) return cmd_verify(g, vo);
    if (*table) return cmd_table(g, table_kind);
    if (*check) return cmd_calogero_check(g, co);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
