#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "qfock/qfock.hpp"

namespace qfock::cli {
namespace {

using json = nlohmann::ordered_json;

// Raised for malformed user input that is not a QContext problem.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0.0 ? 0.0 : v;
}

json complex_json(cplx z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}, {"text", format_complex(z)}}; }

json config_json(const RunConfig& c) {
  json j;
  j["q"] = number(c.q);
  j["modes"] = c.modes;
  j["depth"] = c.depth;
  j["tol"] = c.tol ? number(*c.tol) : json(nullptr);
  j["format"] = c.format;
  j["seed"] = c.seed;
  return j;
}

void check_format(const std::string& f) {
  if (f != "csv" && f != "json") throw UsageError("format must be csv or json, got '" + f + "'");
}

VerifyConfig verify_config(const RunConfig& c) { return VerifyConfig{c.q, c.modes, c.depth, c.tol, c.seed}; }

QContext context(const RunConfig& c) {
  if (c.depth < 1) throw ConfigError("depth must be >= 1");
  return verify_context(verify_config(c));
}

// Flags as parsed; unset ones fall back to the file config.
struct GlobalFlags {
  std::optional<double> q;
  std::optional<int> modes;
  std::optional<int> depth;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

RunConfig merge(RunConfig base, const GlobalFlags& f) {
  if (f.q) base.q = *f.q;
  if (f.modes) base.modes = *f.modes;
  if (f.depth) base.depth = *f.depth;
  if (f.tol) base.tol = *f.tol;
  if (f.format) base.format = *f.format;
  if (f.seed) base.seed = *f.seed;
  check_format(base.format);
  return base;
}

RunConfig load_env_config() {
  const char* path = std::getenv("QFOCK_CONFIG");
  if (!path || !*path) return {};
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot read QFOCK_CONFIG file ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string target;
  std::optional<double> alpha, x, t;
  std::optional<int> n, k;
  std::optional<std::string> at, z, w;
};

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& target) {
  if (!v) throw UsageError("eval " + target + " needs " + flag);
  return *v;
}

void emit_scalar(std::ostream& out, const RunConfig& cfg, const std::string& target, double v) {
  if (cfg.format == "csv") {
    out << format_real(v) << '\n';
    return;
  }
  json j{{"config", config_json(cfg)}, {"results", json::array({json{{"target", target}, {"value", number(v)}}})}};
  out << j.dump(2) << '\n';
}

void emit_complex(std::ostream& out, const RunConfig& cfg, const std::string& target, cplx v) {
  if (cfg.format == "csv") {
    out << format_complex(v) << '\n';
    return;
  }
  json j{{"config", config_json(cfg)}, {"results", json::array({json{{"target", target}, {"value", complex_json(v)}}})}};
  out << j.dump(2) << '\n';
}

int cmd_eval(const EvalArgs& a, const RunConfig& cfg, std::ostream& out) {
  const QContext ctx = context(cfg);
  const std::string& tg = a.target;
  if (tg == "qnum") {
    emit_scalar(out, cfg, tg, q_number(need(a.alpha, "--alpha", tg), ctx));
  } else if (tg == "qfact") {
    emit_scalar(out, cfg, tg, q_factorial(need(a.n, "--n", tg), ctx));
  } else if (tg == "qbinom") {
    emit_scalar(out, cfg, tg, q_binomial(need(a.n, "--n", tg), need(a.k, "--k", tg), ctx));
  } else if (tg == "Eq") {
    emit_scalar(out, cfg, tg, q_exp(QExpVariant::big(ctx.q()), need(a.x, "--x", tg), ctx));
  } else if (tg == "eq") {
    emit_scalar(out, cfg, tg, q_exp(QExpVariant::small(ctx.q()), need(a.x, "--x", tg), ctx));
  } else if (tg == "gamma") {
    emit_scalar(out, cfg, tg, q_gamma(need(a.t, "--t", tg), ctx));
  } else if (tg == "zq") {
    const auto [x, y] = parse_pair(need(a.at, "--at", tg));
    const int n = need(a.n, "--n", tg);
    if (n < 0) throw DomainError("zq: n must be non-negative");
    emit_complex(out, cfg, tg, zq_value(n, x, y, ctx));
  } else if (tg == "hermite") {
    const int k = need(a.k, "--k", tg);
    if (k < 0) throw DomainError("hermite: k must be non-negative");
    const QHermitePoly h = qhermite_explicit(k, ctx);
    if (a.t) {
      emit_scalar(out, cfg, tg, h(*a.t));
      return kOk;
    }
    if (cfg.format == "csv") {
      out << "power,coeff\n";
      for (int m = 0; m <= k; ++m) out << m << ',' << format_full(h.poly.coeff(m)) << '\n';
    } else {
      json coeffs = json::array();
      for (int m = 0; m <= k; ++m) coeffs.push_back(number(h.poly.coeff(m)));
      out << json{{"config", config_json(cfg)},
                  {"results", json::array({json{{"target", tg}, {"k", k}, {"coeffs", coeffs}}})}}
                 .dump(2)
          << '\n';
    }
  } else if (tg == "kernel") {
    const cplx z = parse_complex(need(a.z, "--z", tg));
    const cplx w = parse_complex(need(a.w, "--w", tg));
    const KernelEvaluation k = kernel_eval(z, w, ctx);
    if (cfg.format == "csv") {
      out << format_complex(k.value) << '\n';
    } else {
      json r{{"target", tg}, {"value", complex_json(k.value)}, {"terms", k.N + 1}, {"tail_bound", number(k.tail_bound)}};
      out << json{{"config", config_json(cfg)}, {"results", json::array({r})}}.dump(2) << '\n';
    }
  } else {
    throw UsageError("unknown eval target '" + tg + "' (qnum, qfact, qbinom, Eq, eq, gamma, zq, hermite, kernel)");
  }
  return kOk;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string name;
  int kmax = 6;
  int N = 3;
  std::optional<int> M;
  std::string w = "0";
  double extent = 1.0;
  int steps = 11;
};

void emit_gram(std::ostream& out, const RunConfig& cfg, const GramReport& g) {
  const Eigen::Index n = g.matrix.rows();
  if (cfg.format == "csv") {
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        out << csv_field(g.labels[i]) << ',' << csv_field(g.labels[j]) << ',' << format_full(g.matrix(i, j).real())
            << ',' << format_full(g.matrix(i, j).imag()) << '\n';
      }
    }
    return;
  }
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index j = 0; j < n; ++j) {
      rr.push_back(number(g.matrix(i, j).real()));
      ri.push_back(number(g.matrix(i, j).imag()));
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  json diag{{"max_abs_deviation", number(g.max_abs_deviation)},
            {"max_normalized_deviation", number(g.max_normalized_deviation)},
            {"hermitian_defect", number(g.hermitian_defect)},
            {"min_eigenvalue", number(g.min_eigenvalue)},
            {"max_eigenvalue", number(g.max_eigenvalue)},
            {"trace", number(g.trace)},
            {"rank", g.rank},
            {"full_rank", g.full_rank()},
            {"has_target", g.target.has_value()}};
  json r{{"name", g.name}, {"size", n}, {"labels", g.labels}, {"re", re}, {"im", im}, {"diagnostics", diag}};
  out << json{{"config", config_json(cfg)}, {"results", json::array({r})}}.dump(2) << '\n';
}

int cmd_table(const TableArgs& a, const RunConfig& cfg, std::ostream& out) {
  const QContext ctx = context(cfg);
  if (a.name == "hermite-gram") {
    if (a.kmax < 0) throw DomainError("kmax must be non-negative");
    emit_gram(out, cfg, hermite_gram(a.kmax, ctx));
  } else if (a.name == "mixed-gram") {
    if (a.N < 0) throw DomainError("N must be non-negative");
    emit_gram(out, cfg, mixed_basis_gram(a.N, ctx));
  } else if (a.name == "bargmann-gram") {
    emit_gram(out, cfg, bargmann_unitarity_gram(a.M.value_or(cfg.modes), ctx));
  } else if (a.name == "tensor-gram") {
    emit_gram(out, cfg, tensor_unitarity_gram(BargmannKernelTable(a.M.value_or(cfg.modes), ctx)));
  } else if (a.name == "kernel-grid") {
    if (a.steps < 2) throw DomainError("steps must be >= 2");
    if (!(a.extent > 0.0)) throw DomainError("extent must be > 0");
    const cplx w = parse_complex(a.w);
    json rows = json::array();
    if (cfg.format == "csv") out << "x,y,re,im,abs\n";
    for (int i = 0; i < a.steps; ++i) {
      const double y = -a.extent + 2.0 * a.extent * i / (a.steps - 1);
      for (int j = 0; j < a.steps; ++j) {
        const double x = -a.extent + 2.0 * a.extent * j / (a.steps - 1);
        const cplx k = kernel_eval(cplx(x, y), w, ctx).value;
        if (cfg.format == "csv") {
          out << format_full(x) << ',' << format_full(y) << ',' << format_full(k.real()) << ','
              << format_full(k.imag()) << ',' << format_full(std::abs(k)) << '\n';
        } else {
          rows.push_back(json{{"x", number(x)}, {"y", number(y)}, {"re", number(k.real())}, {"im", number(k.imag())},
                              {"abs", number(std::abs(k))}});
        }
      }
    }
    if (cfg.format == "json") {
      json r{{"name", "kernel-grid"}, {"w", complex_json(w)}, {"points", rows}};
      out << json{{"config", config_json(cfg)}, {"results", json::array({r})}}.dump(2) << '\n';
    }
  } else {
    throw UsageError("unknown table '" + a.name + "' (hermite-gram, mixed-gram, bargmann-gram, tensor-gram, kernel-grid)");
  }
  return kOk;
}

// ---------------------------------------------------------------- grid

struct GridArgs {
  std::optional<std::string> points;
  std::optional<std::string> points_file;
  bool figure1 = false;
  std::optional<int> iterations;
};

std::vector<GridSeed> parse_seed_list(const std::string& text) {
  std::vector<GridSeed> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto [x, y] = parse_pair(item);
    seeds.push_back({x, y});
  }
  return seeds;
}

std::vector<GridSeed> read_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read seed file " + path);
  std::vector<GridSeed> seeds;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    try {
      const auto [x, y] = parse_pair(line);
      seeds.push_back({x, y});
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return seeds;
}

int cmd_grid(const GridArgs& a, RunConfig cfg, bool q_flag_given, std::ostream& out) {
  std::vector<GridSeed> seeds;
  if (a.figure1) {
    seeds = figure1_seeds();
    if (!q_flag_given) cfg.q = 0.6;
  }
  if (a.points) {
    auto more = parse_seed_list(*a.points);
    seeds.insert(seeds.end(), more.begin(), more.end());
  }
  if (a.points_file) {
    auto more = read_seed_file(*a.points_file);
    seeds.insert(seeds.end(), more.begin(), more.end());
  }
  if (seeds.empty()) throw UsageError("grid needs --points, --points-file or --figure1");
  const int depth = a.iterations.value_or(6);
  if (depth < 0) throw DomainError("iterations must be non-negative");

  const QContext ctx = context(cfg);
  const QGrid g = qgrid_generate(seeds, depth, ctx);
  if (cfg.format == "csv") {
    out << "x,y,seed,b1,b2\n";
    for (const auto& p : g.points) {
      out << format_full(p.x) << ',' << format_full(p.y) << ',' << p.seed << ',' << p.b1 << ',' << p.b2 << '\n';
    }
    return kOk;
  }
  json js = json::array();
  for (const auto& s : g.seeds) js.push_back(json{{"x", number(s.x)}, {"y", number(s.y)}});
  json pts = json::array();
  for (const auto& p : g.points) {
    pts.push_back(json{{"x", number(p.x)}, {"y", number(p.y)}, {"seed", p.seed}, {"b1", p.b1}, {"b2", p.b2}});
  }
  json r{{"name", "grid"},   {"q", number(g.q)},          {"iterations", depth},
         {"seeds", js},      {"per_seed", g.per_seed()},  {"generated", g.generated},
         {"unique", g.points.size()}, {"closure", g.closure_holds()}, {"points", pts}};
  out << json{{"config", config_json(cfg)}, {"results", json::array({r})}}.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerificationSuiteResult r = run_verification(verify_config(cfg));
  if (cfg.format == "csv") {
    out << "name,anchor,residual,tol,pass,note\n";
    for (const auto& e : r.entries) {
      out << csv_field(e.name) << ',' << csv_field(e.anchor) << ',' << format_full(e.residual) << ','
          << format_full(e.tol) << ',' << (e.pass ? "true" : "false") << ',' << csv_field(e.note) << '\n';
    }
  } else {
    json results = json::array();
    for (const auto& e : r.entries) {
      json j{{"name", e.name}, {"anchor", e.anchor}, {"residual", number(e.residual)}, {"tol", number(e.tol)},
             {"pass", e.pass}};
      if (e.skipped) j["skipped"] = true;
      if (!e.note.empty()) j["note"] = e.note;
      results.push_back(j);
    }
    json j{{"config", config_json(cfg)}, {"pass", r.pass()}, {"results", results}};
    out << j.dump(2) << '\n';
  }
  err << "verify: " << r.entries.size() << " identities, " << r.failures() << " failed\n";
  for (const auto& e : r.entries) {
    if (!e.pass) err << "  FAIL " << e.name << "  residual " << format_real(e.residual) << " > tol " << format_real(e.tol) << '\n';
  }
  return r.pass() ? kOk : kVerifyFailed;
}

}  // namespace

RunConfig parse_config_json(const std::string& text, RunConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "q") base.q = v.get<double>();
      else if (key == "modes") base.modes = v.get<int>();
      else if (key == "depth") base.depth = v.get<int>();
      else if (key == "tol") base.tol = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
      else if (key == "format") base.format = v.get<std::string>();
      else if (key == "seed") base.seed = v.get<std::uint64_t>();
      else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  check_format(base.format);
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-calculus, q-Hermite, q-Fock and q-Bargmann numerics"};
  app.name("qfock");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--q", g.q, "deformation parameter in (0,1) [0.5]");
  app.add_option("--modes", g.modes, "Bargmann modes M [16]");
  app.add_option("--depth", g.depth, "Jackson node depth J [400]");
  app.add_option("--tol", g.tol, "override every verification tolerance");
  app.add_option("--format", g.format, "csv or json [csv]");
  app.add_option("--seed", g.seed, "seed for randomized checks [42]");
  app.add_option("--out", g.out, "write the artifact to FILE instead of stdout");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("target", ea.target, "qnum, qfact, qbinom, Eq, eq, gamma, zq, hermite, kernel")->required();
  eval->add_option("--alpha", ea.alpha, "argument of [alpha]_q");
  eval->add_option("--n", ea.n, "index n");
  eval->add_option("--k", ea.k, "index k");
  eval->add_option("--x", ea.x, "argument of E_q / e_q");
  eval->add_option("--t", ea.t, "argument of Gamma_q or H_k");
  eval->add_option("--at", ea.at, "point x,y for zq");
  eval->add_option("--z", ea.z, "complex a+bi");
  eval->add_option("--w", ea.w, "complex a+bi");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "emit a matrix or grid artifact");
  table->add_option("name", ta.name, "hermite-gram, mixed-gram, bargmann-gram, tensor-gram, kernel-grid")->required();
  table->add_option("--kmax", ta.kmax, "largest Hermite degree [6]");
  table->add_option("--N", ta.N, "largest total degree of the mixed basis [3]");
  table->add_option("--M", ta.M, "number of Bargmann modes [--modes]");
  table->add_option("--w", ta.w, "kernel-grid: fixed second argument [0]");
  table->add_option("--extent", ta.extent, "kernel-grid: half-width of the square [1]");
  table->add_option("--steps", ta.steps, "kernel-grid: points per axis [11]");

  GridArgs ga;
  auto* grid = app.add_subcommand("grid", "generate (q, 1/q)-grid points");
  grid->add_option("--points", ga.points, "seeds as \"x,y;x,y\"");
  grid->add_option("--points-file", ga.points_file, "file with one x,y seed per line");
  grid->add_flag("--figure1", ga.figure1, "the nine reference seeds (q = 0.6 unless --q is given)");
  grid->add_option("--iterations", ga.iterations, "exponent depth per axis [6]");

  auto* verify = app.add_subcommand("verify", "check every identity and report residuals");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qfock: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const RunConfig cfg = merge(load_env_config(), g);
    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& sink = g.out ? static_cast<std::ostream&>(buffer) : out;

    int code = kOk;
    if (eval->parsed()) code = cmd_eval(ea, cfg, sink);
    else if (table->parsed()) code = cmd_table(ta, cfg, sink);
    else if (grid->parsed()) code = cmd_grid(ga, cfg, g.q.has_value(), sink);
    else if (verify->parsed()) code = cmd_verify(cfg, sink, err);

    if (g.out) {
      file.open(*g.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *g.out);
      file << buffer.str();
    }
    return code;
  } catch (const std::exception& e) {
    // DomainError, ConfigError and malformed input all land here.
    err << "qfock: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace qfock::cli
