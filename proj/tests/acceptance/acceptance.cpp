// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfock/qfock.hpp"

using namespace qfock;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Check {
  std::string what;
  double value;
  double bound;
  bool lower = false;  // value must exceed bound
  bool ok() const { return lower ? value > bound : value < bound; }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds
  std::function<std::vector<Check>()> body;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& cmd) {
  Shell r{-1, {}};
  FILE* p = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Criterion> criteria() {
  const std::vector<double> qs{0.3, 0.5, 0.9};
  std::vector<Criterion> out;

  out.push_back({1, "q-scalar suite", 1.0, [=] {
                   std::vector<Check> c;
                   for (double q : qs) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"[n]_q sums" + at, checks::qnumber_sum(50, ctx), 1e-9});
                     c.push_back({"[n+1]-[n] = q^n" + at, checks::bracket_gap(30, ctx), 1e-9});
                     c.push_back({"q-binomial factorial vs recursion" + at, checks::binomial_pascal(20, ctx), 1e-9});
                     c.push_back({"Jackson FTC deg<=8" + at, checks::jackson_ftc(20, 8, kSeed, ctx), 1e-9});
                   }
                   return c;
                 }});

  out.push_back({2, "q-exponential suite", 1.0, [] {
                   std::vector<Check> c;
                   for (double q : {0.3, 0.5}) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"E_q(t) e_q(-t) = 1" + at, checks::qexp_inverse(20, kSeed, ctx), 1e-8});
                     c.push_back({"D E_q = E_q" + at, checks::qexp_derivative_big(20, kSeed, ctx), 1e-8});
                     c.push_back({"D e_q(x) = e_q(qx)" + at, checks::qexp_derivative_small(20, kSeed, ctx), 1e-8});
                     c.push_back({"e_q zeros k<=3" + at, checks::qexp_zeros(3, ctx), 1e-6});
                   }
                   return c;
                 }});

  out.push_back({3, "Gamma_q suite", 5.0, [] {
                   std::vector<Check> c;
                   const QContext ctx(0.5);
                   c.push_back({"functional equation, 20 random t", checks::gamma_functional(20, kSeed, ctx), 1e-9});
                   c.push_back({"integral representation q=0.5", checks::gamma_integral(ctx), 1e-5});
                   for (double nu : {1.0, 3.0, 5.0}) {
                     c.push_back({"moment identity nu=" + fmt(nu), checks::gamma_moment(nu, ctx), 1e-5});
                   }
                   return c;
                 }});

  out.push_back({4, "q-analyticity suite", 5.0, [=] {
                   std::vector<Check> c;
                   for (double q : qs) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"D_zbar z_q^n = 0, n<=30" + at, checks::analytic_dzbar(30, ctx), 1e-12});
                     c.push_back({"D_z z_q^n = [n] z_q^{n-1}, n<=30" + at, checks::analytic_dz(30, ctx), 1e-12});
                     c.push_back({"expansion vs product, n<=12" + at, checks::expansion_vs_product(12, 10, kSeed, ctx),
                                  1e-12});
                   }
                   return c;
                 }});

  out.push_back({5, "q-Hermite suite", 30.0, [=] {
                   std::vector<Check> c;
                   for (double q : qs) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"explicit = recurrence k<=12" + at, checks::hermite_explicit_vs_recurrence(12, ctx),
                                  1e-10});
                     c.push_back({"annihilation k<=10" + at, checks::hermite_annihilate(10, ctx), 1e-9});
                     c.push_back({"creation k<=10" + at, checks::hermite_create(10, ctx), 1e-9});
                     c.push_back({"eigen-equation k<=10" + at, checks::hermite_eigen(10, ctx), 1e-9});
                     c.push_back({"orthogonality Gram vs Lambda_k, k<=8" + at, checks::hermite_orthogonality(8, ctx),
                                  1e-6});
                   }
                   c.push_back({"classical limit q=0.999 k<=5", checks::hermite_classical_limit(5, 0.999), 1e-3});
                   return c;
                 }});

  out.push_back({6, "Fock suite", 10.0, [=] {
                   std::vector<Check> c;
                   for (double q : qs) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"<z_q^n, z_q^m> = [n]! delta" + at, checks::fock_basis_orthogonality(20, ctx), 1e-15});
                     c.push_back({"reproducing, 10 w" + at, checks::fock_reproducing(10, kSeed, ctx), 1e-8});
                     c.push_back({"commutator q^n, n<=20" + at, checks::fock_commutator(20, ctx), 1e-12});
                     c.push_back({"adjointness gap" + at, checks::fock_adjoint(10, kSeed, ctx), 1e-10});
                   }
                   c.push_back({"K_q -> exp(z wbar) q=0.999", checks::fock_kernel_classical(10, kSeed, 0.999), 1e-3});
                   return c;
                 }});

  out.push_back({7, "L2 realization suite", 20.0, [=] {
                   std::vector<Check> c;
                   c.push_back({"complex Hermite orthogonality p,r<=6", checks::complex_hermite_orthogonality(6), 1e-12});
                   c.push_back({"monomial <-> Hermite round-trip N<=6", checks::hermite_roundtrip(6), 1e-10});
                   for (double q : qs) {
                     c.push_back({"mixed Gram min eig / trace N<=6 q=" + fmt(q),
                                  checks::mixed_gram_min_ratio(6, QContext(q)), 1e-10, true});
                   }
                   return c;
                 }});

  out.push_back({8, "Bargmann suite", 60.0, [=] {
                   std::vector<Check> c;
                   for (double q : qs) {
                     const QContext ctx(q);
                     const std::string at = " q=" + fmt(q);
                     c.push_back({"B_q H~_m = e_m/sqrt([m]!) m<=10" + at, checks::bargmann_basis_image(10, 16, ctx), 1e-7});
                     c.push_back({"1-D unitarity M<=8" + at, checks::bargmann_unitarity(9, ctx), 1e-7});
                     c.push_back({"2-D unitarity k,h<=4" + at, checks::tensor_unitarity(4, ctx), 1e-6});
                     c.push_back({"coherent overlap vs K_q" + at, checks::bargmann_coherent_overlap(5, 16, kSeed, ctx),
                                  1e-6});
                   }
                   return c;
                 }});

  out.push_back({9, "CLI contract", 5.0, [] {
                   std::vector<Check> c;
                   const std::string cli = QFOCK_CLI_PATH;
                   c.push_back({"verify exits 0 on defaults", double(shell(cli + " verify").code), 0.5});
                   c.push_back({"verify exits 1 at tol=1e-30",
                                std::abs(shell(cli + " verify --tol 1e-30").code - 1.0), 0.5});
                   const fs::path dir = fs::temp_directory_path();
                   const fs::path a = dir / "qfock_acceptance_a.json", b = dir / "qfock_acceptance_b.json";
                   shell(cli + " verify --format json --seed 3 --out " + a.string());
                   shell(cli + " verify --format json --seed 3 --out " + b.string());
                   const std::string sa = slurp(a), sb = slurp(b);
                   c.push_back({"byte-identical verify artifacts", (!sa.empty() && sa == sb) ? 0.0 : 1.0, 0.5});
                   const std::string g1 = shell(cli + " table hermite-gram --kmax 6").out;
                   const std::string g2 = shell(cli + " table hermite-gram --kmax 6").out;
                   c.push_back({"byte-identical table artifacts", (!g1.empty() && g1 == g2) ? 0.0 : 1.0, 0.5});
                   const auto grid = shell(cli + " grid --figure1 --format json");
                   double gap = 1.0;
                   try {
                     const auto j = nlohmann::json::parse(grid.out)["results"][0];
                     const int per_seed = j["per_seed"].get<int>();
                     const int generated = j["generated"].get<int>();
                     gap = std::abs(per_seed - 49) + std::abs(generated - 9 * 49);
                   } catch (const std::exception&) {
                   }
                   c.push_back({"figure grid: (6+1)^2 = 49 points per seed, 441 before dedup", gap, 0.5});
                   return c;
                 }});
  return out;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& cr : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = cr.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = error.empty() && secs < cr.time_limit;
    for (const auto& c : checks) ok = ok && c.ok();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << "  (" << fmt(secs)
              << " s, limit " << fmt(cr.time_limit) << " s)\n";
    for (const auto& c : checks) {
      std::cout << "        " << (c.ok() ? "ok  " : "FAIL") << "  " << c.what << ": " << fmt(c.value)
                << (c.lower ? " > " : " < ") << fmt(c.bound) << '\n';
    }
    if (!error.empty()) std::cout << "        error: " << error << '\n';
    if (cr.id == 5) {
      std::cout << "        info  classical limit q=1-1e-6 k<=5: "
                << fmt(checks::hermite_classical_limit(5, 1.0 - 1e-6)) << '\n';
    }
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " of 9 criteria failing\n";
  return failed ? 1 : 0;
}
