#include "qfock/qgrid.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <tuple>

namespace qfock {
namespace {

// Integer k with a = b * q^k, if any.
std::optional<int> lattice_offset(double a, double b, double log_q) {
  if (a == 0.0 || b == 0.0) {
    if (a == 0.0 && b == 0.0) return 0;
    return std::nullopt;
  }
  if ((a > 0.0) != (b > 0.0)) return std::nullopt;
  const double k = std::log(a / b) / log_q;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9) return std::nullopt;
  return static_cast<int>(r);
}

struct SeedLattice {
  int cls = 0;
  int ox = 0;  ///< x = rep.x * q^{ox}
  int oy = 0;  ///< y = rep.y * q^{oy}
};

using Key = std::tuple<int, int, int>;

}  // namespace

QGrid qgrid_generate(const std::vector<GridSeed>& seeds, int depth, const QContext& ctx) {
  if (depth < 0) throw DomainError("qgrid_generate: depth must be >= 0");
  const double q = ctx.q();
  const double log_q = std::log(q);

  QGrid g;
  g.seeds = seeds;
  g.depth = depth;
  g.q = q;
  g.generated = g.per_seed() * seeds.size();

  std::vector<GridSeed> reps;
  std::vector<SeedLattice> lattice;
  for (const auto& s : seeds) {
    SeedLattice l{static_cast<int>(reps.size()), 0, 0};
    for (std::size_t c = 0; c < reps.size(); ++c) {
      auto ox = lattice_offset(s.x, reps[c].x, log_q);
      auto oy = lattice_offset(s.y, reps[c].y, log_q);
      if (ox && oy) {
        l = {static_cast<int>(c), *ox, *oy};
        break;
      }
    }
    if (l.cls == static_cast<int>(reps.size())) reps.push_back(s);
    lattice.push_back(l);
  }

  std::set<Key> seen;
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    const auto& s = seeds[si];
    const auto& l = lattice[si];
    double qb1 = 1.0;
    for (int b1 = 0; b1 <= depth; ++b1) {
      double qb2 = 1.0;
      for (int b2 = 0; b2 <= depth; ++b2) {
        // A zero coordinate is fixed by the dilation; its exponent is irrelevant.
        const int ex = s.x == 0.0 ? 0 : l.ox + b1;
        const int ey = s.y == 0.0 ? 0 : l.oy - b2;
        if (seen.insert({l.cls, ex, ey}).second) {
          g.points.push_back({s.x * qb1, s.y / qb2, static_cast<int>(si), b1, b2});
        }
        qb2 *= q;
      }
      qb1 *= q;
    }
  }
  return g;
}

bool QGrid::closure_holds() const {
  std::set<std::tuple<int, int, int>> have;
  for (const auto& p : points) have.insert({p.seed, p.b1, p.b2});
  // Membership is checked per seed lattice: a neighbour may have been stored
  // under an earlier seed, so fall back to coordinates within 1e-12 relative.
  auto present = [&](int seed, int b1, int b2) {
    if (have.count({seed, b1, b2})) return true;
    const double x = seeds[seed].x * std::pow(q, b1);
    const double y = seeds[seed].y * std::pow(q, -b2);
    for (const auto& p : points) {
      if (std::abs(p.x - x) <= 1e-12 * std::abs(x) && std::abs(p.y - y) <= 1e-12 * std::abs(y)) return true;
    }
    return false;
  };
  for (const auto& p : points) {
    if (p.b1 < depth && !present(p.seed, p.b1 + 1, p.b2)) return false;
    if (p.b2 < depth && !present(p.seed, p.b1, p.b2 + 1)) return false;
  }
  return true;
}

std::vector<GridSeed> figure1_seeds() {
  std::vector<GridSeed> s;
  for (double y : {1.2, 1.0, 0.8}) {
    for (double x : {9.8, 10.0, 10.2}) s.push_back({x, y});
  }
  return s;
}

}  // namespace qfock
