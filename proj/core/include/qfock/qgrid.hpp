#pragma once

#include <cstddef>
#include <vector>

#include "qfock/context.hpp"

namespace qfock {

struct GridSeed {
  double x = 0.0;
  double y = 0.0;
};

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
  int seed = 0;  ///< index of the seed that first produced the point
  int b1 = 0;    ///< x = q^{b1} * seed.x
  int b2 = 0;    ///< y = q^{-b2} * seed.y
};

/**
 * A (q, q^{-1})-grid: every point (q^{b1} x, q^{-b2} y), 0 <= b1, b2 <= depth,
 * for each seed (x, y).
 *
 * Duplicates are removed by integer exponent bookkeeping. Seeds whose
 * coordinates differ by an integral power of q (checked once, per axis, on
 * log_q of the ratio) share a lattice; points on a shared lattice are compared
 * by their integer exponents, never by floating coordinates.
 */
struct QGrid {
  std::vector<GridSeed> seeds;
  int depth = 0;
  double q = 0.5;
  std::size_t generated = 0;  ///< (depth+1)^2 * seeds, before deduplication
  std::vector<GridPoint> points;

  /// Points contributed by one seed before deduplication, (depth+1)^2.
  std::size_t per_seed() const { return static_cast<std::size_t>(depth + 1) * (depth + 1); }

  /// For every stored point with exponent budget left, (qx, y) and (x, y/q)
  /// are stored too.
  bool closure_holds() const;
};

QGrid qgrid_generate(const std::vector<GridSeed>& seeds, int depth, const QContext& ctx);

/// The nine generating points of the reference picture (depth 6, q = 0.6).
std::vector<GridSeed> figure1_seeds();

}  // namespace qfock
