#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "cgft/cgf.hpp"

namespace cgft {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// GridFn: a function on a finite point set with values in R u {-inf}.
// ---------------------------------------------------------------------------

class GridFn {
 public:
  GridFn(std::vector<Vector> grid, std::vector<double> values);

  int dim() const { return dim_; }
  std::size_t size() const { return grid_.size(); }
  const std::vector<Vector>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const Vector& point(std::size_t i) const { return grid_[i]; }
  double value(std::size_t i) const { return values_[i]; }

  std::optional<std::size_t> find(const Vector& p) const;
  /// Like find() but throws Lookup when absent.
  std::size_t index_of(const Vector& p) const;
  double value_at(const Vector& p) const { return values_[index_of(p)]; }

  GridFn with_values(std::vector<double> values) const;

 private:
  std::vector<Vector> grid_;
  std::vector<double> values_;
  int dim_;
};

// ---------------------------------------------------------------------------
// Conjugation on grids. Both directions take the pointwise minimum of
// cost - function over the source grid; argmin indices are recorded, and
// minima attained on the source grid's bounding box are flagged as likely
// truncation artifacts.
// ---------------------------------------------------------------------------

struct TransformResult {
  GridFn fn;
  std::vector<std::size_t> argmin;
  std::vector<bool> argmin_on_boundary;

  bool any_boundary() const;
};

/// psi0(y) = min_x [ L(x - y) - psi(x) ] over psi's grid, for y in y_grid.
TransformResult transform_fwd(const GridFn& psi, const std::vector<Vector>& y_grid,
                              const BaseMeasure& base);

/// psi(x) = min_y [ L(x - y) - rho(y) ] over rho's grid, for x in x_grid.
/// The output is grid-concave for the cost by construction.
TransformResult transform_bwd(const GridFn& rho, const std::vector<Vector>& x_grid,
                              const BaseMeasure& base);

// ---------------------------------------------------------------------------
// Superdifferential pairs.
// ---------------------------------------------------------------------------

struct SuperdiffPair {
  Vector theta;
  Vector y;
  /// Max over the grid of psi(v) - psi(theta) - L(v-y) + L(theta-y), clipped
  /// below at zero.
  double slack = 0.0;

  bool accepted(double tol = 1e-8) const { return slack <= tol; }
};

/// Checks (theta, y) against the superdifferential inequality over psi's
/// grid. theta must be a grid point with finite value.
SuperdiffPair superdiff_check(const GridFn& psi, const Vector& theta, const Vector& y,
                              const BaseMeasure& base);

/// L(theta - y) - psi(theta) - psi0(y). Nonnegative (up to rounding) whenever
/// psi0 is the forward transform of psi; zero iff the pair is accepted.
double duality_gap(const GridFn& psi, const GridFn& psi0, const Vector& theta,
                   const Vector& y, const BaseMeasure& base);

/// Distance from grid concavity: positive parts of the two one-sided maxima
/// of double-transform minus psi, with psi's own grid as the intermediate.
double concavity_residual(const GridFn& psi, const BaseMeasure& base);

/// Acceptance tolerance L*h + h^2 with h the max nearest-neighbor spacing.
double grid_tolerance(const std::vector<Vector>& grid, double lipschitz = 10.0);

}  // namespace cgft
