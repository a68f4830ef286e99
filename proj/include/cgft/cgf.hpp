#pragma once

#include <optional>

#include "cgft/measures.hpp"

namespace cgft {

// ---------------------------------------------------------------------------
// BaseMeasure: a probability measure mu0 together with its cumulant
// generating function L(theta) = log mu0(e^{<theta,x>}) and an expectation
// node set. The CGF domain is all of R^d for every supported kind.
// ---------------------------------------------------------------------------

class BaseMeasure {
 public:
  enum class Kind { Gaussian, Discrete, Quadrature };

  /// Standard Gaussian N(0, I_d). Closed-form CGF; expectations run on a
  /// tensor Gauss-Hermite grid (built for d <= 3 only).
  static BaseMeasure gaussian(int dim, int nodes_per_axis = 20);

  /// Finite-support base. With recenter = true the atoms are shifted by
  /// minus their mean so that the CGF is bounded below by zero; the shift
  /// is kept as metadata.
  static BaseMeasure discrete(DiscreteMeasure mu, bool recenter = false);

  /// Uniform measure on {0, e_1, ..., e_d}, the corner measure of the unit
  /// simplex with d+1 equal masses.
  static BaseMeasure simplex(int dim);

  /// Base given directly by quadrature nodes and weights.
  static BaseMeasure quadrature(NodeSetPtr nodes);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_discrete_kind() const { return kind_ == Kind::Discrete; }

  /// Expectation nodes. Throws Validation for Gaussian kind with d > 3.
  const NodeSetPtr& nodes() const;

  /// The atoms for the Discrete kind. Throws Structure otherwise.
  const DiscreteMeasure& atoms() const;

  bool recentered() const { return shift_.has_value(); }
  const Vector& shift() const;

  Vector mean() const;

 private:
  BaseMeasure() = default;

  Kind kind_ = Kind::Gaussian;
  int dim_ = 0;
  int nodes_per_axis_ = 0;
  NodeSetPtr nodes_;
  std::optional<DiscreteMeasure> atoms_;
  std::optional<Vector> shift_;
};

/// L(theta) = log mu0(e^{<theta,x>}). ||theta||^2/2 for the Gaussian kind,
/// log-sum-exp over nodes otherwise.
double cgf_eval(const BaseMeasure& base, const Vector& theta);

/// grad L(theta), the mean of the tilted measure mu_theta.
Vector cgf_grad(const BaseMeasure& base, const Vector& theta);

/// Transport cost c(theta, psi) = L(theta - psi).
double cost_eval(const BaseMeasure& base, const Vector& theta, const Vector& psi);

/// Exponential change of measure: d mu_theta / d mu0 = e^{<theta,x> - L(theta)},
/// realized on the base's nodes. Gaussian and Quadrature kinds renormalize to
/// absorb quadrature error. Use to_discrete() to materialize atom masses.
MeasureRep tilt(const BaseMeasure& base, const Vector& theta);

/// log mu_theta(e^{<gamma,x>}), evaluated through the realized tilt (not the
/// CGF identity it must satisfy).
double tilt_logmoment(const BaseMeasure& base, const Vector& theta, const Vector& gamma);

}  // namespace cgft
