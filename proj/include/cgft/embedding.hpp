#pragma once

#include <cstdint>

#include "cgft/ctransform.hpp"

namespace cgft {

// ---------------------------------------------------------------------------
// Exponentially concave functions on the measures absolutely continuous
// with respect to the base: phi(mu) = min over the generator grid of
// log mu(e^{-<theta,x>}) - g(theta). With g the conjugate of a concave
// potential psi, phi(mu_alpha) recovers psi(alpha) - L(alpha).
// ---------------------------------------------------------------------------

class ExpConcaveFn {
 public:
  enum class Mode { FromGenerator, FromConjugate };

  ExpConcaveFn(BaseMeasure base, GridFn generator, Mode mode);

  const BaseMeasure& base() const { return base_; }
  const GridFn& generator() const { return generator_; }
  Mode mode() const { return mode_; }

 private:
  BaseMeasure base_;
  GridFn generator_;
  Mode mode_;
};

/// Builds phi from the forward transform of a grid-concave psi, taking
/// psi's grid as the generator grid.
ExpConcaveFn expconcave_from_potential(const BaseMeasure& base, const GridFn& psi);

struct PhiValue {
  double value = 0.0;
  std::size_t argmin = 0;
  bool argmin_on_boundary = false;
};

/// min over grid theta of log mu(e^{-<theta,x>}) - g(theta). The measure must
/// live on the base's nodes (Support error otherwise).
PhiValue phi_eval_detail(const ExpConcaveFn& f, const MeasureRep& mu);
double phi_eval(const ExpConcaveFn& f, const MeasureRep& mu);
double phi_eval(const ExpConcaveFn& f, const DiscreteMeasure& mu);

/// psi(alpha) = phi(mu_alpha) + L(alpha) on the given points. Grid-concave
/// whenever phi comes from a generator of the conjugate form.
GridFn induced_potential(const ExpConcaveFn& f, const std::vector<Vector>& alphas);

/// |phi(mu_alpha) - psi(alpha) + L(alpha)| for phi built from psi's forward
/// transform. alpha must lie on psi's grid and psi must be grid-concave
/// (Precondition error citing the concavity residual otherwise).
double embedding_residual(const GridFn& psi, const BaseMeasure& base, const Vector& alpha);

// ---------------------------------------------------------------------------
// Supergradient densities h(x) = e^{-<theta,x> - L(alpha-theta) + L(alpha)}
// for superdifferential pairs (alpha, theta) of psi. The tilted base at
// alpha-theta represents the supergradient as a probability measure.
// ---------------------------------------------------------------------------

struct SupergradientDensity {
  Vector alpha;
  Vector theta;
  NodeSetPtr nodes;
  std::vector<double> values;   // h at each node, all positive
  double normalization = 1.0;   // mu_alpha(h), 1 up to quadrature error
};

/// Requires superdiff_check(psi, alpha, theta) to accept at tol; throws
/// Precondition with the slack otherwise.
SupergradientDensity supergradient(const BaseMeasure& base, const GridFn& psi,
                                   const Vector& alpha, const Vector& theta,
                                   double tol = 1e-8);

/// All theta on psi0's grid with duality gap at alpha below tol.
std::vector<Vector> find_superdiff_pairs(const GridFn& psi, const GridFn& psi0,
                                         const BaseMeasure& base, const Vector& alpha,
                                         double tol = 1e-8);

/// The measure with density h against the tilted base at alpha; equals the
/// tilt at alpha - theta.
MeasureRep portfolio_map(const BaseMeasure& base, const SupergradientDensity& sg);

/// nu(h) >= 0; equals 1 at nu = mu_alpha by the chosen normalization.
double pairing(const SupergradientDensity& sg, const MeasureRep& nu);

/// phi(mu_alpha) + pairing(sg, nu) - 1 - phi(nu); nonnegative when sg is a
/// supergradient of phi at mu_alpha.
double supergrad_inequality(const ExpConcaveFn& f, const SupergradientDensity& sg,
                            const MeasureRep& nu);

struct GateauxReport {
  std::vector<double> steps;
  std::vector<double> slopes;      // difference quotients along (1-t) mu_alpha + t nu
  double extrapolated = 0.0;       // polynomial extrapolation of the slopes to t = 0
  double analytic = 0.0;           // pairing(sg, nu) - 1
  double error = 0.0;              // |extrapolated - analytic|
};

/// One-sided difference quotients of the single-generator value at theta
/// along the mixture path toward nu; t values must lie in (0, 1].
GateauxReport gateaux_fd(const ExpConcaveFn& f, const SupergradientDensity& sg,
                         const MeasureRep& nu, const std::vector<double>& steps);

/// Midpoint concavity of exp(phi) on random density pairs; returns the worst
/// (most negative) violation of
///   exp(phi(mid)) - (exp(phi(mu)) + exp(phi(nu)))/2 >= 0.
double exp_concavity_check(const ExpConcaveFn& f, int trials, std::uint64_t seed);

}  // namespace cgft
