#pragma once

#include <cstdint>
#include <vector>

#include "cgft/ctransform.hpp"

namespace cgft {

// ---------------------------------------------------------------------------
// Discrete Monge-Kantorovich problem with cost c(theta, y) = L(theta - y).
// ---------------------------------------------------------------------------

struct TransportProblem {
  DiscreteMeasure source;  // P, over theta-points
  DiscreteMeasure target;  // Q, over y-points
  BaseMeasure base;

  TransportProblem(DiscreteMeasure P, DiscreteMeasure Q, BaseMeasure b);
};

/// Dense cost matrix c_ij = L(theta_i - y_j); entries evaluated in parallel.
Matrix cost_matrix(const TransportProblem& prob);

struct Coupling {
  Matrix plan;       // nonnegative, row sums = P weights, col sums = Q weights
  double objective;  // sum plan_ij * c_ij
};

struct DualPotentials {
  GridFn psi;   // on source atoms, psi(first atom) = 0
  GridFn psi0;  // on target atoms
};

struct SolveResult {
  Coupling coupling;
  DualPotentials duals;
};

/// Transportation simplex with Bland's anti-cycling rule and north-west
/// corner start. Returns an optimal basic plan together with duals that are
/// feasible and complementary-slack on the support.
SolveResult solve_exact(const TransportProblem& prob);

struct SinkhornOptions {
  std::size_t max_iter = 100000;
  double marginal_tol = 1e-9;  // L1 violation of the unmatched marginal
};

/// Log-domain Sinkhorn fixed point for the entropy-regularized problem.
/// Throws Convergence with the residual when max_iter is exhausted.
Coupling solve_entropic(const TransportProblem& prob, double epsilon,
                        const SinkhornOptions& opts = {});

// ---------------------------------------------------------------------------
// Optimality certificate: every support pair of the plan must be a
// superdifferential pair of the concave extension of the duals.
// ---------------------------------------------------------------------------

struct PairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  double mass = 0.0;
  double slack = 0.0;
  double gap = 0.0;
};

struct CertifyReport {
  bool pass = false;
  double max_slack = 0.0;
  double max_gap = 0.0;
  double tol = 1e-7;
  std::size_t pairs_checked = 0;
  std::vector<PairCheck> failures;  // pairs with slack > tol
};

/// Extends the target-side dual over the source atoms by a backward
/// transform and checks every pair carrying mass > 1e-12. Failures are
/// reported, never thrown.
CertifyReport certify(const Coupling& coupling, const DualPotentials& duals,
                      const TransportProblem& prob, double tol = 1e-7);

struct MongeResult {
  bool is_map = false;
  std::vector<std::size_t> map;         // i -> j when is_map
  std::vector<std::size_t> split_rows;  // rows with more than one positive entry
};

/// Reads a deterministic map off the plan when every source row has exactly
/// one entry above 1e-9; otherwise refuses and lists the split rows.
MongeResult monge_extract(const Coupling& coupling, double tol = 1e-9);

}  // namespace cgft
