#pragma once

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "cgft/error.hpp"

namespace cgft {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Max-norm point equality at the shared distinctness tolerance (1e-12).
bool points_equal(const Vector& a, const Vector& b, double tol = 1e-12);

// ---------------------------------------------------------------------------
// NodeSet: the finite point set carrying all expectations against a base
// measure. For a discrete base the nodes are the atoms themselves; for a
// continuous base they are quadrature nodes.
// ---------------------------------------------------------------------------

class NodeSet {
 public:
  NodeSet(std::vector<Vector> nodes, std::vector<double> weights);

  int dim() const { return dim_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Vector>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const Vector& node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Index of the node equal to p (1e-12 max-norm), or throws Lookup.
  std::size_t index_of(const Vector& p) const;
  bool contains(const Vector& p) const;

 private:
  std::vector<Vector> nodes_;
  std::vector<double> weights_;
  int dim_;
};

using NodeSetPtr = std::shared_ptr<const NodeSet>;

NodeSetPtr make_node_set(std::vector<Vector> nodes, std::vector<double> weights);

/// Two reps live on the same node set if they share the object or the
/// contents agree exactly.
bool same_node_set(const NodeSetPtr& a, const NodeSetPtr& b);

/// Tensor-product Gauss-Hermite rule normalized against the standard
/// Gaussian density. Nodes are symmetrized, weights sum to one exactly.
/// Tensor grids are limited to dim <= 3.
NodeSetPtr gauss_hermite_nodes(int dim, int per_axis);

// ---------------------------------------------------------------------------
// DiscreteMeasure: finitely supported probability measure.
// ---------------------------------------------------------------------------

class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Vector> atoms, std::vector<double> weights);

  int dim() const { return dim_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Vector>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  const Vector& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  Vector mean() const;

  static DiscreteMeasure point_mass(const Vector& x);
  static DiscreteMeasure uniform(std::vector<Vector> atoms);

 private:
  std::vector<Vector> atoms_;
  std::vector<double> weights_;
  int dim_;
};

// ---------------------------------------------------------------------------
// MeasureRep: probability measure given by its density against a node set.
// ---------------------------------------------------------------------------

class MeasureRep {
 public:
  MeasureRep(NodeSetPtr base, std::vector<double> density);

  const NodeSetPtr& base() const { return base_; }
  const std::vector<double>& density() const { return density_; }
  double density_at(std::size_t i) const { return density_[i]; }
  std::size_t size() const { return density_.size(); }
  int dim() const { return base_->dim(); }

  /// Mass of node i, node_weight * density.
  double mass(std::size_t i) const { return base_->weight(i) * density_[i]; }

  Vector mean() const;

 private:
  NodeSetPtr base_;
  std::vector<double> density_;
};

/// Materialize the rep as a plain measure on its nodes (masses = w * density).
DiscreteMeasure to_discrete(const MeasureRep& rep);

/// The node set viewed as a measure on itself (density == 1).
MeasureRep base_rep(NodeSetPtr base);

// ---------------------------------------------------------------------------
// Exponential moments. All sums accumulate in log space.
// ---------------------------------------------------------------------------

/// log nu(e^{<theta,x>}).
double log_exp_moment(const DiscreteMeasure& nu, const Vector& theta);
double log_exp_moment(const MeasureRep& nu, const Vector& theta);
/// Same against the node weights themselves.
double log_exp_moment(const NodeSet& nodes, const Vector& theta);

/// nu(e^{<theta,x>}); throws Magnitude with the offending node when the
/// result leaves double range.
double exp_moment(const DiscreteMeasure& nu, const Vector& theta);
double exp_moment(const MeasureRep& nu, const Vector& theta);

/// |nu|(e^{j |x_axis|}) with axis 0-based; equals nu(...) for probabilities.
double seminorm(const DiscreteMeasure& nu, int axis, int j);
double seminorm(const MeasureRep& nu, int axis, int j);

/// Pointwise convex combination (1-t) mu + t nu on a shared node set.
MeasureRep mixture(const MeasureRep& mu, const MeasureRep& nu, double t);

/// Total variation distance on a shared node set.
double tv_distance(const MeasureRep& mu, const MeasureRep& nu);

}  // namespace cgft
