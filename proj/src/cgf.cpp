#include "cgft/cgf.hpp"

#include <cmath>
#include <utility>

namespace cgft {

// ---------------------------------------------------------------------------
// BaseMeasure
// ---------------------------------------------------------------------------

BaseMeasure BaseMeasure::gaussian(int dim, int nodes_per_axis) {
  if (dim < 1) throw Error(ErrorKind::Validation, "BaseMeasure::gaussian: dim must be >= 1");
  BaseMeasure b;
  b.kind_ = Kind::Gaussian;
  b.dim_ = dim;
  b.nodes_per_axis_ = nodes_per_axis;
  if (dim <= 3) b.nodes_ = gauss_hermite_nodes(dim, nodes_per_axis);
  return b;
}

BaseMeasure BaseMeasure::discrete(DiscreteMeasure mu, bool recenter) {
  BaseMeasure b;
  b.kind_ = Kind::Discrete;
  b.dim_ = mu.dim();
  if (recenter) {
    const Vector m = mu.mean();
    std::vector<Vector> shifted;
    shifted.reserve(mu.size());
    for (const auto& a : mu.atoms()) shifted.push_back(a - m);
    mu = DiscreteMeasure(std::move(shifted), mu.weights());
    b.shift_ = m;
  }
  std::vector<double> node_weights;
  node_weights.reserve(mu.size());
  for (double w : mu.weights()) {
    if (!(w > 0.0))
      throw Error(ErrorKind::Validation, "BaseMeasure::discrete: atoms need positive mass");
    node_weights.push_back(w);
  }
  b.nodes_ = make_node_set(mu.atoms(), std::move(node_weights));
  b.atoms_ = std::move(mu);
  return b;
}

BaseMeasure BaseMeasure::simplex(int dim) {
  if (dim < 1) throw Error(ErrorKind::Validation, "BaseMeasure::simplex: dim must be >= 1");
  std::vector<Vector> atoms;
  atoms.reserve(static_cast<std::size_t>(dim) + 1);
  atoms.push_back(Vector::Zero(dim));
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1.0;
    atoms.push_back(std::move(e));
  }
  return discrete(DiscreteMeasure::uniform(std::move(atoms)));
}

BaseMeasure BaseMeasure::quadrature(NodeSetPtr nodes) {
  if (!nodes) throw Error(ErrorKind::Validation, "BaseMeasure::quadrature: null node set");
  BaseMeasure b;
  b.kind_ = Kind::Quadrature;
  b.dim_ = nodes->dim();
  b.nodes_ = std::move(nodes);
  return b;
}

const NodeSetPtr& BaseMeasure::nodes() const {
  if (!nodes_)
    throw Error(ErrorKind::Validation,
                "BaseMeasure: tensor quadrature nodes are only built for d <= 3");
  return nodes_;
}

const DiscreteMeasure& BaseMeasure::atoms() const {
  if (!atoms_) throw Error(ErrorKind::Structure, "BaseMeasure: not a discrete-kind base");
  return *atoms_;
}

const Vector& BaseMeasure::shift() const {
  if (!shift_) throw Error(ErrorKind::Structure, "BaseMeasure: base was not recentered");
  return *shift_;
}

Vector BaseMeasure::mean() const {
  if (kind_ == Kind::Gaussian) return Vector::Zero(dim_);
  return base_rep(nodes()).mean();
}

// ---------------------------------------------------------------------------
// CGF and tilting
// ---------------------------------------------------------------------------

double cgf_eval(const BaseMeasure& base, const Vector& theta) {
  if (theta.size() != base.dim())
    throw Error(ErrorKind::Validation, "cgf_eval: theta dimension mismatch");
  if (base.kind() == BaseMeasure::Kind::Gaussian) return 0.5 * theta.squaredNorm();
  return log_exp_moment(*base.nodes(), theta);
}

Vector cgf_grad(const BaseMeasure& base, const Vector& theta) {
  if (theta.size() != base.dim())
    throw Error(ErrorKind::Validation, "cgf_grad: theta dimension mismatch");
  if (base.kind() == BaseMeasure::Kind::Gaussian) return theta;
  return tilt(base, theta).mean();
}

double cost_eval(const BaseMeasure& base, const Vector& theta, const Vector& psi) {
  if (theta.size() != psi.size())
    throw Error(ErrorKind::Validation, "cost_eval: endpoint dimension mismatch");
  return cgf_eval(base, theta - psi);
}

MeasureRep tilt(const BaseMeasure& base, const Vector& theta) {
  if (theta.size() != base.dim())
    throw Error(ErrorKind::Validation, "tilt: theta dimension mismatch");
  const NodeSetPtr& nodes = base.nodes();
  const double lambda = cgf_eval(base, theta);
  std::vector<double> density(nodes->size());
  for (std::size_t i = 0; i < density.size(); ++i)
    density[i] = std::exp(theta.dot(nodes->node(i)) - lambda);
  if (base.kind() != BaseMeasure::Kind::Discrete) {
    // Quadrature-backed kinds renormalize so the rep's mass is exact.
    double total = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i) total += nodes->weight(i) * density[i];
    for (double& d : density) d /= total;
  }
  return MeasureRep(nodes, std::move(density));
}

double tilt_logmoment(const BaseMeasure& base, const Vector& theta, const Vector& gamma) {
  if (gamma.size() != base.dim())
    throw Error(ErrorKind::Validation, "tilt_logmoment: gamma dimension mismatch");
  return log_exp_moment(tilt(base, theta), gamma);
}

}  // namespace cgft
