#include "cgft/measures.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cgft {

namespace {

constexpr double kDistinctTol = 1e-12;
constexpr double kWeightSumTolDiscrete = 1e-12;
constexpr double kWeightSumTolNodes = 1e-10;
constexpr double kMassSumTol = 1e-10;

void check_dims(const std::vector<Vector>& pts, const char* what) {
  if (pts.empty()) throw Error(ErrorKind::Validation, std::string(what) + ": empty point list");
  const auto d = pts.front().size();
  if (d < 1) throw Error(ErrorKind::Validation, std::string(what) + ": dimension must be >= 1");
  for (const auto& p : pts) {
    if (p.size() != d)
      throw Error(ErrorKind::Validation, std::string(what) + ": inconsistent point dimensions");
    if (!p.allFinite())
      throw Error(ErrorKind::Validation, std::string(what) + ": non-finite coordinate");
  }
}

void check_distinct(const std::vector<Vector>& pts, const char* what) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (points_equal(pts[i], pts[j])) {
        std::ostringstream os;
        os << what << ": points " << i << " and " << j << " coincide within 1e-12";
        throw Error(ErrorKind::Validation, os.str());
      }
}

}  // namespace

bool points_equal(const Vector& a, const Vector& b, double tol) {
  if (a.size() != b.size()) return false;
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

// ---------------------------------------------------------------------------
// NodeSet
// ---------------------------------------------------------------------------

NodeSet::NodeSet(std::vector<Vector> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  check_dims(nodes_, "NodeSet");
  dim_ = static_cast<int>(nodes_.front().size());
  if (weights_.size() != nodes_.size())
    throw Error(ErrorKind::Validation, "NodeSet: nodes/weights length mismatch");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw Error(ErrorKind::Validation, "NodeSet: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolNodes) {
    std::ostringstream os;
    os << "NodeSet: weights sum to " << total << ", expected 1 within 1e-10";
    throw Error(ErrorKind::Validation, os.str());
  }
  check_distinct(nodes_, "NodeSet");
}

std::size_t NodeSet::index_of(const Vector& p) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (points_equal(nodes_[i], p)) return i;
  throw Error(ErrorKind::Lookup, "NodeSet: point not among nodes");
}

bool NodeSet::contains(const Vector& p) const {
  for (const auto& n : nodes_)
    if (points_equal(n, p)) return true;
  return false;
}

NodeSetPtr make_node_set(std::vector<Vector> nodes, std::vector<double> weights) {
  return std::make_shared<const NodeSet>(std::move(nodes), std::move(weights));
}

bool same_node_set(const NodeSetPtr& a, const NodeSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->size() != b->size() || a->dim() != b->dim()) return false;
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (a->weight(i) != b->weight(i)) return false;
    if (a->node(i) != b->node(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gauss-Hermite nodes via the Golub-Welsch eigendecomposition of the Jacobi
// matrix for the Hermite polynomials orthogonal under N(0,1).
// ---------------------------------------------------------------------------

namespace {

void gauss_hermite_1d(int n, std::vector<double>& x, std::vector<double>& w) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(static_cast<double>(k));
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    x[i] = es.eigenvalues()[i];
    const double v = es.eigenvectors()(0, i);
    w[i] = v * v;
  }
  // Enforce the exact symmetry of the rule; odd rules get an exact zero node.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double xm = 0.5 * (x[j] - x[i]);
    x[i] = -xm;
    x[j] = xm;
    const double wm = 0.5 * (w[i] + w[j]);
    w[i] = wm;
    w[j] = wm;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
}

}  // namespace

NodeSetPtr gauss_hermite_nodes(int dim, int per_axis) {
  if (dim < 1 || dim > 3)
    throw Error(ErrorKind::Validation, "gauss_hermite_nodes: tensor grids support 1 <= d <= 3");
  if (per_axis < 2)
    throw Error(ErrorKind::Validation, "gauss_hermite_nodes: need at least 2 nodes per axis");
  std::vector<double> x, w;
  gauss_hermite_1d(per_axis, x, w);

  const std::size_t total = [&] {
    std::size_t t = 1;
    for (int k = 0; k < dim; ++k) t *= static_cast<std::size_t>(per_axis);
    return t;
  }();
  std::vector<Vector> nodes;
  std::vector<double> weights;
  nodes.reserve(total);
  weights.reserve(total);
  std::vector<int> idx(dim, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Vector p(dim);
    double weight = 1.0;
    for (int k = 0; k < dim; ++k) {
      p[k] = x[idx[k]];
      weight *= w[idx[k]];
    }
    nodes.push_back(std::move(p));
    weights.push_back(weight);
    for (int k = dim - 1; k >= 0; --k) {
      if (++idx[k] < per_axis) break;
      idx[k] = 0;
    }
  }
  double sum = 0.0;
  for (double v : weights) sum += v;
  for (double& v : weights) v /= sum;
  return make_node_set(std::move(nodes), std::move(weights));
}

// ---------------------------------------------------------------------------
// DiscreteMeasure
// ---------------------------------------------------------------------------

DiscreteMeasure::DiscreteMeasure(std::vector<Vector> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  check_dims(atoms_, "DiscreteMeasure");
  dim_ = static_cast<int>(atoms_.front().size());
  if (weights_.size() != atoms_.size())
    throw Error(ErrorKind::Validation, "DiscreteMeasure: atoms/weights length mismatch");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw Error(ErrorKind::Validation, "DiscreteMeasure: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolDiscrete) {
    std::ostringstream os;
    os << "DiscreteMeasure: weights sum to " << total << ", expected 1 within 1e-12";
    throw Error(ErrorKind::Validation, os.str());
  }
  check_distinct(atoms_, "DiscreteMeasure");
}

Vector DiscreteMeasure::mean() const {
  Vector m = Vector::Zero(dim_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) m += weights_[i] * atoms_[i];
  return m;
}

DiscreteMeasure DiscreteMeasure::point_mass(const Vector& x) {
  return DiscreteMeasure({x}, {1.0});
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<Vector> atoms) {
  const std::size_t n = atoms.size();
  if (n == 0) throw Error(ErrorKind::Validation, "DiscreteMeasure::uniform: empty atom list");
  return DiscreteMeasure(std::move(atoms), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

// ---------------------------------------------------------------------------
// MeasureRep
// ---------------------------------------------------------------------------

MeasureRep::MeasureRep(NodeSetPtr base, std::vector<double> density)
    : base_(std::move(base)), density_(std::move(density)) {
  if (!base_) throw Error(ErrorKind::Validation, "MeasureRep: null node set");
  if (density_.size() != base_->size())
    throw Error(ErrorKind::Validation, "MeasureRep: density length does not match node set");
  double total = 0.0;
  for (std::size_t i = 0; i < density_.size(); ++i) {
    if (!(density_[i] >= 0.0))
      throw Error(ErrorKind::Validation, "MeasureRep: negative density value");
    total += base_->weight(i) * density_[i];
  }
  if (std::abs(total - 1.0) > kMassSumTol) {
    std::ostringstream os;
    os << "MeasureRep: total mass " << total << ", expected 1 within 1e-10";
    throw Error(ErrorKind::Validation, os.str());
  }
}

Vector MeasureRep::mean() const {
  Vector m = Vector::Zero(dim());
  for (std::size_t i = 0; i < density_.size(); ++i) m += mass(i) * base_->node(i);
  return m;
}

DiscreteMeasure to_discrete(const MeasureRep& rep) {
  std::vector<Vector> atoms;
  std::vector<double> weights;
  atoms.reserve(rep.size());
  weights.reserve(rep.size());
  double total = 0.0;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    atoms.push_back(rep.base()->node(i));
    weights.push_back(rep.mass(i));
    total += rep.mass(i);
  }
  // Absorb the 1e-10 mass slack permitted on reps; atom masses must hit 1e-12.
  for (double& w : weights) w /= total;
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

MeasureRep base_rep(NodeSetPtr base) {
  if (!base) throw Error(ErrorKind::Validation, "base_rep: null node set");
  const std::size_t n = base->size();
  return MeasureRep(std::move(base), std::vector<double>(n, 1.0));
}

// ---------------------------------------------------------------------------
// Exponential moments
// ---------------------------------------------------------------------------

namespace {

constexpr double kNegInfLocal() { return -std::numeric_limits<double>::infinity(); }

// log sum_i exp(terms_i) with max subtraction; -inf terms drop out.
double log_sum_exp(const std::vector<double>& terms) {
  double m = kNegInfLocal();
  for (double t : terms)
    if (t > m) m = t;
  if (!std::isfinite(m)) return m;  // empty or all -inf
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return m + std::log(acc);
}

double checked_exp(double log_value, const std::vector<double>& terms,
                   const std::vector<Vector>* pts) {
  if (log_value > 709.0) {
    std::size_t mi = 0;
    double m = kNegInfLocal();
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i] > m) {
        m = terms[i];
        mi = i;
      }
    std::ostringstream os;
    os << "exp_moment: log value " << log_value << " exceeds double range; dominant node " << mi;
    if (pts && mi < pts->size()) {
      os << " at (";
      const Vector& p = (*pts)[mi];
      for (int k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
      os << ")";
    }
    throw Error(ErrorKind::Magnitude, os.str());
  }
  return std::exp(log_value);
}

}  // namespace

double log_exp_moment(const DiscreteMeasure& nu, const Vector& theta) {
  if (theta.size() != nu.dim())
    throw Error(ErrorKind::Validation, "log_exp_moment: theta dimension mismatch");
  std::vector<double> terms(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i)
    terms[i] = nu.weight(i) > 0.0 ? theta.dot(nu.atom(i)) + std::log(nu.weight(i))
                                  : kNegInfLocal();
  return log_sum_exp(terms);
}

double log_exp_moment(const MeasureRep& nu, const Vector& theta) {
  if (theta.size() != nu.dim())
    throw Error(ErrorKind::Validation, "log_exp_moment: theta dimension mismatch");
  std::vector<double> terms(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i)
    terms[i] = nu.mass(i) > 0.0 ? theta.dot(nu.base()->node(i)) + std::log(nu.mass(i))
                                : kNegInfLocal();
  return log_sum_exp(terms);
}

double log_exp_moment(const NodeSet& nodes, const Vector& theta) {
  if (theta.size() != nodes.dim())
    throw Error(ErrorKind::Validation, "log_exp_moment: theta dimension mismatch");
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    terms[i] = theta.dot(nodes.node(i)) + std::log(nodes.weight(i));
  return log_sum_exp(terms);
}

double exp_moment(const DiscreteMeasure& nu, const Vector& theta) {
  std::vector<double> terms(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i)
    terms[i] = nu.weight(i) > 0.0 ? theta.dot(nu.atom(i)) + std::log(nu.weight(i))
                                  : kNegInfLocal();
  const double lv = log_sum_exp(terms);
  return checked_exp(lv, terms, &nu.atoms());
}

double exp_moment(const MeasureRep& nu, const Vector& theta) {
  std::vector<double> terms(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i)
    terms[i] = nu.mass(i) > 0.0 ? theta.dot(nu.base()->node(i)) + std::log(nu.mass(i))
                                : kNegInfLocal();
  const double lv = log_sum_exp(terms);
  return checked_exp(lv, terms, &nu.base()->nodes());
}

namespace {

template <class MassOf, class AtomOf>
double seminorm_impl(int axis, int j, int dim, std::size_t n, const MassOf& mass_of,
                     const AtomOf& atom_of) {
  if (axis < 0 || axis >= dim)
    throw Error(ErrorKind::Validation, "seminorm: axis out of range");
  if (j < 0) throw Error(ErrorKind::Validation, "seminorm: order must be nonnegative");
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mass = mass_of(i);
    terms[i] = mass > 0.0 ? static_cast<double>(j) * std::abs(atom_of(i)[axis]) + std::log(mass)
                          : kNegInfLocal();
  }
  const double lv = log_sum_exp(terms);
  return checked_exp(lv, terms, nullptr);
}

}  // namespace

double seminorm(const DiscreteMeasure& nu, int axis, int j) {
  return seminorm_impl(
      axis, j, nu.dim(), nu.size(), [&](std::size_t i) { return nu.weight(i); },
      [&](std::size_t i) -> const Vector& { return nu.atom(i); });
}

double seminorm(const MeasureRep& nu, int axis, int j) {
  return seminorm_impl(
      axis, j, nu.dim(), nu.size(), [&](std::size_t i) { return nu.mass(i); },
      [&](std::size_t i) -> const Vector& { return nu.base()->node(i); });
}

MeasureRep mixture(const MeasureRep& mu, const MeasureRep& nu, double t) {
  if (!same_node_set(mu.base(), nu.base()))
    throw Error(ErrorKind::Structure, "mixture: measures live on different node sets");
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorKind::Validation, "mixture: t must lie in [0,1]");
  if (t == 0.0) return mu;
  if (t == 1.0) return nu;
  std::vector<double> d(mu.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = (1.0 - t) * mu.density_at(i) + t * nu.density_at(i);
  return MeasureRep(mu.base(), std::move(d));
}

double tv_distance(const MeasureRep& mu, const MeasureRep& nu) {
  if (!same_node_set(mu.base(), nu.base()))
    throw Error(ErrorKind::Structure, "tv_distance: measures live on different node sets");
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    s += mu.base()->weight(i) * std::abs(mu.density_at(i) - nu.density_at(i));
  return 0.5 * s;
}

}  // namespace cgft
