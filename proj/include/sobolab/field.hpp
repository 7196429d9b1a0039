#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "sobolab/grid.hpp"

namespace sobolab {

// Samples of a map Sigma -> R^d on a grid.  Storage is node-major:
// values[node * dim + c].  Fields are plain values; all operations on them
// are pure, so they can be copied and sent across threads freely.
class DiscreteField {
 public:
  DiscreteField() = default;
  DiscreteField(GridSpec grid, int target_dim, double fill = 0.0)
      : grid_(grid), dim_(target_dim),
        values_(static_cast<std::size_t>(grid.nodes()) * target_dim, fill) {
    if (target_dim < 1) throw config_error("DiscreteField: target_dim must be >= 1");
  }

  const GridSpec& grid() const { return grid_; }
  int target_dim() const { return dim_; }
  int nodes() const { return grid_.nodes(); }
  bool scalar() const { return dim_ == 1; }

  double& at(int node, int c) { return values_[static_cast<std::size_t>(node) * dim_ + c]; }
  double at(int node, int c) const { return values_[static_cast<std::size_t>(node) * dim_ + c]; }
  double& at(int ix, int iy, int c) { return at(grid_.index(ix, iy), c); }
  double at(int ix, int iy, int c) const { return at(grid_.index(ix, iy), c); }

  std::span<double> raw() { return values_; }
  std::span<const double> raw() const { return values_; }

  DiscreteField& operator+=(const DiscreteField& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  DiscreteField& operator-=(const DiscreteField& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  DiscreteField& operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
  }
  friend DiscreteField operator+(DiscreteField a, const DiscreteField& b) { return a += b; }
  friend DiscreteField operator-(DiscreteField a, const DiscreteField& b) { return a -= b; }
  friend DiscreteField operator*(double s, DiscreteField a) { return a *= s; }

  // this += s * o
  void axpy(double s, const DiscreteField& o) {
    require_same_shape(o, "axpy");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * o.values_[i];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (double v : values_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  void require_finite(const std::string& who) const {
    if (!all_finite()) throw invariant_violation(who + ": non-finite field values");
  }

  void require_same_shape(const DiscreteField& o, const std::string& who) const {
    if (!(grid_ == o.grid_) || dim_ != o.dim_)
      throw domain_error(who + ": grid or target-dim mismatch");
  }

 private:
  GridSpec grid_{};
  int dim_{1};
  std::vector<double> values_;
};

// Pointwise Euclidean inner product <f, g>: a scalar field.
inline DiscreteField pointwise_inner(const DiscreteField& f, const DiscreteField& g) {
  f.require_same_shape(g, "pointwise_inner");
  DiscreteField out(f.grid(), 1);
  const int d = f.target_dim();
  for (int n = 0; n < f.nodes(); ++n) {
    double s = 0.0;
    for (int c = 0; c < d; ++c) s += f.at(n, c) * g.at(n, c);
    out.at(n, 0) = s;
  }
  return out;
}

inline DiscreteField pointwise_product(const DiscreteField& f, const DiscreteField& g) {
  if (!g.scalar()) throw domain_error("pointwise_product: second factor must be scalar");
  if (!(f.grid() == g.grid())) throw domain_error("pointwise_product: grid mismatch");
  DiscreteField out = f;
  for (int n = 0; n < f.nodes(); ++n)
    for (int c = 0; c < f.target_dim(); ++c) out.at(n, c) *= g.at(n, 0);
  return out;
}

// Node sum x cell measure (the grid quadrature).  Scalar fields only.
inline double integrate(const DiscreteField& f) {
  if (!f.scalar()) throw domain_error("integrate: field must be scalar-valued");
  double s = 0.0;
  for (int n = 0; n < f.nodes(); ++n) s += f.at(n, 0);
  return s * f.grid().cell_measure();
}

// Discrete L2 inner product int <f, g> dmu.
inline double inner_l2(const DiscreteField& f, const DiscreteField& g) {
  return integrate(pointwise_inner(f, g));
}

}  // namespace sobolab
