#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sobolab/spectral.hpp"

namespace sobolab {

// The Sobolev index pair (k, p) with the derived maximal smoothness degree
// m0 = floor(k - 2/p).  Construction accepts every (k >= 0, p >= 2) pair the
// norm operations work with; operations whose mathematics needs the stronger
// standing assumptions (m0 >= 1, even p) enforce them at their own boundary.
struct SobolevIndex {
  int k{0};
  double p{2.0};

  int m0() const { return static_cast<int>(std::floor(k - 2.0 / p)); }
};

inline SobolevIndex make_sobolev_index(int k, double p) {
  if (k < 0) throw index_error("SobolevIndex: k must be >= 0");
  if (!(p >= 2.0) || !std::isfinite(p)) throw domain_error("SobolevIndex: p must be >= 2");
  return SobolevIndex{k, p};
}

// Even integer p or unsupported_exponent_error.
inline int require_even_p(const SobolevIndex& idx, const std::string& who) {
  const double r = std::round(idx.p);
  if (std::abs(idx.p - r) > 0.0 || static_cast<long long>(r) % 2 != 0)
    throw unsupported_exponent_error(who + ": requires even integer p, got " +
                                     std::to_string(idx.p));
  return static_cast<int>(r);
}

// Full derivative tensors of f up to max_order.  Order i holds 2^i entry
// fields; entry s applies one axis derivative per bit of s.  Symmetric
// entries are stored with multiplicity, matching the Frobenius convention
// for |grad^i f|.
struct DerivativeTensors {
  std::vector<std::vector<DiscreteField>> orders;

  static DerivativeTensors compute(const DiscreteField& f, int max_order) {
    DerivativeTensors t;
    t.orders.resize(max_order + 1);
    t.orders[0] = {f};
    for (int i = 1; i <= max_order; ++i) {
      const auto& prev = t.orders[i - 1];
      auto& cur = t.orders[i];
      cur.reserve(prev.size() * 2);
      for (int j = 0; j < 2; ++j)
        for (const auto& e : prev) cur.push_back(derivative_axis(e, j));
    }
    return t;
  }

  // Pointwise squared Frobenius norm <T, T> of the order-i tensor.
  DiscreteField frobenius_sq(int i) const {
    const auto& entries = orders[i];
    DiscreteField out(entries[0].grid(), 1);
    for (const auto& e : entries) {
      for (int n = 0; n < e.nodes(); ++n) {
        double s = 0.0;
        for (int c = 0; c < e.target_dim(); ++c) s += e.at(n, c) * e.at(n, c);
        out.at(n, 0) += s;
      }
    }
    return out;
  }

  // All entries of the order-i tensor concatenated into one field of
  // dimension d * 2^i, so that the pointwise pairing of the flattened field
  // with itself equals <T, T>.
  DiscreteField flatten(int i) const {
    const auto& entries = orders[i];
    const int d = entries[0].target_dim();
    DiscreteField out(entries[0].grid(), d * static_cast<int>(entries.size()));
    for (std::size_t e = 0; e < entries.size(); ++e)
      for (int n = 0; n < entries[e].nodes(); ++n)
        for (int c = 0; c < d; ++c) out.at(n, static_cast<int>(e) * d + c) = entries[e].at(n, c);
    return out;
  }
};

namespace detail {

inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace detail

// || f ||_{k - drop, p} with the derivative sum inside the p-th root:
// ( sum_{i=0}^{k-drop} int |grad^i f|^p dmu )^{1/p}.
inline double sobolev_norm(const DiscreteField& f, const SobolevIndex& idx, int drop = 0) {
  if (drop < 0 || drop > idx.k) throw index_error("sobolev_norm: need 0 <= drop <= k");
  const int kk = idx.k - drop;
  const auto tensors = DerivativeTensors::compute(f, kk);
  double sum = 0.0;
  for (int i = 0; i <= kk; ++i) {
    const DiscreteField w = tensors.frobenius_sq(i);
    double term = 0.0;
    for (int n = 0; n < w.nodes(); ++n) term += std::pow(w.at(n, 0), idx.p / 2.0);
    sum += term * f.grid().cell_measure();
  }
  return std::pow(sum, 1.0 / idx.p);
}

// Pointwise product of consecutive inner products
// <f1, f2> <f3, f4> ... <f_{p-1}, f_p>; requires an even argument count.
inline DiscreteField multilinear_product(const std::vector<DiscreteField>& fs) {
  if (fs.size() < 2 || fs.size() % 2 != 0)
    throw domain_error("multilinear_product: needs an even number (>= 2) of fields");
  for (const auto& f : fs) fs[0].require_same_shape(f, "multilinear_product");
  DiscreteField out(fs[0].grid(), 1, 1.0);
  for (std::size_t j = 0; j + 1 < fs.size(); j += 2) {
    const DiscreteField ip = pointwise_inner(fs[j], fs[j + 1]);
    for (int n = 0; n < out.nodes(); ++n) out.at(n, 0) *= ip.at(n, 0);
  }
  return out;
}

// N_k(f) = ||f||_{k,p}^p = sum_i ||grad^i f||_p^p, assembled through the
// integrate(multilinear(diagonal)) factorization term by term.
inline double norm_power(const DiscreteField& f, const SobolevIndex& idx) {
  const int p = require_even_p(idx, "norm_power");
  const auto tensors = DerivativeTensors::compute(f, idx.k);
  double sum = 0.0;
  for (int i = 0; i <= idx.k; ++i) {
    const DiscreteField flat = tensors.flatten(i);
    sum += integrate(multilinear_product(std::vector<DiscreteField>(p, flat)));
  }
  return sum;
}

// L2-Riesz representative g of dN_k(f): dN_k(f)[h] = <g, h>_{L2}.  Each term
// p |grad^i f|^{p-2} grad^i f is brought back through i adjoint derivatives,
// and the spectral adjoint of d/dx_j is exactly -d/dx_j.
inline DiscreteField norm_power_gradient(const DiscreteField& f, const SobolevIndex& idx) {
  const int p = require_even_p(idx, "norm_power_gradient");
  const auto tensors = DerivativeTensors::compute(f, idx.k);
  DiscreteField g(f.grid(), f.target_dim());
  for (int i = 0; i <= idx.k; ++i) {
    const DiscreteField w = tensors.frobenius_sq(i);
    std::vector<double> weight(w.nodes());
    for (int n = 0; n < w.nodes(); ++n)
      weight[n] = static_cast<double>(p) * detail::ipow(w.at(n, 0), (p - 2) / 2);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t s = 0; s < tensors.orders[i].size(); ++s) {
      DiscreteField term = tensors.orders[i][s];
      for (int n = 0; n < term.nodes(); ++n)
        for (int c = 0; c < term.target_dim(); ++c) term.at(n, c) *= weight[n];
      for (int b = 0; b < i; ++b) term = derivative_axis(term, (s >> b) & 1);
      g.axpy(sign, term);
    }
  }
  g.require_finite("norm_power_gradient");
  return g;
}

}  // namespace sobolab
