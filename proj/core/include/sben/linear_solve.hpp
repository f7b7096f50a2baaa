#pragma once

#include <cmath>

#include "sben/fields.hpp"

namespace sben {

struct CgResult {
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// Matrix-free conjugate gradient for a symmetric positive semi-definite
/// operator whose kernel is removed by `project`. The right-hand side must
/// already lie in the range; the iterate stays in the projected subspace.
/// Stops when ||r|| <= tol * ||b||.
template <class F, class Apply, class Project>
CgResult conjugate_gradient(Apply&& apply, const F& rhs, F& x, double tol, int max_iter, Project&& project) {
  CgResult result;
  const double b_norm = norm_l2(rhs);
  if (b_norm == 0.0) {
    x = F(rhs.grid());
    result.converged = true;
    return result;
  }
  project(x);
  F r = rhs;
  r -= apply(x);
  project(r);
  F p = r;
  double rr = inner(r, r);
  if (std::sqrt(rr) <= tol * b_norm) {
    result.relative_residual = std::sqrt(rr) / b_norm;
    result.converged = true;
    return result;
  }
  for (int it = 1; it <= max_iter; ++it) {
    const F ap = apply(p);
    const double pap = inner(p, ap);
    if (!(pap > 0.0)) {
      result.iterations = it;
      result.relative_residual = std::sqrt(rr) / b_norm;
      return result;
    }
    const double alpha = rr / pap;
    x.axpy(alpha, p);
    r.axpy(-alpha, ap);
    project(r);
    const double rr_new = inner(r, r);
    result.iterations = it;
    result.relative_residual = std::sqrt(rr_new) / b_norm;
    if (result.relative_residual <= tol) {
      result.converged = true;
      break;
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    p *= beta;
    p += r;
  }
  project(x);
  return result;
}

}  // namespace sben
