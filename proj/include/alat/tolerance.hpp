#pragma once

#include "alat/errors.hpp"

namespace alat {

/// Numeric tolerance policy shared by every floating-point module.
///
/// rank_tol <= eq_tol <= verify_tol must hold: rank decisions are the
/// sharpest, structural equality sits in the middle, and sampled
/// verification is the most forgiving.
struct ToleranceConfig {
  double eq_tol = 1e-9;      // structural equality (projection, unitary, ...)
  double rank_tol = 1e-10;   // singular-value cutoff for rank decisions
  double verify_tol = 1e-8;  // sampled acceptance of residuals

  void validate() const {
    if (eq_tol < 0 || rank_tol < 0 || verify_tol < 0)
      throw DomainError("tolerances must be nonnegative");
    if (!(rank_tol <= eq_tol && eq_tol <= verify_tol))
      throw DomainError("tolerance ordering violated: need rank_tol <= eq_tol <= verify_tol");
  }
};

}  // namespace alat
