#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "alat/element.hpp"

namespace alat {

/// Sentinel for the phi = infinity branch of the 2x2 projection family.
inline constexpr double kPhiInf = std::numeric_limits<double>::infinity();

struct SymmetryFactorization {
  Element input;
  std::vector<Element> factors;  // projections p_k; the symmetries are 1 - 2p_k
  double residual = 0.0;         // || prod(1 - 2p_k) - input ||

  Element product_of_symmetries() const;
};

/// 1 - 2p.
Element symmetry_of(const Element& p, const ToleranceConfig& tol = {});
/// (1 - s)/2, inverse of symmetry_of.
Element projection_of_symmetry(const Element& s, const ToleranceConfig& tol = {});

/// Membership in the group generated by symmetries: unitary with
/// det^2 = 1 in every block.
bool sym_member(const Element& u, const ToleranceConfig& tol = {});

/// p_phi = (1+phi^2)^-1 [[1,phi],[phi,phi^2]] in each 2x2 block;
/// p_inf = [[0,0],[0,1]].
Element p_phi(const AlgebraShape& shape, double phi);
/// v_phi = (1 - 2 p_phi)(1 - 2 p_0), a rotation with trace
/// 2 (1-phi^2)/(1+phi^2).
Element v_phi(const AlgebraShape& shape, double phi);

/// Projections p, q in M_2 with (1-2p)(1-2q) = diag(zeta, conj(zeta)).
std::pair<Element, Element> factor_two_symmetries_2x2(Complex zeta, const ToleranceConfig& tol = {});

/// Factors a det-1 unitary into at most 2(n-1) symmetries per block of
/// size n, via eigenvalue pairing into adjacent (zeta, conj zeta) factors.
SymmetryFactorization factor_det1(const Element& u, const ToleranceConfig& tol = {});

/// Factors a unitary with blockwise det = +-1 into at most 2(n-1)+1
/// symmetries; a det -1 block spends one factor on r = e_11.
SymmetryFactorization factor_det_pm1(const Element& u, const ToleranceConfig& tol = {});

/// u p u*, the conjugation action of unitaries on projections.
Element conjugate(const Element& u, const Element& p, const ToleranceConfig& tol = {});

/// Product of symmetries over a commutative shape; equals the symmetry of
/// the componentwise symmetric difference of p and q.
Element boolean_symmetry_product(const Element& p, const Element& q,
                                 const ToleranceConfig& tol = {});

}  // namespace alat
