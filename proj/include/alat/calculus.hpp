#pragma once

#include <array>
#include <vector>

#include "alat/element.hpp"

namespace alat {

/// Determinant of each block. For k equal-size blocks this is the
/// determinant over the center C^k.
std::vector<Complex> block_det(const Element& a);
std::vector<Complex> block_trace(const Element& a);

/// Blockwise adjugate for shapes made of 2x2 blocks; adj(a)*a = det(a)*1
/// holds per block.
Element adjugate2(const Element& a);

/// Positive square root of a positive semidefinite self-adjoint element,
/// by Hermitian eigendecomposition. Eigenvalues in [-eq_tol, 0) are
/// clamped to zero; anything below -eq_tol is rejected as indefinite.
Element positive_sqrt(const Element& a, const ToleranceConfig& tol = {});

/// For self-adjoint b over a commutative shape, the symmetry u with
/// u_i = -1 where b_i <= 0 and +1 otherwise; satisfies b = u * sqrt(b^2).
Element sign_symmetry(const Element& b, const ToleranceConfig& tol = {});

/// Right annihilating projection: the projection onto ker(a) per block,
/// rank decided against rank_tol.
Element rann(const Element& a, const ToleranceConfig& tol = {});

/// Right supporting projection 1 - rann(a); the least projection r with
/// a * r = a.
Element rp(const Element& a, const ToleranceConfig& tol = {});

struct FourUnitaries {
  double scale;
  std::array<Element, 4> u;
  /// scale * (u1/4 + u2/4 + i*u3/4 + i*u4/4) reconstructs the input.
  Element reconstruct() const;
};

/// Writes any element as a scaled linear combination of four unitaries,
/// splitting into self-adjoint parts c and lifting each to c +- i*sqrt(1-c^2).
FourUnitaries four_unitaries(const Element& a, const ToleranceConfig& tol = {});

}  // namespace alat
