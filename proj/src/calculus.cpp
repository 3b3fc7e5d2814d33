#include "alat/calculus.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace alat {

std::vector<Complex> block_det(const Element& a) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(a.block_count()));
  for (int b = 0; b < a.block_count(); ++b) out.push_back(a.block(b).determinant());
  return out;
}

std::vector<Complex> block_trace(const Element& a) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(a.block_count()));
  for (int b = 0; b < a.block_count(); ++b) out.push_back(a.block(b).trace());
  return out;
}

Element adjugate2(const Element& a) {
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b) {
    const CMat& m = a.block(b);
    if (m.rows() != 2)
      throw StructuralError("adjugate2: every block must be 2x2, block " + std::to_string(b) +
                            " has size " + std::to_string(m.rows()));
    CMat adj(2, 2);
    adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    blocks.push_back(std::move(adj));
  }
  return Element(a.shape(), std::move(blocks));
}

Element positive_sqrt(const Element& a, const ToleranceConfig& tol) {
  if (!is_selfadjoint(a, tol)) throw DomainError("positive_sqrt: element is not self-adjoint");
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a.block(b));
    if (es.info() != Eigen::Success) throw NumericError("positive_sqrt: eigendecomposition failed");
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < -tol.eq_tol)
        throw DomainError("positive_sqrt: eigenvalue " + std::to_string(ev(i)) +
                          " below -eq_tol, element is not positive semidefinite");
      if (ev(i) < 0.0) ev(i) = 0.0;
      ev(i) = std::sqrt(ev(i));
    }
    CMat r = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    blocks.push_back(0.5 * (r + r.adjoint().eval()));
  }
  return Element(a.shape(), std::move(blocks));
}

Element sign_symmetry(const Element& b, const ToleranceConfig& tol) {
  if (!b.shape().commutative())
    throw StructuralError("sign_symmetry: shape must be commutative (all blocks 1x1)");
  if (!is_selfadjoint(b, tol)) throw DomainError("sign_symmetry: element is not self-adjoint");
  std::vector<CMat> blocks;
  for (int k = 0; k < b.block_count(); ++k) {
    CMat u(1, 1);
    u(0, 0) = (b.block(k)(0, 0).real() <= 0.0) ? -1.0 : 1.0;
    blocks.push_back(std::move(u));
  }
  return Element(b.shape(), std::move(blocks));
}

Element rann(const Element& a, const ToleranceConfig& tol) {
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b) {
    const CMat& m = a.block(b);
    const int n = static_cast<int>(m.rows());
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cutoff = tol.rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    // Kernel = span of the trailing right singular vectors.
    const CMat kernel = svd.matrixV().rightCols(n - rank);
    CMat proj = kernel * kernel.adjoint();
    blocks.push_back(0.5 * (proj + proj.adjoint().eval()));
  }
  return Element(a.shape(), std::move(blocks));
}

Element rp(const Element& a, const ToleranceConfig& tol) {
  return Element::identity(a.shape()) - rann(a, tol);
}

Element FourUnitaries::reconstruct() const {
  const Complex quarter(0.25, 0.0);
  const Complex iquarter(0.0, 0.25);
  return scale * (quarter * u[0] + quarter * u[1] + iquarter * u[2] + iquarter * u[3]);
}

FourUnitaries four_unitaries(const Element& a, const ToleranceConfig& tol) {
  // a = a1 + i a2 with both parts self-adjoint.
  const Element a1 = hermitize(a);
  const Element a2 = hermitize(scale(Complex(0.0, -0.5), a - adjoint(a)));
  const double m = std::max(op_norm(a1), op_norm(a2));
  const double s = m > 0.0 ? 2.0 * m : 1.0;
  const Element c1 = scale(Complex(2.0 / s, 0.0), a1);
  const Element c2 = scale(Complex(2.0 / s, 0.0), a2);
  const Element one = Element::identity(a.shape());
  auto lift = [&](const Element& c) -> std::pair<Element, Element> {
    const Element root = positive_sqrt(hermitize(one - c * c), tol);
    const Complex i1(0.0, 1.0);
    return {c + i1 * root, c - i1 * root};
  };
  auto [u1, u2] = lift(c1);
  auto [u3, u4] = lift(c2);
  return FourUnitaries{s, {u1, u2, u3, u4}};
}

}  // namespace alat
