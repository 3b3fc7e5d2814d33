#include "alat/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace alat {

namespace {

void require_projection(const Element& p, const ToleranceConfig& tol, const char* context) {
  if (!is_projection(p, tol))
    throw DomainError(std::string(context) + ": input is not a projection");
}

/// Orthonormal basis of the column space of m, rank decided by rank_tol.
CMat range_basis(const CMat& m, const ToleranceConfig& tol) {
  if (m.cols() == 0) return CMat(m.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = tol.rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Element ortho(const Element& p, const ToleranceConfig& tol) {
  require_projection(p, tol, "ortho");
  return Element::identity(p.shape()) - p;
}

bool leq(const Element& p, const Element& q, const ToleranceConfig& tol) {
  require_projection(p, tol, "leq");
  require_projection(q, tol, "leq");
  return distance(p * q, p) <= tol.verify_tol;
}

Element join(const Element& p, const Element& q, const ToleranceConfig& tol) {
  require_projection(p, tol, "join");
  require_projection(q, tol, "join");
  require_same_shape(p, q, "join");
  std::vector<CMat> blocks;
  for (int b = 0; b < p.block_count(); ++b) {
    const int n = static_cast<int>(p.block(b).rows());
    CMat stacked(n, 2 * n);
    stacked << p.block(b), q.block(b);
    const CMat basis = range_basis(stacked, tol);
    CMat proj = basis * basis.adjoint();
    blocks.push_back(0.5 * (proj + proj.adjoint().eval()));
  }
  return Element(p.shape(), std::move(blocks));
}

Element meet(const Element& p, const Element& q, const ToleranceConfig& tol) {
  return ortho(join(ortho(p, tol), ortho(q, tol), tol), tol);
}

Element sup(const AlgebraShape& shape, const std::vector<Element>& ps,
            const ToleranceConfig& tol) {
  Element acc = Element::zero(shape);
  for (const Element& p : ps) acc = join(acc, p, tol);
  return acc;
}

Element orthogonal_sup(const AlgebraShape& shape, const std::vector<Element>& ps,
                       const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    require_projection(ps[i], tol, "orthogonal_sup");
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (op_norm(ps[i] * ps[j]) > tol.verify_tol)
        throw DomainError("orthogonal_sup: inputs " + std::to_string(i) + " and " +
                          std::to_string(j) + " are not orthogonal");
  }
  Element s = Element::zero(shape);
  for (const Element& p : ps) s = s + p;
  s = hermitize(s);
  if (distance(s * s, s) > tol.verify_tol)
    throw NumericError("orthogonal_sup: sum failed the idempotence check");
  return s;
}

double orthomodular_residual(const Element& p, const Element& q, const ToleranceConfig& tol) {
  if (!leq(p, q, tol)) throw DomainError("orthomodular_residual: p <= q required");
  const Element lhs = join(p, meet(ortho(p, tol), q, tol), tol);
  return distance(lhs, q);
}

Element commutator(const Element& p, const Element& q, const ToleranceConfig& tol) {
  require_projection(p, tol, "commutator");
  require_projection(q, tol, "commutator");
  const Element pc = ortho(p, tol);
  const Element qc = ortho(q, tol);
  const Element a = join(p, q, tol);
  const Element b = join(p, qc, tol);
  const Element c = join(pc, q, tol);
  const Element d = join(pc, qc, tol);
  return meet(meet(a, b, tol), meet(c, d, tol), tol);
}

CommeasReport commeasurable(const Element& p, const Element& q, const ToleranceConfig& tol) {
  require_projection(p, tol, "commeasurable");
  require_projection(q, tol, "commeasurable");
  CommeasReport rep;
  rep.commute = op_norm(p * q - q * p) <= tol.verify_tol;

  const Element pq = meet(p, q, tol);
  rep.residual_iii = op_norm(meet(p, ortho(pq, tol), tol) * q);
  rep.residual_iv = op_norm(meet(q, ortho(pq, tol), tol) * p);
  rep.commutator_norm = op_norm(commutator(p, q, tol));

  if (rep.commute) {
    // Canonical decomposition through the common part r = p ^ q.
    const Element r = pq;
    rep.witness = std::make_tuple(hermitize(p - r), hermitize(q - r), r);
  }

  const bool iii = rep.residual_iii <= tol.verify_tol;
  const bool iv = rep.residual_iv <= tol.verify_tol;
  const bool v = rep.commutator_norm <= tol.verify_tol;
  rep.verdict = rep.commute && iii && iv && v;
  return rep;
}

Element vector_projection(const AlgebraShape& shape, int i, int j,
                          const std::vector<Complex>& alpha) {
  if (static_cast<int>(alpha.size()) != shape.block_count())
    throw StructuralError("vector_projection: one alpha per block required");
  if (i == j) throw DomainError("vector_projection: indices must be distinct");
  std::vector<CMat> blocks;
  for (int b = 0; b < shape.block_count(); ++b) {
    const int n = shape.dim(b);
    if (i < 0 || j < 0 || i >= n || j >= n || n < 2)
      throw DomainError("vector_projection: indices out of range for block of size " +
                        std::to_string(n));
    const Complex a = alpha[static_cast<std::size_t>(b)];
    const double denom = 1.0 + std::norm(a);
    CMat m = CMat::Zero(n, n);
    m(i, i) = 1.0 / denom;
    m(i, j) = a / denom;
    m(j, i) = std::conj(a) / denom;
    m(j, j) = std::norm(a) / denom;
    blocks.push_back(std::move(m));
  }
  return Element(shape, std::move(blocks));
}

Element vector_projection(const AlgebraShape& shape, int i, int j, Complex alpha) {
  return vector_projection(shape, i, j,
                           std::vector<Complex>(static_cast<std::size_t>(shape.block_count()), alpha));
}

std::vector<Element> decompose_into_vector_projections(const Element& p,
                                                       const ToleranceConfig& tol) {
  require_projection(p, tol, "decompose_into_vector_projections");
  std::vector<Element> out;
  for (int b = 0; b < p.block_count(); ++b) {
    Eigen::SelfAdjointEigenSolver<CMat> es(p.block(b));
    if (es.info() != Eigen::Success)
      throw NumericError("decompose_into_vector_projections: eigendecomposition failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      if (es.eigenvalues()(i) < 0.5) continue;
      Eigen::VectorXcd v = es.eigenvectors().col(i);
      // Canonical representative: first significant entry scaled to 1.
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > tol.rank_tol) {
          v /= v(k);
          break;
        }
      }
      CMat rank1 = v * v.adjoint() / v.squaredNorm();
      out.push_back(Element::embed(p.shape(), b, 0.5 * (rank1 + rank1.adjoint().eval())));
    }
  }
  return out;
}

bool is_ij_swapper(const Element& p, int i, int j, const ToleranceConfig& tol) {
  if (!is_projection(p, tol)) return false;
  if (i == j) throw DomainError("is_ij_swapper: indices must be distinct");
  const Element s = Element::identity(p.shape()) - scale(Complex(2.0, 0.0), p);
  for (int b = 0; b < p.block_count(); ++b) {
    const int n = p.shape().dim(b);
    if (i >= n || j >= n || i < 0 || j < 0)
      throw DomainError("is_ij_swapper: indices out of range for block of size " + std::to_string(n));
  }
  const Element eii = Element::matrix_unit(p.shape(), i, i);
  const Element ejj = Element::matrix_unit(p.shape(), j, j);
  if (distance(s * eii * s, ejj) > tol.verify_tol) return false;
  for (int k = 0; k < *std::min_element(p.shape().block_dims().begin(), p.shape().block_dims().end());
       ++k) {
    if (k == i || k == j) continue;
    const Element ekk = Element::matrix_unit(p.shape(), k, k);
    if (distance(s * ekk * s, ekk) > tol.verify_tol) return false;
  }
  return true;
}

}  // namespace alat
