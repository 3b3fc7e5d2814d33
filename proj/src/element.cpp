#include "alat/element.hpp"

#include <cmath>

namespace alat {

namespace {

void check_finite(const CMat& m, int block) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw StructuralError("Element: non-finite entry in block " + std::to_string(block));
    }
}

}  // namespace

Element::Element(AlgebraShape shape, std::vector<CMat> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape_.block_count())
    throw StructuralError("Element: block count does not match shape");
  for (int b = 0; b < shape_.block_count(); ++b) {
    const CMat& m = blocks_[static_cast<std::size_t>(b)];
    const int n = shape_.dim(b);
    if (m.rows() != n || m.cols() != n)
      throw StructuralError("Element: block " + std::to_string(b) + " has wrong dimensions");
    check_finite(m, b);
  }
}

Element Element::zero(const AlgebraShape& shape) {
  std::vector<CMat> blocks;
  blocks.reserve(static_cast<std::size_t>(shape.block_count()));
  for (int n : shape.block_dims()) blocks.push_back(CMat::Zero(n, n));
  return Element(shape, std::move(blocks));
}

Element Element::identity(const AlgebraShape& shape) {
  std::vector<CMat> blocks;
  blocks.reserve(static_cast<std::size_t>(shape.block_count()));
  for (int n : shape.block_dims()) blocks.push_back(CMat::Identity(n, n));
  return Element(shape, std::move(blocks));
}

Element Element::scalar(const AlgebraShape& shape, Complex z) {
  std::vector<CMat> blocks;
  for (int n : shape.block_dims()) blocks.push_back(z * CMat::Identity(n, n));
  return Element(shape, std::move(blocks));
}

Element Element::scalar_tuple(const AlgebraShape& shape, const std::vector<Complex>& z) {
  if (static_cast<int>(z.size()) != shape.block_count())
    throw StructuralError("scalar_tuple: one value per block required");
  std::vector<CMat> blocks;
  for (int b = 0; b < shape.block_count(); ++b)
    blocks.push_back(z[static_cast<std::size_t>(b)] * CMat::Identity(shape.dim(b), shape.dim(b)));
  return Element(shape, std::move(blocks));
}

Element Element::matrix_unit(const AlgebraShape& shape, int i, int j) {
  std::vector<CMat> blocks;
  for (int n : shape.block_dims()) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw DomainError("matrix_unit: index out of range for a block of size " + std::to_string(n));
    CMat m = CMat::Zero(n, n);
    m(i, j) = 1.0;
    blocks.push_back(std::move(m));
  }
  return Element(shape, std::move(blocks));
}

Element Element::embed(const AlgebraShape& shape, int block, const CMat& m) {
  if (block < 0 || block >= shape.block_count())
    throw StructuralError("embed: block index out of range");
  Element out = Element::zero(shape);
  std::vector<CMat> blocks = out.blocks_;
  if (m.rows() != shape.dim(block) || m.cols() != shape.dim(block))
    throw StructuralError("embed: matrix does not fit the block");
  blocks[static_cast<std::size_t>(block)] = m;
  return Element(shape, std::move(blocks));
}

Element Element::embed_with_identity(const AlgebraShape& shape, int block, const CMat& m) {
  if (block < 0 || block >= shape.block_count())
    throw StructuralError("embed_with_identity: block index out of range");
  if (m.rows() != shape.dim(block) || m.cols() != shape.dim(block))
    throw StructuralError("embed_with_identity: matrix does not fit the block");
  Element out = Element::identity(shape);
  std::vector<CMat> blocks = out.blocks_;
  blocks[static_cast<std::size_t>(block)] = m;
  return Element(shape, std::move(blocks));
}

Element Element::from_block(const CMat& m) {
  if (m.rows() != m.cols()) throw StructuralError("from_block: matrix must be square");
  return Element(AlgebraShape({static_cast<int>(m.rows())}), {m});
}

void require_same_shape(const Element& a, const Element& b, const char* context) {
  if (a.shape() != b.shape())
    throw StructuralError(std::string(context) + ": shape mismatch " + a.shape().to_string() +
                          " vs " + b.shape().to_string());
}

Element Element::operator+(const Element& other) const {
  require_same_shape(*this, other, "add");
  std::vector<CMat> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(block(b) + other.block(b));
  return Element(shape_, std::move(blocks));
}

Element Element::operator-(const Element& other) const {
  require_same_shape(*this, other, "sub");
  std::vector<CMat> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(block(b) - other.block(b));
  return Element(shape_, std::move(blocks));
}

Element Element::operator*(const Element& other) const {
  require_same_shape(*this, other, "mul");
  std::vector<CMat> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(block(b) * other.block(b));
  return Element(shape_, std::move(blocks));
}

Element Element::operator-() const {
  std::vector<CMat> blocks;
  for (int b = 0; b < block_count(); ++b) blocks.push_back(-block(b));
  return Element(shape_, std::move(blocks));
}

Element operator*(Complex z, const Element& a) { return scale(z, a); }

Element scale(Complex z, const Element& a) {
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b) blocks.push_back(z * a.block(b));
  return Element(a.shape(), std::move(blocks));
}

Element adjoint(const Element& a) {
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b) blocks.push_back(a.block(b).adjoint());
  return Element(a.shape(), std::move(blocks));
}

double op_norm(const Element& a) {
  double m = 0.0;
  for (int b = 0; b < a.block_count(); ++b) {
    if (a.block(b).rows() == 1) {
      m = std::max(m, std::abs(a.block(b)(0, 0)));
    } else {
      Eigen::JacobiSVD<CMat> svd(a.block(b));
      m = std::max(m, svd.singularValues()(0));
    }
  }
  return m;
}

double distance(const Element& a, const Element& b) { return op_norm(a - b); }

bool approx_equal(const Element& a, const Element& b, double tol) {
  return a.shape() == b.shape() && distance(a, b) <= tol;
}

bool is_selfadjoint(const Element& a, const ToleranceConfig& tol) {
  return distance(a, adjoint(a)) <= tol.eq_tol;
}

bool is_projection(const Element& a, const ToleranceConfig& tol) {
  return is_selfadjoint(a, tol) && distance(a * a, a) <= tol.eq_tol;
}

bool is_unitary(const Element& a, const ToleranceConfig& tol) {
  const Element one = Element::identity(a.shape());
  return distance(a * adjoint(a), one) <= tol.eq_tol && distance(adjoint(a) * a, one) <= tol.eq_tol;
}

bool is_symmetry(const Element& a, const ToleranceConfig& tol) {
  return is_selfadjoint(a, tol) && is_unitary(a, tol);
}

Element hermitize(const Element& a) {
  std::vector<CMat> blocks;
  for (int b = 0; b < a.block_count(); ++b)
    blocks.push_back(0.5 * (a.block(b) + a.block(b).adjoint().eval()));
  return Element(a.shape(), std::move(blocks));
}

}  // namespace alat
