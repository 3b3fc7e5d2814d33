#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "alat/shape.hpp"
#include "alat/tolerance.hpp"

namespace alat {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// An element of a block-diagonal complex matrix *-algebra: one square
/// complex matrix per block of the shape. Immutable after construction.
class Element {
public:
  Element(AlgebraShape shape, std::vector<CMat> blocks);

  static Element zero(const AlgebraShape& shape);
  static Element identity(const AlgebraShape& shape);
  /// z times the identity.
  static Element scalar(const AlgebraShape& shape, Complex z);
  /// Scalar tuple: z_b times the identity of block b.
  static Element scalar_tuple(const AlgebraShape& shape, const std::vector<Complex>& z);
  /// Matrix unit e_ij placed in every block (indices 0-based, valid in each block).
  static Element matrix_unit(const AlgebraShape& shape, int i, int j);
  /// An element supported in a single block: m there, zero elsewhere.
  static Element embed(const AlgebraShape& shape, int block, const CMat& m);
  /// m in one block and the identity in every other block.
  static Element embed_with_identity(const AlgebraShape& shape, int block, const CMat& m);
  static Element from_block(const CMat& m);  // single-block shape

  const AlgebraShape& shape() const { return shape_; }
  int block_count() const { return shape_.block_count(); }
  const CMat& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }
  const std::vector<CMat>& blocks() const { return blocks_; }

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  Element operator-() const;

private:
  AlgebraShape shape_;
  std::vector<CMat> blocks_;
};

Element operator*(Complex z, const Element& a);

Element adjoint(const Element& a);
Element scale(Complex z, const Element& a);

/// C*-norm on the direct sum: maximum block spectral norm.
double op_norm(const Element& a);
/// op_norm(a - b).
double distance(const Element& a, const Element& b);
bool approx_equal(const Element& a, const Element& b, double tol);

bool is_selfadjoint(const Element& a, const ToleranceConfig& tol = {});
bool is_projection(const Element& a, const ToleranceConfig& tol = {});
bool is_unitary(const Element& a, const ToleranceConfig& tol = {});
bool is_symmetry(const Element& a, const ToleranceConfig& tol = {});

/// (a + a*)/2, exactly self-adjoint. Used to suppress drift after
/// constructions whose result is a projection or self-adjoint by design.
Element hermitize(const Element& a);

void require_same_shape(const Element& a, const Element& b, const char* context);

}  // namespace alat
