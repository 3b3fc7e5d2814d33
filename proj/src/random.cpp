#include "alat/random.hpp"

#include <Eigen/QR>

namespace alat {

namespace {

CMat gaussian_block(int n, SeededSampler& rng) {
  CMat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = rng.cgauss();
  return m;
}

CMat haar_block(int n, SeededSampler& rng) {
  const CMat g = gaussian_block(n, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(n, n);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the distribution is Haar.
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double ad = std::abs(d);
    q.col(i) *= (ad > 0.0 ? d / ad : Complex(1.0, 0.0));
  }
  return q;
}

}  // namespace

Element random_element(const AlgebraShape& shape, SeededSampler& rng) {
  std::vector<CMat> blocks;
  for (int n : shape.block_dims()) blocks.push_back(gaussian_block(n, rng));
  return Element(shape, std::move(blocks));
}

Element random_selfadjoint(const AlgebraShape& shape, SeededSampler& rng) {
  return hermitize(random_element(shape, rng));
}

Element random_unitary(const AlgebraShape& shape, SeededSampler& rng) {
  std::vector<CMat> blocks;
  for (int n : shape.block_dims()) blocks.push_back(haar_block(n, rng));
  return Element(shape, std::move(blocks));
}

Element random_projection(const AlgebraShape& shape, SeededSampler& rng,
                          const std::vector<int>& ranks) {
  if (static_cast<int>(ranks.size()) != shape.block_count())
    throw StructuralError("random_projection: one rank per block required");
  std::vector<CMat> blocks;
  for (int b = 0; b < shape.block_count(); ++b) {
    const int n = shape.dim(b);
    const int r = ranks[static_cast<std::size_t>(b)];
    if (r < 0 || r > n)
      throw DomainError("random_projection: rank " + std::to_string(r) +
                        " out of range for block of size " + std::to_string(n));
    const CMat u = haar_block(n, rng);
    CMat d = CMat::Zero(n, n);
    for (int i = 0; i < r; ++i) d(i, i) = 1.0;
    CMat p = u * d * u.adjoint();
    blocks.push_back(0.5 * (p + p.adjoint().eval()));
  }
  return Element(shape, std::move(blocks));
}

Element random_projection(const AlgebraShape& shape, SeededSampler& rng) {
  std::vector<int> ranks;
  for (int n : shape.block_dims())
    ranks.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1)));
  return random_projection(shape, rng, ranks);
}

Element random_symmetry(const AlgebraShape& shape, SeededSampler& rng) {
  const Element p = random_projection(shape, rng);
  return Element::identity(shape) - scale(Complex(2.0, 0.0), p);
}

Element random_normal(const AlgebraShape& shape, SeededSampler& rng) {
  std::vector<CMat> blocks;
  for (int n : shape.block_dims()) {
    const CMat u = haar_block(n, rng);
    CMat d = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = rng.cgauss();
    blocks.push_back(u * d * u.adjoint());
  }
  return Element(shape, std::move(blocks));
}

}  // namespace alat
