#pragma once

#include "alat/element.hpp"
#include "alat/sampler.hpp"

namespace alat {

/// Independent standard complex Gaussian entries per block.
Element random_element(const AlgebraShape& shape, SeededSampler& rng);

Element random_selfadjoint(const AlgebraShape& shape, SeededSampler& rng);

/// Haar-distributed unitary per block: QR of a complex Gaussian matrix with
/// the R-diagonal phases folded back into Q.
Element random_unitary(const AlgebraShape& shape, SeededSampler& rng);

/// u * diag(1..1,0..0) * u* for a Haar unitary u, with the given rank per block.
Element random_projection(const AlgebraShape& shape, SeededSampler& rng,
                          const std::vector<int>& ranks);

/// Ranks drawn uniformly in [0, n_b] per block.
Element random_projection(const AlgebraShape& shape, SeededSampler& rng);

/// 1 - 2p for a random projection p.
Element random_symmetry(const AlgebraShape& shape, SeededSampler& rng);

/// Normal element: u * diag(z_1..z_n) * u* with Gaussian complex z.
Element random_normal(const AlgebraShape& shape, SeededSampler& rng);

}  // namespace alat
