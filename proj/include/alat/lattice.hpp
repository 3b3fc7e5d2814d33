#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "alat/element.hpp"

namespace alat {

/// Outcome of the five commeasurability criteria for a projection pair.
struct CommeasReport {
  bool commute = false;  // (i)  pq = qp
  /// (ii) decomposition p = p' v r, q = q' v r with p', q', r pairwise
  /// orthogonal; constructed canonically (r = p^q) when (i) holds.
  std::optional<std::tuple<Element, Element, Element>> witness;
  double residual_iii = 0.0;     // || (p ^ (p^q)-perp) * q ||
  double residual_iv = 0.0;      // || (q ^ (p^q)-perp) * p ||
  double commutator_norm = 0.0;  // (v)
  bool verdict = false;
};

/// 1 - p. Input must be a projection.
Element ortho(const Element& p, const ToleranceConfig& tol = {});

/// p <= q in the projection order, i.e. ||pq - p|| <= verify_tol.
bool leq(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// Projection onto range(p) + range(q), by orthonormalizing the stacked
/// range bases under rank_tol.
Element join(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// De Morgan dual of join.
Element meet(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// Iterated join; empty list gives 0.
Element sup(const AlgebraShape& shape, const std::vector<Element>& ps,
            const ToleranceConfig& tol = {});

/// Sum of pairwise orthogonal projections; rejects non-orthogonal input.
Element orthogonal_sup(const AlgebraShape& shape, const std::vector<Element>& ps,
                       const ToleranceConfig& tol = {});

/// || (p v (p-perp ^ q)) - q || for p <= q.
double orthomodular_residual(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// (p v q) ^ (p v q-perp) ^ (p-perp v q) ^ (p-perp v q-perp).
Element commutator(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// Evaluates all five commeasurability criteria.
CommeasReport commeasurable(const Element& p, const Element& q, const ToleranceConfig& tol = {});

/// The projection p_ij(alpha) onto the span of the vector with 1 in slot i
/// and alpha in slot j, per block (one alpha per block).
Element vector_projection(const AlgebraShape& shape, int i, int j,
                          const std::vector<Complex>& alpha);
/// Same alpha in every block.
Element vector_projection(const AlgebraShape& shape, int i, int j, Complex alpha);

/// Orthogonal rank-1 projections summing to p, one per range vector.
std::vector<Element> decompose_into_vector_projections(const Element& p,
                                                       const ToleranceConfig& tol = {});

/// True iff conjugation by 1-2p swaps e_ii and e_jj and fixes every other
/// diagonal matrix unit.
bool is_ij_swapper(const Element& p, int i, int j, const ToleranceConfig& tol = {});

}  // namespace alat
