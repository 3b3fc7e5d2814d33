#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "alat/errors.hpp"

namespace alat {

/// Block structure of a finite-dimensional *-algebra: a direct sum of full
/// complex matrix blocks, one entry per block dimension.
class AlgebraShape {
public:
  explicit AlgebraShape(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
    if (dims_.empty()) throw StructuralError("AlgebraShape: block list must be nonempty");
    for (int n : dims_)
      if (n < 1) throw StructuralError("AlgebraShape: block dimensions must be >= 1");
  }

  const std::vector<int>& block_dims() const { return dims_; }
  int block_count() const { return static_cast<int>(dims_.size()); }
  int dim(int block) const { return dims_.at(static_cast<std::size_t>(block)); }

  /// Sum of n_i (dimension of the underlying Hilbert space).
  int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  /// Sum of n_i^2 (complex dimension of the algebra).
  int total_entries() const {
    int s = 0;
    for (int n : dims_) s += n * n;
    return s;
  }

  /// True when every block is 1x1, i.e. the algebra is C^k.
  bool commutative() const {
    for (int n : dims_)
      if (n != 1) return false;
    return true;
  }

  bool operator==(const AlgebraShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const AlgebraShape& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(dims_[i]);
    }
    return s + "]";
  }

private:
  std::vector<int> dims_;
};

}  // namespace alat
