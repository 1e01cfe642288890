#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thinlab/exact/int_matrix.hpp"

namespace thinlab::group {

using exact::IntMatrix;

// Symmetric generating set: every generator's inverse is present, no matrix
// appears twice, and all generators share one dimension and are unimodular.
class GenSet {
 public:
  // Appends the missing inverses; an inverse gets the label "<label>^-1".
  explicit GenSet(std::vector<IntMatrix> gens, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return gens_.size(); }
  std::size_t dim() const noexcept { return gens_.front().dim(); }
  const IntMatrix& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<IntMatrix>& gens() const noexcept { return gens_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t inverse_of(std::size_t i) const { return inverse_[i]; }

 private:
  std::vector<IntMatrix> gens_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inverse_;
};

// S = [[0,-1],[1,0]] and T = [[1,1],[0,1]], which generate SL_2(Z).
GenSet sl2_standard();
// [[1,k],[0,1]] and [[1,0],[k,1]]; free for k >= 2 (ping-pong).
GenSet unipotent_pair(long k);

}  // namespace thinlab::group
