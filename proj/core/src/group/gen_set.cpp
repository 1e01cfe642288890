#include "thinlab/group/gen_set.hpp"

#include <algorithm>

#include "thinlab/error.hpp"

namespace thinlab::group {

GenSet::GenSet(std::vector<IntMatrix> gens, std::vector<std::string> labels) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "GenSet: no generators");
  if (!labels.empty() && labels.size() != gens.size()) {
    throw Error(ErrorCode::kInvalidArgument, "GenSet: label count differs from generator count");
  }
  const std::size_t n = gens.front().dim();
  auto find = [this](const IntMatrix& m) -> std::size_t {
    auto it = std::find(gens_.begin(), gens_.end(), m);
    return static_cast<std::size_t>(it - gens_.begin());
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const IntMatrix& g = gens[i];
    if (g.dim() != n) throw Error(ErrorCode::kDimensionMismatch, "GenSet: generator dimensions differ");
    auto inv = g.inverse();
    if (!inv) throw Error(ErrorCode::kInvalidArgument, "GenSet: generator " + std::to_string(i) + " not unimodular");
    const std::string label = labels.empty() ? "g" + std::to_string(i) : labels[i];
    if (find(g) == gens_.size()) {
      gens_.push_back(g);
      labels_.push_back(label);
    }
    if (find(*inv) == gens_.size()) {
      gens_.push_back(*inv);
      labels_.push_back(label + "^-1");
    }
  }
  inverse_.resize(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) inverse_[i] = find(*gens_[i].inverse());
}

GenSet sl2_standard() {
  return GenSet({IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}}}, {"S", "T"});
}

GenSet unipotent_pair(long k) {
  return GenSet({IntMatrix{{1, k}, {0, 1}}, IntMatrix{{1, 0}, {k, 1}}}, {"U", "L"});
}

}  // namespace thinlab::group
