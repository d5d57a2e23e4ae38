#pragma once

#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit::detail {

// Placement order and independence checks for mapping the elements of a
// pattern matroid one at a time into a target matroid.
//
// A partial map on the first i+1 positions preserves independence on every
// subset iff it did so on the first i positions and, among subsets containing
// position i, maps the maximal independent ones to independent sets and the
// circuits to dependent sets.
class EmbeddingPattern {
 public:
  struct Check {
    ElemSet positions;
    bool independent;
  };

  explicit EmbeddingPattern(const Matroid& pattern);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  const std::vector<Check>& checks(int position) const { return checks_[position]; }

 private:
  std::vector<int> order_;
  std::vector<std::vector<Check>> checks_;
};

// Backtracking search for injective maps from the pattern into `targets`.
// `independent(ElemSet)` answers independence in the target. `allowed(pattern
// element, target element)` prunes candidates. `lower_clones[t]` lists target
// elements below t whose transposition with t is an automorphism of the
// target; t is only tried once all of them are used, which keeps one map per
// clone orbit. `visit(image)` receives the image of each pattern element
// (indexed by pattern id) and returns false to stop. Returns false if stopped.
template <typename Independent, typename Allowed, typename Visit>
bool embed(const EmbeddingPattern& pattern, int pattern_size, ElemSet targets,
           const std::vector<ElemSet>& lower_clones, Independent&& independent,
           Allowed&& allowed, Visit&& visit) {
  const int k = pattern.size();
  std::vector<int> image_by_position(k, -1);
  std::vector<int> image(pattern_size, -1);
  ElemSet used;

  auto consistent = [&](int pos) {
    for (const auto& check : pattern.checks(pos)) {
      ElemSet img;
      for (int j : check.positions) img.insert(image_by_position[j]);
      if (independent(img) != check.independent) return false;
    }
    return true;
  };

  // Iterative depth-first search; candidate cursor per position.
  std::vector<ElemSet> remaining(k + 1);
  int pos = 0;
  if (k == 0) return visit(image);
  remaining[0] = targets;
  while (pos >= 0) {
    if (image_by_position[pos] >= 0) {
      used.erase(image_by_position[pos]);
      image[pattern.order()[pos]] = -1;
      image_by_position[pos] = -1;
    }
    bool advanced = false;
    while (!remaining[pos].empty()) {
      int t = remaining[pos].min();
      remaining[pos].erase(t);
      if (used.contains(t)) continue;
      if (!lower_clones.empty() && !(lower_clones[t] - used).empty()) continue;
      int p = pattern.order()[pos];
      if (!allowed(p, t)) continue;
      image_by_position[pos] = t;
      image[p] = t;
      used.insert(t);
      if (!consistent(pos)) {
        used.erase(t);
        image[p] = -1;
        image_by_position[pos] = -1;
        continue;
      }
      advanced = true;
      break;
    }
    if (!advanced) {
      --pos;
      continue;
    }
    if (pos + 1 == k) {
      if (!visit(image)) return false;
      continue;  // try next candidate at this position
    }
    ++pos;
    remaining[pos] = targets - used;
  }
  return true;
}

}  // namespace matroidkit::detail
