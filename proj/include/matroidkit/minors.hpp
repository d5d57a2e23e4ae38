#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

// M/C\D is isomorphic to N.
struct NLabelling {
  ElemSet contract;
  ElemSet del;

  bool operator==(const NLabelling&) const = default;
};

// Elements kept by the labelling: E - C - D.
inline ElemSet survivors(const Matroid& m, const NLabelling& l) {
  return m.ground() - l.contract - l.del;
}

bool is_labelling(const Matroid& m, const Matroid& n, const NLabelling& l);

// Restrictions on the labellings considered. `keep` must survive; `filter`
// sees (C, surviving set) and may reject.
struct LabellingConstraint {
  ElemSet contract;
  ElemSet del;
  ElemSet keep;
  std::function<bool(ElemSet, ElemSet)> filter;

  bool trivial() const { return contract.empty() && del.empty() && keep.empty() && !filter; }
};

// Labellings are normalized: C is independent with |C| = r(M) - r(N), so D is
// coindependent. Candidates are ordered by C, then by the surviving set, both
// lexicographically; the first one is returned.
std::optional<NLabelling> has_minor(const Matroid& m, const Matroid& n);
std::optional<NLabelling> find_labelling(const Matroid& m, const Matroid& n,
                                         const LabellingConstraint& constraint);
// All normalized labellings in canonical order.
std::vector<NLabelling> labellings(const Matroid& m, const Matroid& n,
                                   const LabellingConstraint& constraint = {});

void clear_minor_cache();

struct ElementStatus {
  bool contractible = false;
  bool deletable = false;
  bool doubly_labelled = false;
};

ElementStatus element_status(const Matroid& m, const Matroid& n, int e);

// Triangles (triads) T such that no M/a/b, M/a\b, M\a/b, M\a\b with distinct
// a, b in T has an N-minor.
std::vector<ElemSet> grounded_triangles(const Matroid& m, const Matroid& n);
std::vector<ElemSet> grounded_triads(const Matroid& m, const Matroid& n);
bool is_grounded(const Matroid& m, const Matroid& n, ElemSet triple);

enum class RemovalMode { kContract, kDelete };
enum class Stage { kDirect, kAfterDeltaWye, kAfterWyeDelta };

struct DetachableResult {
  int x = -1;
  int y = -1;
  RemovalMode mode = RemovalMode::kContract;
  Stage stage = Stage::kDirect;
  // Triangle or triad exchanged before the search; empty for kDirect.
  ElemSet exchanged;
  // Labelling of the matroid the pair was found in, with the pair in C (or
  // D). Absent when the minor check is disabled.
  std::optional<NLabelling> labelling;
};

struct DetachableOptions {
  bool check_minor = true;
  bool stop_at_first = false;
};

// Pairs {x,y} with M/x/y (or M\x\y) 3-connected and, unless disabled, with an
// N-minor. Pairs are visited in lexicographic order, contraction first.
std::vector<DetachableResult> detachable_pairs(const Matroid& m, const Matroid& n,
                                               const DetachableOptions& options = {});

// detachable_pairs after each single delta-wye exchange on a triangle and each
// wye-delta exchange on a triad. Exchanged matroids keep the ids of M.
std::vector<DetachableResult> detachable_after_exchange(const Matroid& m, const Matroid& n,
                                                        const DetachableOptions& options = {});

// "{x,y} contract", "{x,y} delete after delta-wye on {a,b,c}" and so on.
std::string format_detachable(const Matroid& m, const DetachableResult& r);

// Switches the labels of d and e, given a contracted c (not d or e) with
// {d,e} a parallel pair of M/c. Throws HypothesisUnmet otherwise, or if the
// switched pair is not an N-labelling.
NLabelling switch_labels(const Matroid& m, const Matroid& n, const NLabelling& labelling,
                         int d, int e);

}  // namespace matroidkit
