#include "matroidkit/minors.hpp"

#include <map>
#include <mutex>
#include <set>

#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/detail/embedding.hpp"

namespace matroidkit {

namespace {

std::string basis_key(const Matroid& m) {
  std::string key = std::to_string(m.size()) + ':';
  for (ElemSet b : m.bases()) {
    std::uint32_t bits = b.bits();
    key.append(reinterpret_cast<const char*>(&bits), sizeof bits);
  }
  return key;
}

std::mutex cache_mutex;
std::map<std::string, std::optional<NLabelling>>& minor_cache() {
  static std::map<std::string, std::optional<NLabelling>> cache;
  return cache;
}

class MinorSearch {
 public:
  MinorSearch(const Matroid& m, const Matroid& n)
      : m_(m), n_(n), pattern_(n), rk_(m.rank_table()) {
    n_loopless_ = true;
    for (int e = 0; e < n.size(); ++e)
      if (n.is_loop(e)) n_loopless_ = false;
  }

  bool feasible() const {
    const int corank_m = m_.size() - m_.rank();
    const int corank_n = n_.size() - n_.rank();
    return n_.size() <= m_.size() && n_.rank() <= m_.rank() && corank_n <= corank_m;
  }

  int contract_size() const { return m_.rank() - n_.rank(); }

  // Calls f(C) for each independent C of the right size that contains
  // constraint.contract and avoids constraint.del and constraint.keep.
  template <typename F>
  void for_each_contract_set(const LabellingConstraint& cons, F&& f) const {
    const int extra = contract_size() - cons.contract.size();
    if (extra < 0) return;
    const ElemSet pool = m_.ground() - cons.contract - cons.del - cons.keep;
    for_each_combination(pool.size(), extra, [&](ElemSet pick) {
      ElemSet c = expand(pick, pool) | cons.contract;
      if (rk_[c.bits()] != c.size()) return true;
      return f(c);
    });
  }

  // Whether N embeds into (M/C) restricted to `targets`, using clone pruning.
  bool embeds(ElemSet c, ElemSet targets, bool prune) const {
    std::vector<ElemSet> lower;
    if (prune) lower = clones(c, targets);
    auto independent = [&](ElemSet x) {
      return rk_[(x | c).bits()] == x.size() + c.size();
    };
    return !detail::embed(
        pattern_, n_.size(), targets, lower, independent, [](int, int) { return true; },
        [](const std::vector<int>&) { return false; });
  }

  // Calls f(S) for surviving sets S in lexicographic order with (M/C)|S = N.
  template <typename F>
  void for_each_survivor(ElemSet c, const LabellingConstraint& cons, F&& f) const {
    const ElemSet pool = m_.ground() - c - cons.del;
    const int want_rank = n_.rank() + c.size();
    for_each_combination(pool.size(), n_.size(), [&](ElemSet pick) {
      ElemSet s = expand(pick, pool);
      if (!cons.keep.subset_of(s)) return true;
      if (rk_[(s | c).bits()] != want_rank) return true;
      if (cons.filter && !cons.filter(c, s)) return true;
      if (!embeds(c, s, true)) return true;
      return f(s);
    });
  }

  std::optional<NLabelling> first(const LabellingConstraint& cons) const {
    std::optional<NLabelling> found;
    if (!feasible()) return found;
    std::set<std::uint32_t> failed_flats;
    const bool dedupe = n_loopless_;
    for_each_contract_set(cons, [&](ElemSet c) {
      std::uint32_t flat = 0;
      if (dedupe) {
        flat = m_.closure(c).bits();
        if (failed_flats.count(flat)) return true;
      }
      if (!embeds(c, m_.ground() - c - cons.del, true)) {
        if (dedupe) failed_flats.insert(flat);
        return true;
      }
      for_each_survivor(c, cons, [&](ElemSet s) {
        found = NLabelling{c, m_.ground() - c - s};
        return false;
      });
      return !found.has_value();
    });
    return found;
  }

  std::vector<NLabelling> all(const LabellingConstraint& cons) const {
    std::vector<NLabelling> out;
    if (!feasible()) return out;
    for_each_contract_set(cons, [&](ElemSet c) {
      if (!embeds(c, m_.ground() - c - cons.del, true)) return true;
      for_each_survivor(c, cons, [&](ElemSet s) {
        out.push_back(NLabelling{c, m_.ground() - c - s});
        return true;
      });
      return true;
    });
    return out;
  }

 private:
  // lower[t]: elements u < t of `targets` interchangeable with t in M/C
  // (both loops, or a parallel pair).
  std::vector<ElemSet> clones(ElemSet c, ElemSet targets) const {
    std::vector<ElemSet> lower(m_.size());
    const int rc = rk_[c.bits()];
    auto loop = [&](int e) { return rk_[c.with(e).bits()] == rc; };
    for (int t : targets) {
      const bool lt = loop(t);
      for (int u : targets) {
        if (u >= t) break;
        const bool lu = loop(u);
        if (lt != lu) continue;
        if (lt || rk_[(c | ElemSet{u, t}).bits()] == rc + 1) lower[t].insert(u);
      }
    }
    return lower;
  }

  const Matroid& m_;
  const Matroid& n_;
  detail::EmbeddingPattern pattern_;
  const std::uint8_t* rk_;
  bool n_loopless_ = true;
};

}  // namespace

bool is_labelling(const Matroid& m, const Matroid& n, const NLabelling& l) {
  if (l.contract.intersects(l.del) || !(l.contract | l.del).subset_of(m.ground()))
    return false;
  if ((l.contract | l.del) == m.ground()) return n.size() == 0;
  return is_isomorphic(minor(m, l.contract, l.del), n).has_value();
}

std::optional<NLabelling> has_minor(const Matroid& m, const Matroid& n) {
  const std::string key = basis_key(m) + '|' + basis_key(n);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = minor_cache().find(key);
    if (it != minor_cache().end()) return it->second;
  }
  auto result = MinorSearch(m, n).first({});
  std::lock_guard<std::mutex> lock(cache_mutex);
  minor_cache().emplace(key, result);
  return result;
}

std::optional<NLabelling> find_labelling(const Matroid& m, const Matroid& n,
                                         const LabellingConstraint& constraint) {
  if (constraint.trivial()) return has_minor(m, n);
  return MinorSearch(m, n).first(constraint);
}

std::vector<NLabelling> labellings(const Matroid& m, const Matroid& n,
                                   const LabellingConstraint& constraint) {
  return MinorSearch(m, n).all(constraint);
}

void clear_minor_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  minor_cache().clear();
}

ElementStatus element_status(const Matroid& m, const Matroid& n, int e) {
  ElementStatus s;
  const ElemSet one = ElemSet::single(e);
  if (m.size() > 1) {
    s.contractible = has_minor(contract_set(m, one), n).has_value();
    s.deletable = has_minor(delete_set(m, one), n).has_value();
  }
  s.doubly_labelled = s.contractible && s.deletable;
  return s;
}

bool is_grounded(const Matroid& m, const Matroid& n, ElemSet triple) {
  const auto t = triple.elements();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const ElemSet a = ElemSet::single(t[i]), b = ElemSet::single(t[j]);
      if ((a | b) == m.ground()) continue;
      if (has_minor(minor(m, a | b, {}), n) || has_minor(minor(m, {}, a | b), n) ||
          has_minor(minor(m, a, b), n) || has_minor(minor(m, b, a), n))
        return false;
    }
  return true;
}

std::vector<ElemSet> grounded_triangles(const Matroid& m, const Matroid& n) {
  std::vector<ElemSet> out;
  for (ElemSet c : m.circuits())
    if (c.size() == 3 && is_grounded(m, n, c)) out.push_back(c);
  return out;
}

std::vector<ElemSet> grounded_triads(const Matroid& m, const Matroid& n) {
  std::vector<ElemSet> out;
  for (ElemSet c : m.cocircuits())
    if (c.size() == 3 && is_grounded(m, n, c)) out.push_back(c);
  return out;
}

namespace {

void scan_pairs(const Matroid& m, const Matroid& n, const DetachableOptions& options,
                Stage stage, ElemSet exchanged, std::vector<DetachableResult>& out) {
  const int size = m.size();
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y) {
      const ElemSet pair{x, y};
      const ElemSet kept = m.ground() - pair;
      for (RemovalMode mode : {RemovalMode::kContract, RemovalMode::kDelete}) {
        Matroid rest = mode == RemovalMode::kContract ? contract_set(m, pair)
                                                      : delete_set(m, pair);
        if (!is_3_connected(rest)) continue;
        DetachableResult r{x, y, mode, stage, exchanged, std::nullopt};
        if (options.check_minor) {
          auto lab = has_minor(rest, n);
          if (!lab) continue;
          NLabelling lifted{expand(lab->contract, kept), expand(lab->del, kept)};
          (mode == RemovalMode::kContract ? lifted.contract : lifted.del) |= pair;
          r.labelling = lifted;
        }
        out.push_back(r);
        if (options.stop_at_first) return;
      }
    }
}

}  // namespace

std::vector<DetachableResult> detachable_pairs(const Matroid& m, const Matroid& n,
                                               const DetachableOptions& options) {
  std::vector<DetachableResult> out;
  if (m.size() < 2) return out;
  scan_pairs(m, n, options, Stage::kDirect, ElemSet(), out);
  return out;
}

std::vector<DetachableResult> detachable_after_exchange(const Matroid& m, const Matroid& n,
                                                        const DetachableOptions& options) {
  std::vector<DetachableResult> out;
  if (m.size() < 2) return out;
  auto done = [&] { return options.stop_at_first && !out.empty(); };
  for (ElemSet c : m.circuits()) {
    if (c.size() != 3) continue;
    scan_pairs(delta_wye(m, c), n, options, Stage::kAfterDeltaWye, c, out);
    if (done()) return out;
  }
  for (ElemSet c : m.cocircuits()) {
    if (c.size() != 3) continue;
    scan_pairs(wye_delta(m, c), n, options, Stage::kAfterWyeDelta, c, out);
    if (done()) return out;
  }
  return out;
}

NLabelling switch_labels(const Matroid& m, const Matroid& n, const NLabelling& labelling,
                         int d, int e) {
  if (d == e || !m.ground().contains(d) || !m.ground().contains(e))
    throw MatroidError(ErrorKind::kHypothesisUnmet, "d and e must be distinct elements");
  bool parallel = false;
  for (int c : labelling.contract - ElemSet{d, e}) {
    const ElemSet cd{c, d}, ce{c, e};
    if (m.rank(cd) == 2 && m.rank(ce) == 2 && m.rank(cd.with(e)) == 2) {
      parallel = true;
      break;
    }
  }
  if (!parallel)
    throw MatroidError(ErrorKind::kHypothesisUnmet,
                       "no contracted c makes {" + m.label(d) + "," + m.label(e) +
                           "} a parallel pair");
  auto role = [&](int x) {
    return labelling.contract.contains(x) ? 0 : labelling.del.contains(x) ? 1 : 2;
  };
  NLabelling out = labelling;
  const int rd = role(d), re = role(e);
  for (ElemSet* s : {&out.contract, &out.del}) {
    s->erase(d);
    s->erase(e);
  }
  if (re == 0) out.contract.insert(d);
  if (re == 1) out.del.insert(d);
  if (rd == 0) out.contract.insert(e);
  if (rd == 1) out.del.insert(e);
  if (!is_labelling(m, n, out))
    throw MatroidError(ErrorKind::kHypothesisUnmet, "switched pair is not an N-labelling");
  return out;
}

std::string format_detachable(const Matroid& m, const DetachableResult& r) {
  std::string s = format_set(m, ElemSet{r.x, r.y});
  s += r.mode == RemovalMode::kContract ? " contract" : " delete";
  if (r.stage == Stage::kAfterDeltaWye) s += " after delta-wye on " + format_set(m, r.exchanged);
  if (r.stage == Stage::kAfterWyeDelta) s += " after wye-delta on " + format_set(m, r.exchanged);
  return s;
}

}  // namespace matroidkit
