#include "matroidkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "json.hpp"
#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/structures.hpp"

namespace matroidkit {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kVacuous: return "vacuous";
  }
  return "unknown";
}

std::string to_record(const Verdict& v) {
  nlohmann::ordered_json j;
  j["instance"] = v.instance;
  j["check"] = v.check;
  j["outcome"] = outcome_name(v.outcome);
  j["detail"] = v.detail;
  j["millis"] = static_cast<long long>(v.millis);
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void unmet(const std::string& what) {
  throw MatroidError(ErrorKind::kHypothesisUnmet, what);
}

[[noreturn]] void construction_failed(const std::string& what) {
  throw MatroidError(ErrorKind::kConstructionFailed, what);
}

struct Timer {
  Verdict v;
  Clock::time_point start = Clock::now();

  Timer(std::string instance, std::string check) {
    v.instance = std::move(instance);
    v.check = std::move(check);
  }
  Verdict done(Outcome outcome, std::string detail) {
    v.outcome = outcome;
    v.detail = std::move(detail);
    v.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return v;
  }
};

void require_pair(const Matroid& m, const Matroid& n, int gap) {
  if (!is_3_connected(m)) unmet("M is not 3-connected");
  if (!is_3_connected(n)) unmet("N is not 3-connected");
  if (n.size() < 4) unmet("|E(N)| < 4");
  if (m.size() - n.size() < gap) unmet("|E(M)| - |E(N)| < " + std::to_string(gap));
  if (!has_minor(m, n)) unmet("M has no N-minor");
}

std::optional<std::string> first_pair(const Matroid& m, const Matroid& n, bool exchange) {
  DetachableOptions opt;
  opt.stop_at_first = true;
  auto found = exchange ? detachable_after_exchange(m, n, opt) : detachable_pairs(m, n, opt);
  if (found.empty()) return std::nullopt;
  return format_detachable(m, found.front());
}

std::optional<ElemSet> ungrounded(const Matroid& m, const Matroid& n) {
  for (ElemSet t : triangles(m))
    if (!is_grounded(m, n, t)) return t;
  for (ElemSet t : triads(m))
    if (!is_grounded(m, n, t)) return t;
  return std::nullopt;
}

// Exactly 3-separating sets of even size at least six with a spike-like
// structure, in increasing mask order.
template <class F>
bool for_each_spike_like(const Matroid& m, F&& f) {
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const ElemSet p(s);
    if (p.size() < 6 || p.size() % 2 != 0 || !is_exactly_3_separating(m, p)) continue;
    if (auto r = detect_spike_like(m, p))
      if (f(*r)) return true;
  }
  return false;
}

// Element ids of M after deleting d.
int after_delete(int e, int d) { return e < d ? e : e - 1; }

std::optional<StructureReport> named_separator(const Matroid& m, ElemSet p) {
  if (p.size() != 6) return std::nullopt;
  if (is_exactly_3_separating(m, p)) {
    if (auto r = detect_skew_whiff(m, p)) return r;
    if (auto r = detect_elongated_quad(m, p)) return r;
  }
  const Matroid md = dual(m);
  if (is_exactly_3_separating(md, p))
    if (auto r = detect_twisted_cube_like(md, p)) return r;
  return std::nullopt;
}

std::string separator_detail(const Matroid& m, const StructureReport& r) {
  std::string s(separator_name(r.kind));
  if (r.kind == SeparatorKind::kTwistedCubeLike) s += " in the dual";
  return s + " " + format_set(m, r.support);
}

}  // namespace

Verdict verify_theorem_main(const Matroid& m, const Matroid& n, std::string instance) {
  Timer t(std::move(instance), "theorem-main");
  require_pair(m, n, 10);
  if (auto p = first_pair(m, n, false)) return t.done(Outcome::kPass, "(i) " + *p);
  std::string hit;
  for_each_spike_like(m, [&](const StructureReport& r) {
    const ElemSet p = r.support;
    LabellingConstraint c;
    const ElemSet all = m.ground();
    c.filter = [p, all](ElemSet, ElemSet kept) { return (all - kept - p).size() <= 1; };
    if (auto l = find_labelling(m, n, c)) {
      hit = "(iii) spike-like " + format_set(m, p) + " with N on " +
            format_set(m, survivors(m, *l));
      return true;
    }
    return false;
  });
  if (!hit.empty()) return t.done(Outcome::kPass, hit);
  if (auto p = first_pair(m, n, true)) return t.done(Outcome::kPass, "(ii) " + *p);
  return t.done(Outcome::kFail, "no detachable pair and no spike-like 3-separator");
}

Verdict verify_theorem_triangles(const Matroid& m, const Matroid& n, std::string instance) {
  Timer t(std::move(instance), "theorem-triangles");
  require_pair(m, n, 5);
  if (auto p = first_pair(m, n, false)) return t.done(Outcome::kPass, "(i) " + *p);
  const auto bad = ungrounded(m, n);
  if (!bad) return t.done(Outcome::kPass, "(iii) every triangle and triad is grounded");
  if (auto p = first_pair(m, n, true)) return t.done(Outcome::kPass, "(ii) " + *p);
  return t.done(Outcome::kFail, "not grounded: " + format_set(m, *bad));
}

Verdict verify_flan_corollary(const Matroid& m, const Matroid& n, int d,
                              const std::vector<int>& flan, std::string instance) {
  Timer t(std::move(instance), "flan-corollary");
  require_pair(m, n, 0);
  if (auto bad = ungrounded(m, n)) unmet("not grounded: " + format_set(m, *bad));
  if (d < 0 || d >= m.size()) unmet("d is not an element");
  const Matroid md = delete_set(m, ElemSet::single(d));
  if (!is_3_connected(md)) unmet("M\\d is not 3-connected");
  if (flan.size() < 5) unmet("flan has fewer than five elements");
  std::vector<int> local;
  for (int e : flan) {
    if (e == d || e < 0 || e >= m.size()) unmet("flan element outside M\\d");
    local.push_back(after_delete(e, d));
  }
  if (!is_flan_ordering(md, local)) unmet("not a flan ordering of M\\d");
  const ElemSet first4 = ElemSet{local[0], local[1], local[2], local[3]};
  const int f5 = local[4];
  const ElemSet keep_ids = md.ground().without(f5);
  const ElemSet head = compress(first4, keep_ids);
  LabellingConstraint c;
  c.filter = [head](ElemSet, ElemSet kept) { return (head & kept).size() <= 1; };
  if (!find_labelling(delete_set(md, ElemSet::single(f5)), n, c))
    unmet("M\\d\\f5 has no N-minor meeting f1..f4 at most once");

  if (auto p = first_pair(m, n, false)) return t.done(Outcome::kPass, "(i) " + *p);
  const ElemSet fd = ElemSet::from(flan).with(d);
  if (auto r = named_separator(m, fd)) return t.done(Outcome::kPass, "(ii) " + separator_detail(m, *r));
  return t.done(Outcome::kFail, "F u d = " + format_set(m, fd) + " is not a named separator");
}

std::vector<FoundationInstance> foundation_instances(const Matroid& m, const Matroid& n) {
  std::vector<FoundationInstance> out;
  if (!is_3_connected(m) || !is_3_connected(n) || n.size() < 4 || !has_minor(m, n)) return out;
  if (ungrounded(m, n)) return out;
  for (int d = 0; d < m.size(); ++d) {
    const ElemSet kept = m.ground().without(d);
    const Matroid md = delete_set(m, ElemSet::single(d));
    if (!is_3_connected(md)) continue;
    for (const auto& s : cyclic_3_separations(md))
      for (int side = 0; side < 2; ++side) {
        const ElemSet y = side == 0 ? s.x : s.y;
        const ElemSet z = side == 0 ? s.y : s.x;
        if (y.size() < 4) continue;
        const ElemSet yl = compress(y, md.ground().without(s.z));
        LabellingConstraint c;
        c.filter = [yl](ElemSet, ElemSet surv) { return (yl & surv).size() <= 1; };
        if (!find_labelling(delete_set(md, ElemSet::single(s.z)), n, c)) continue;
        out.push_back({d, expand(ElemSet::single(s.z), kept).min(), expand(y, kept),
                       expand(z, kept)});
      }
  }
  return out;
}

Verdict verify_foundation(const Matroid& m, const Matroid& n, int d, int d_prime, ElemSet y,
                          ElemSet z, std::string instance) {
  Timer t(std::move(instance), "foundation");
  require_pair(m, n, 0);
  if (auto bad = ungrounded(m, n)) unmet("not grounded: " + format_set(m, *bad));
  if (d < 0 || d >= m.size() || d_prime < 0 || d_prime >= m.size() || d == d_prime)
    unmet("d and d' must be distinct elements");
  const ElemSet kept = m.ground().without(d);
  if (y.intersects(z) || y.contains(d) || z.contains(d) || y.contains(d_prime) ||
      z.contains(d_prime) || (y | z).with(d_prime) != kept)
    unmet("(Y, {d'}, Z) must partition E(M) - d");
  const Matroid md = delete_set(m, ElemSet::single(d));
  if (!is_3_connected(md)) unmet("M\\d is not 3-connected");
  const ElemSet yl = compress(y, kept), zl = compress(z, kept);
  const int dl = after_delete(d_prime, d);
  if (!is_cyclic_3_separation(md, yl, dl, zl)) unmet("(Y, {d'}, Z) is not a cyclic 3-separation");
  if (y.size() < 4) unmet("|Y| < 4");
  const ElemSet ylocal = compress(yl, md.ground().without(dl));
  LabellingConstraint c;
  c.filter = [ylocal](ElemSet, ElemSet surv) { return (ylocal & surv).size() <= 1; };
  if (!find_labelling(delete_set(md, ElemSet::single(dl)), n, c))
    unmet("M\\d\\d' has no N-minor meeting Y at most once");
  if (auto p = first_pair(m, n, false)) unmet("M has a detachable pair " + *p);

  // Smallest candidates first.
  std::vector<ElemSet> candidates;
  const std::uint32_t count = std::uint32_t{1} << yl.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const ElemSet xl = expand(ElemSet(s), yl);
    if (xl.size() >= 4 && lambda(md, xl) <= 2) candidates.push_back(xl);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](ElemSet a, ElemSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  for (ElemSet xl : candidates) {
    const ElemSet x = expand(xl, kept);
    for (int cl : md.coclosure(xl) - xl) {
      const int cm = expand(ElemSet::single(cl), kept).min();
      if (auto r = named_separator(m, x.with(cm).with(d)))
        return t.done(Outcome::kPass, "(a) X=" + format_set(m, x) + " c=" + m.label(cm) + " " +
                                          separator_detail(m, *r));
    }
    bool all = true;
    for (int e : xl) {
      const ElemSet single = ElemSet::single(e);
      all = is_3_connected(cosimplify(delete_set(md, single)).matroid) &&
            is_3_connected(contract_set(md, single)) && element_status(md, n, e).doubly_labelled;
      if (!all) break;
    }
    if (all) return t.done(Outcome::kPass, "(b) X=" + format_set(m, x));
  }
  return t.done(Outcome::kFail, "no X in " + format_set(m, y) + " satisfies (a) or (b)");
}

Verdict verify_construction_spike(bool free_tip) {
  Timer t(free_tip ? "spike-construction-free-tip" : "spike-construction", "construction-spike");
  const Matroid m = spike_construction(4, free_tip);
  const Matroid n = fano();
  if (!is_3_connected(m)) construction_failed("M is not 3-connected");
  if (!has_minor(m, n)) construction_failed("M has no F7-minor");
  ElemSet found;
  for_each_spike_like(m, [&](const StructureReport& r) {
    found = r.support;
    return true;
  });
  if (found.empty()) construction_failed("no spike-like 3-separator");
  if (auto p = first_pair(m, n, false)) construction_failed("detachable pair " + *p);
  if (auto p = first_pair(m, n, true)) construction_failed("detachable pair " + *p);
  return t.done(Outcome::kPass, "spike-like " + format_set(m, found) + ", no F7-detachable pairs");
}

Verdict verify_construction_twisted() {
  Timer t("twisted-construction", "construction-twisted");
  const Matroid m = twisted_construction();
  const Matroid n = non_fano();
  if (m.size() != 12) construction_failed("|E(M)| != 12");
  if (m.size() - n.size() != 5) construction_failed("|E(M)| - |E(N)| != 5");
  if (!is_3_connected(m)) construction_failed("M is not 3-connected");
  const Matroid labelled =
      minor(m, elements(m, {"p1"}), elements(m, {"s1", "s2", "p2", "q2"}));
  if (!is_isomorphic(labelled, n)) construction_failed("M/p1\\{s1,s2,p2,q2} is not F7^-");
  const ElemSet x = elements(m, {"p1", "p2", "q1", "q2", "s1", "s2"});
  if (!is_exactly_3_separating(m, x) || !detect_twisted_cube_like(m, x))
    construction_failed("X is not twisted cube-like");
  for (int y : m.ground() - x) {
    const ElemSet s = ElemSet::single(y);
    if (has_minor(delete_set(m, s), n) || has_minor(contract_set(m, s), n))
      construction_failed(m.label(y) + " is F7^- deletable or contractible");
  }
  DetachableOptions loose;
  loose.check_minor = false;
  std::vector<std::string> inside;
  for (const auto& r : detachable_pairs(m, n, loose))
    if (x.contains(r.x) && x.contains(r.y)) inside.push_back(format_detachable(m, r));
  auto deletion = [&](const char* a, const char* b) {
    DetachableResult r;
    r.x = element(m, a);
    r.y = element(m, b);
    r.mode = RemovalMode::kDelete;
    return format_detachable(m, r);
  };
  const std::vector<std::string> expected{deletion("p1", "q2"), deletion("p2", "q1")};
  std::vector<std::string> sorted_inside = inside;
  std::sort(sorted_inside.begin(), sorted_inside.end());
  std::vector<std::string> sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  if (sorted_inside != sorted_expected) construction_failed("unexpected 3-connected pairs in X");
  if (auto p = first_pair(m, n, false)) construction_failed("detachable pair " + *p);
  if (auto p = first_pair(m, n, true)) construction_failed("detachable pair " + *p);
  return t.done(Outcome::kPass, "twisted cube-like " + format_set(m, x) +
                                    ", no F7^- detachable pairs");
}

}  // namespace matroidkit
