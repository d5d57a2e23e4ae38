#include "matroidkit/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matroidkit/connectivity.hpp"

namespace matroidkit {

namespace {

std::vector<ElemSet> of_size(const std::vector<ElemSet>& family, int k) {
  std::vector<ElemSet> out;
  for (ElemSet s : family)
    if (s.size() == k) out.push_back(s);
  return out;
}

void require_3_connected(const Matroid& m) {
  if (!is_3_connected(m))
    throw MatroidError(ErrorKind::kNotThreeConnected, "matroid is not 3-connected");
}

}  // namespace

std::vector<ElemSet> triangles(const Matroid& m) { return of_size(m.circuits(), 3); }
std::vector<ElemSet> triads(const Matroid& m) { return of_size(m.cocircuits(), 3); }

std::vector<ElemSet> segments(const Matroid& m) {
  std::vector<ElemSet> out;
  for (ElemSet f : m.flats()) {
    if (m.rank(f) != 2 || f.size() < 3) continue;
    bool simple = true;
    for (int e : f) {
      if (m.is_loop(e)) simple = false;
      for (int g : f)
        if (g > e && m.rank(ElemSet{e, g}) < 2) simple = false;
    }
    if (simple) out.push_back(f);
  }
  return out;
}

std::vector<ElemSet> cosegments(const Matroid& m) { return segments(dual(m)); }

std::vector<ElemSet> quads(const Matroid& m) {
  std::vector<ElemSet> out;
  for (ElemSet c : m.circuits())
    if (c.size() == 4 && m.is_cocircuit(c)) out.push_back(c);
  return out;
}

namespace {

struct TripleTypes {
  std::set<std::uint32_t> triangles;
  std::set<std::uint32_t> triads;

  explicit TripleTypes(const Matroid& m) {
    for (ElemSet s : matroidkit::triangles(m)) triangles.insert(s.bits());
    for (ElemSet s : matroidkit::triads(m)) triads.insert(s.bits());
  }
  bool triangle(int a, int b, int c) const { return triangles.count(ElemSet{a, b, c}.bits()); }
  bool triad(int a, int b, int c) const { return triads.count(ElemSet{a, b, c}.bits()); }
};

ElemSet set_of(const std::vector<int>& order) {
  ElemSet s;
  for (int e : order) s.insert(e);
  return s;
}

// Keeps, per set, the lexicographically least ordering.
void remember(std::map<std::uint32_t, std::vector<int>>& best, const std::vector<int>& order) {
  auto [it, inserted] = best.emplace(set_of(order).bits(), order);
  if (!inserted && order < it->second) it->second = order;
}

std::vector<std::vector<int>> maximal_orderings(
    const std::map<std::uint32_t, std::vector<int>>& best) {
  std::vector<std::vector<int>> out;
  for (const auto& [bits, order] : best) {
    bool maximal = true;
    for (const auto& [other, unused] : best)
      if (other != bits && (other & bits) == bits) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(order);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool fan_step_ok(const TripleTypes& t, const std::vector<int>& o, std::size_t i) {
  // Triple i-1 is (o[i-1], o[i], o[i+1]); triple i is (o[i], o[i+1], o[i+2]).
  const bool prev_triangle = t.triangle(o[i - 1], o[i], o[i + 1]);
  const bool prev_triad = t.triad(o[i - 1], o[i], o[i + 1]);
  if (prev_triangle && !t.triad(o[i], o[i + 1], o[i + 2])) return false;
  if (prev_triad && !t.triangle(o[i], o[i + 1], o[i + 2])) return false;
  return true;
}

}  // namespace

bool is_fan_ordering(const Matroid& m, const std::vector<int>& order) {
  if (order.size() < 3 || set_of(order).size() != static_cast<int>(order.size())) return false;
  TripleTypes t(m);
  if (!t.triangle(order[0], order[1], order[2]) && !t.triad(order[0], order[1], order[2]))
    return false;
  for (std::size_t i = 1; i + 2 < order.size(); ++i)
    if (!fan_step_ok(t, order, i)) return false;
  return true;
}

std::vector<std::vector<int>> fan_orderings(const Matroid& m) {
  TripleTypes t(m);
  std::vector<std::vector<int>> out;
  std::vector<int> order;
  ElemSet used;

  auto extend = [&](auto&& self) -> void {
    out.push_back(order);
    for (int x : m.ground() - used) {
      order.push_back(x);
      if (fan_step_ok(t, order, order.size() - 3)) {
        used.insert(x);
        self(self);
        used.erase(x);
      }
      order.pop_back();
    }
  };

  std::set<std::uint32_t> starts(t.triangles);
  starts.insert(t.triads.begin(), t.triads.end());
  for (std::uint32_t bits : starts) {
    std::vector<int> perm = ElemSet(bits).elements();
    do {
      order = perm;
      used = ElemSet(bits);
      extend(extend);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FanRecord> fans(const Matroid& m) {
  require_3_connected(m);
  TripleTypes t(m);
  std::map<std::uint32_t, std::vector<int>> best;
  for (const auto& o : fan_orderings(m)) remember(best, o);

  std::vector<FanRecord> out;
  for (auto& o : maximal_orderings(best)) {
    FanRecord rec;
    const bool starts_triangle = t.triangle(o[0], o[1], o[2]);
    for (std::size_t i = 0; i < o.size(); ++i) {
      const bool odd = i % 2 == 0;  // positions are 1-based in the definition
      rec.roles.push_back(odd == starts_triangle ? FanRole::kSpoke : FanRole::kRim);
    }
    rec.elements = std::move(o);
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

bool flan_step_ok(const Matroid& m, const TripleTypes& t, const std::vector<int>& o) {
  const std::size_t i = o.size();  // 1-based position of the last element
  if (i % 2 == 1) return t.triad(o[i - 3], o[i - 2], o[i - 1]);
  ElemSet prefix;
  for (std::size_t j = 0; j + 1 < i; ++j) prefix.insert(o[j]);
  return m.closure(prefix).contains(o[i - 1]);
}

}  // namespace

bool is_flan_ordering(const Matroid& m, const std::vector<int>& order) {
  if (order.size() < 4 || set_of(order).size() != static_cast<int>(order.size())) return false;
  TripleTypes t(m);
  if (!t.triad(order[0], order[1], order[2])) return false;
  std::vector<int> prefix(order.begin(), order.begin() + 3);
  for (std::size_t i = 3; i < order.size(); ++i) {
    prefix.push_back(order[i]);
    if (!flan_step_ok(m, t, prefix)) return false;
  }
  return true;
}

std::vector<std::vector<int>> flan_orderings(const Matroid& m) {
  TripleTypes t(m);
  std::vector<std::vector<int>> out;
  std::vector<int> order;
  ElemSet used;
  auto extend = [&](auto&& self) -> void {
    if (order.size() >= 4) out.push_back(order);
    for (int x : m.ground() - used) {
      order.push_back(x);
      if (flan_step_ok(m, t, order)) {
        used.insert(x);
        self(self);
        used.erase(x);
      }
      order.pop_back();
    }
  };
  for (std::uint32_t bits : t.triads) {
    std::vector<int> perm = ElemSet(bits).elements();
    do {
      order = perm;
      used = ElemSet(bits);
      extend(extend);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlanRecord> flans(const Matroid& m) {
  require_3_connected(m);
  std::map<std::uint32_t, std::vector<int>> best;
  for (const auto& o : flan_orderings(m)) remember(best, o);
  std::vector<FlanRecord> out;
  for (auto& o : maximal_orderings(best)) {
    ElemSet prefix;
    for (int e : o) {
      prefix.insert(e);
      if (lambda(m, prefix) > 2)
        throw MatroidError(ErrorKind::kConstructionFailed,
                           "flan prefix " + format_set(m, prefix) + " is not 3-separating");
    }
    out.push_back(FlanRecord{std::move(o), true});
  }
  return out;
}

std::string_view separator_name(SeparatorKind kind) {
  switch (kind) {
    case SeparatorKind::kSpikeLike: return "spike-like";
    case SeparatorKind::kElongatedQuad: return "elongated-quad";
    case SeparatorKind::kSkewWhiff: return "skew-whiff";
    case SeparatorKind::kTwistedCubeLike: return "twisted-cube-like";
  }
  return "unknown";
}

const std::vector<std::string_view>& separator_roles(SeparatorKind kind) {
  static const std::vector<std::string_view> quad{"p1", "p2", "q1", "q2", "q3", "q4"};
  static const std::vector<std::string_view> whiff{"s1", "s2", "t1", "t2", "u1", "u2"};
  static const std::vector<std::string_view> cube{"p1", "p2", "q1", "q2", "s1", "s2"};
  static const std::vector<std::string_view> none;
  switch (kind) {
    case SeparatorKind::kElongatedQuad: return quad;
    case SeparatorKind::kSkewWhiff: return whiff;
    case SeparatorKind::kTwistedCubeLike: return cube;
    default: return none;
  }
}

namespace {

void require_exact(const Matroid& m, ElemSet p) {
  if (!p.subset_of(m.ground()) || !is_exactly_3_separating(m, p))
    throw MatroidError(ErrorKind::kNotExactlyThreeSeparating,
                       format_set(m, p) + " is not exactly 3-separating");
}

std::vector<ElemSet> inside(const std::vector<ElemSet>& family, ElemSet p) {
  std::vector<ElemSet> out;
  for (ElemSet s : family)
    if (s.subset_of(p)) out.push_back(s);
  return out;
}

bool by_bits(ElemSet a, ElemSet b) { return a.bits() < b.bits(); }

// Role-index sets over six roles.
struct Template {
  std::vector<ElemSet> circuits;
  std::vector<ElemSet> cocircuits;
};

const Template& template_for(SeparatorKind kind) {
  static const Template quad{{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}},
                             {{0, 1, 2, 4}, {0, 1, 3, 5}, {2, 3, 4, 5}}};
  static const Template whiff{{{0, 1, 3, 4}, {0, 2, 3, 5}, {1, 2, 4, 5}},
                              {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}};
  static const Template cube{{{0, 1, 4, 5}, {2, 3, 4, 5}, {0, 1, 2, 3}},
                             {{0, 2, 4, 5}, {1, 3, 4, 5}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}}};
  switch (kind) {
    case SeparatorKind::kElongatedQuad: return quad;
    case SeparatorKind::kSkewWhiff: return whiff;
    default: return cube;
  }
}

std::optional<StructureReport> detect_six(SeparatorKind kind, const Matroid& m, ElemSet p) {
  if (p.size() != 6)
    throw MatroidError(ErrorKind::kBadSize, std::string(separator_name(kind)) +
                                                " needs a 6-element set");
  require_exact(m, p);
  const Template& tpl = template_for(kind);
  auto circuits = inside(m.circuits(), p);
  auto cocircuits = inside(m.cocircuits(), p);
  if (circuits.size() != tpl.circuits.size() || cocircuits.size() != tpl.cocircuits.size())
    return std::nullopt;
  std::sort(circuits.begin(), circuits.end(), by_bits);
  std::sort(cocircuits.begin(), cocircuits.end(), by_bits);

  std::vector<int> perm = p.elements();
  auto mapped = [&](const std::vector<ElemSet>& sets) {
    std::vector<ElemSet> out;
    for (ElemSet s : sets) {
      ElemSet img;
      for (int role : s) img.insert(perm[role]);
      out.push_back(img);
    }
    std::sort(out.begin(), out.end(), by_bits);
    return out;
  };
  do {
    if (mapped(tpl.circuits) == circuits && mapped(tpl.cocircuits) == cocircuits) {
      StructureReport rep{kind, p, {}, perm, {}, {}};
      std::sort(circuits.begin(), circuits.end(), LexLess{});
      std::sort(cocircuits.begin(), cocircuits.end(), LexLess{});
      rep.circuits = circuits;
      rep.cocircuits = cocircuits;
      return rep;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

std::optional<StructureReport> detect_spike_like(const Matroid& m, ElemSet p) {
  require_exact(m, p);
  if (p.size() < 6 || p.size() % 2 != 0) return std::nullopt;
  std::set<std::uint32_t> quad_set;
  for (ElemSet q : quads(m))
    if (q.subset_of(p)) quad_set.insert(q.bits());

  std::vector<ElemSet> legs;
  auto search = [&](auto&& self, ElemSet left) -> bool {
    if (left.empty()) return true;
    const int a = left.min();
    for (int b : left.without(a)) {
      const ElemSet leg{a, b};
      bool ok = true;
      for (ElemSet other : legs)
        if (!quad_set.count((leg | other).bits())) {
          ok = false;
          break;
        }
      if (!ok) continue;
      legs.push_back(leg);
      if (self(self, left - leg)) return true;
      legs.pop_back();
    }
    return false;
  };
  if (!search(search, p)) return std::nullopt;

  StructureReport rep{SeparatorKind::kSpikeLike, p, legs, {}, {}, {}};
  for (std::size_t i = 0; i < legs.size(); ++i)
    for (std::size_t j = i + 1; j < legs.size(); ++j) {
      rep.circuits.push_back(legs[i] | legs[j]);
      rep.cocircuits.push_back(legs[i] | legs[j]);
    }
  std::sort(rep.circuits.begin(), rep.circuits.end(), LexLess{});
  rep.cocircuits = rep.circuits;
  return rep;
}

std::optional<StructureReport> detect_elongated_quad(const Matroid& m, ElemSet p) {
  return detect_six(SeparatorKind::kElongatedQuad, m, p);
}

std::optional<StructureReport> detect_skew_whiff(const Matroid& m, ElemSet p) {
  return detect_six(SeparatorKind::kSkewWhiff, m, p);
}

std::optional<StructureReport> detect_twisted_cube_like(const Matroid& m, ElemSet p) {
  return detect_six(SeparatorKind::kTwistedCubeLike, m, p);
}

std::optional<StructureReport> detect(SeparatorKind kind, const Matroid& m, ElemSet p) {
  switch (kind) {
    case SeparatorKind::kSpikeLike: return detect_spike_like(m, p);
    case SeparatorKind::kElongatedQuad: return detect_elongated_quad(m, p);
    case SeparatorKind::kSkewWhiff: return detect_skew_whiff(m, p);
    case SeparatorKind::kTwistedCubeLike: return detect_twisted_cube_like(m, p);
  }
  return std::nullopt;
}

}  // namespace matroidkit
