#include <chrono>

#include "matroidkit/connectivity.hpp"
#include "matroidkit/harness.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/structures.hpp"

namespace matroidkit {

namespace {

constexpr int kSubsetCap = 12;
constexpr int kPairCap = 10;

bool three(const Matroid& m) { return is_3_connected(m); }
// The lemmas are about 3-connected matroids with at least four elements.
bool standing(const Matroid& m) { return m.size() >= 4 && is_3_connected(m); }
bool si_three(const Matroid& m) { return is_3_connected(simplify(m).matroid); }
bool co_three(const Matroid& m) { return is_3_connected(cosimplify(m).matroid); }

Matroid del(const Matroid& m, std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.insert(x);
  return delete_set(m, s);
}
Matroid con(const Matroid& m, std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.insert(x);
  return contract_set(m, s);
}

// Collects hypothesis instances and the first failure.
struct Probe {
  LemmaResult result;

  bool failed() const { return !result.witness.empty(); }
  void hit() { ++result.exercised; }
  bool check(bool ok, const std::string& witness) {
    if (!ok && !failed()) result.witness = witness;
    return ok;
  }
};

template <class F>
void for_each_subset(const Matroid& m, F&& f) {
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (std::uint32_t s = 0; s < count; ++s)
    if (!f(ElemSet(s))) return;
}

std::string set_str(const Matroid& m, ElemSet x) { return format_set(m, x); }
std::string elem_str(const Matroid& m, int e) { return m.label(e); }

bool is_plane(const Matroid& m, ElemSet p, int size) {
  if (p.size() != size || m.rank(p) != 3) return false;
  bool ok = true;
  for_each_combination(size, 3, [&](ElemSet t) {
    ok = m.rank(expand(t, p)) == 3;
    return ok;
  });
  return ok;
}

bool triangle_in(const Matroid& m, ElemSet s) {
  for (ElemSet t : triangles(m))
    if (t.subset_of(s)) return true;
  return false;
}

// Minors from the palette that M properly contains.
std::vector<const Matroid*> minors_of(const Matroid& m) {
  std::vector<const Matroid*> out;
  for (const auto& entry : minor_palette())
    if (entry.matroid.size() < m.size() && has_minor(m, entry.matroid))
      out.push_back(&entry.matroid);
  return out;
}

std::vector<NLabelling> some_labellings(const Matroid& m, const Matroid& n) {
  if (m.size() <= 9) {
    auto all = labellings(m, n);
    if (all.size() > 16) all.resize(16);
    return all;
  }
  if (auto l = has_minor(m, n)) return {*l};
  return {};
}

LemmaResult uncrossing(const Matroid& m) {
  Probe p;
  if (m.size() > kPairCap || !standing(m)) return p.result;
  std::vector<ElemSet> seps;
  for_each_subset(m, [&](ElemSet x) {
    if (lambda(m, x) <= 2) seps.push_back(x);
    return true;
  });
  const ElemSet e = m.ground();
  for (std::size_t i = 0; i < seps.size() && !p.failed(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j) {
      const ElemSet x = seps[i], y = seps[j];
      if ((x & y).size() >= 2) {
        p.hit();
        if (!p.check(lambda(m, x | y) <= 2, "union of " + set_str(m, x) + " " + set_str(m, y)))
          break;
      }
      if ((e - (x | y)).size() >= 2) {
        p.hit();
        if (!p.check(lambda(m, x & y) <= 2,
                     "intersection of " + set_str(m, x) + " " + set_str(m, y)))
          break;
      }
    }
  return p.result;
}

LemmaResult closure_swap(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap) return p.result;
  for (int e = 0; e < m.size() && !p.failed(); ++e) {
    const ElemSet rest = m.ground().without(e);
    for_each_subset(m, [&](ElemSet x) {
      if (!x.subset_of(rest)) return true;
      p.hit();
      const ElemSet y = rest - x;
      return p.check(m.closure(x).contains(e) != m.coclosure(y).contains(e),
                     elem_str(m, e) + " with X=" + set_str(m, x));
    });
  }
  return p.result;
}

LemmaResult extend_separation(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_subset(m, [&](ElemSet x) {
    if (lambda(m, x) != 2) return true;
    const ElemSet cl = m.closure(x) | m.coclosure(x);
    for (int e : m.ground() - x) {
      p.hit();
      if (!p.check((lambda(m, x.with(e)) <= 2) == cl.contains(e),
                   "X=" + set_str(m, x) + " e=" + elem_str(m, e)))
        return false;
    }
    return true;
  });
  return p.result;
}

LemmaResult exact_separation_element(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_subset(m, [&](ElemSet x) {
    if (x.size() < 3 || lambda(m, x) != 2) return true;
    for (int e : x) {
      p.hit();
      const ElemSet rest = x.without(e);
      if (!p.check(m.closure(rest).contains(e) || m.coclosure(rest).contains(e),
                   "X=" + set_str(m, x) + " x=" + elem_str(m, e)))
        return false;
    }
    return true;
  });
  return p.result;
}

LemmaResult guts_coguts(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_subset(m, [&](ElemSet x) {
    if (x.size() < 3 || lambda(m, x) != 2) return true;
    const ElemSet y = m.ground() - x;
    for (int e : x) {
      p.hit();
      const ElemSet rest = x.without(e);
      const bool guts = m.closure(rest).contains(e) && m.closure(y).contains(e);
      const bool coguts = m.coclosure(rest).contains(e) && m.coclosure(y).contains(e);
      if (!p.check((lambda(m, rest) == 2) == (guts || coguts),
                   "X=" + set_str(m, x) + " x=" + elem_str(m, e)))
        return false;
    }
    return true;
  });
  return p.result;
}

LemmaResult guts_coguts_disjoint(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_subset(m, [&](ElemSet x) {
    const ElemSet y = m.ground() - x;
    if (x.size() < 3 || y.size() < 3 || lambda(m, x) > 2) return true;
    p.hit();
    return p.check((m.closure(x) & m.coclosure(x) & y).empty(), "X=" + set_str(m, x));
  });
  return p.result;
}

LemmaResult vertical_separation(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  ElemSet with_sep;
  for (const auto& s : vertical_3_separations(m)) with_sep.insert(s.z);
  for (int z = 0; z < m.size(); ++z) {
    p.hit();
    if (!p.check(with_sep.contains(z) == !si_three(con(m, {z})), "z=" + elem_str(m, z))) break;
  }
  return p.result;
}

LemmaResult segment_removal(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  for (ElemSet s : segments(m)) {
    if (s.size() < 4) continue;
    for (int e : s) {
      p.hit();
      if (!p.check(three(del(m, {e})), "segment " + set_str(m, s) + " s=" + elem_str(m, e)))
        return p.result;
    }
  }
  for (ElemSet s : cosegments(m)) {
    if (s.size() < 4) continue;
    for (int e : s) {
      p.hit();
      if (!p.check(three(con(m, {e})), "cosegment " + set_str(m, s) + " s=" + elem_str(m, e)))
        return p.result;
    }
  }
  return p.result;
}

LemmaResult bixby(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  for (int e = 0; e < m.size(); ++e) {
    p.hit();
    if (!p.check(si_three(con(m, {e})) || co_three(del(m, {e})), "e=" + elem_str(m, e))) break;
  }
  return p.result;
}

LemmaResult tutte_triangle(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  const auto tri = triads(m);
  for (ElemSet t : triangles(m))
    for (int a : t)
      for (int b : t.without(a)) {
        const int c = t.without(a).without(b).min();
        if (three(del(m, {a})) || three(del(m, {b}))) continue;
        p.hit();
        bool found = false;
        for (ElemSet s : tri)
          if (s.contains(a) && (s & ElemSet{b, c}).size() == 1) found = true;
        if (!p.check(found, "triangle " + set_str(m, t) + " a=" + elem_str(m, a) +
                                " b=" + elem_str(m, b)))
          return p.result;
      }
  return p.result;
}

// x in C* and a triangle of M/x inside cl(C*) - x.
bool has_contracted_triangle(const Matroid& m, ElemSet span, int x) {
  bool found = false;
  const ElemSet pool = span.without(x);
  for_each_combination(pool.size(), 3, [&](ElemSet local) {
    const ElemSet t = expand(local, pool);
    bool ok = m.rank(t.with(x)) == 3;
    for (int e : t) ok = ok && m.rank(t.without(e).with(x)) == 3;
    found = ok;
    return !found;
  });
  return found;
}

LemmaResult rank3_cocircuit_simplification(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  for (ElemSet c : m.cocircuits()) {
    if (m.rank(c) != 3) continue;
    const ElemSet span = m.closure(c);
    for (int x : c) {
      if (!has_contracted_triangle(m, span, x)) continue;
      p.hit();
      if (!p.check(si_three(con(m, {x})), "C*=" + set_str(m, c) + " x=" + elem_str(m, x)))
        return p.result;
    }
  }
  return p.result;
}

LemmaResult rank3_cocircuit_cosimplification(const Matroid& m) {
  Probe p;
  if (m.rank() < 4 || !standing(m)) return p.result;
  for (ElemSet c : m.cocircuits()) {
    if (m.rank(c) != 3) continue;
    for (int x : c) {
      if (!m.closure(c.without(x)).contains(x)) continue;
      p.hit();
      if (!p.check(co_three(del(m, {x})), "C*=" + set_str(m, c) + " x=" + elem_str(m, x)))
        return p.result;
    }
  }
  return p.result;
}

LemmaResult presingle(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_subset(m, [&](ElemSet x) {
    const ElemSet y = m.ground() - x;
    if (x.size() < 3 || y.size() < 3 || lambda(m, x) > 2) return true;
    const ElemSet a = x & m.closure(y);
    const ElemSet b = x & m.coclosure(y);
    if (a.empty() || b.empty()) return true;
    p.hit();
    return p.check(a.size() == 1 && b.size() == 1, "X=" + set_str(m, x));
  });
  return p.result;
}

bool has_series_or_parallel_pair(const Matroid& m) {
  for (ElemSet c : m.circuits())
    if (c.size() <= 2) return true;
  for (ElemSet c : m.cocircuits())
    if (c.size() <= 2) return true;
  return false;
}

LemmaResult full_closure_2_separation(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !is_connected(m) || has_series_or_parallel_pair(m))
    return p.result;
  for_each_subset(m, [&](ElemSet x) {
    const ElemSet y = m.ground() - x;
    if (x.size() < 2 || y.size() < 2 || lambda(m, x) > 1) return true;
    p.hit();
    const ElemSet f = full_closure(m, x);
    return p.check(lambda(m, f) <= 1 && (y - f).size() >= 2, "X=" + set_str(m, x));
  });
  return p.result;
}

bool starts_with_triangle(const Matroid& m, const std::vector<int>& order) {
  return m.is_circuit(ElemSet{order[0], order[1], order[2]});
}

// Spoke or rim at 1-based position i.
bool is_spoke(const Matroid& m, const std::vector<int>& order, std::size_t i) {
  return starts_with_triangle(m, order) == (i % 2 == 1);
}

LemmaResult fan_ends(const Matroid& m) {
  Probe p;
  if (!standing(m) || is_wheel_or_whirl(m)) return p.result;
  for (const auto& order : fan_orderings(m)) {
    if (order.size() < 4) continue;
    for (std::size_t i : {std::size_t{1}, order.size()}) {
      const int f = order[i - 1];
      p.hit();
      const bool co = co_three(del(m, {f}));
      const bool si = si_three(con(m, {f}));
      const bool ok = is_spoke(m, order, i) ? (co && !si) : (si && !co);
      if (!p.check(ok, "end " + elem_str(m, f) + " of fan " + set_str(m, ElemSet::from(order))))
        return p.result;
    }
  }
  return p.result;
}

LemmaResult fan_ends_maximal(const Matroid& m) {
  Probe p;
  if (!standing(m) || is_wheel_or_whirl(m)) return p.result;
  const auto orders = fan_orderings(m);
  for (const auto& fan : fans(m)) {
    if (fan.elements.size() < 4) continue;
    const ElemSet set = ElemSet::from(fan.elements);
    for (const auto& order : orders) {
      if (order.size() != fan.elements.size() || ElemSet::from(order) != set) continue;
      for (std::size_t i : {std::size_t{1}, order.size()}) {
        const int f = order[i - 1];
        p.hit();
        const bool ok = is_spoke(m, order, i) ? three(del(m, {f})) : three(con(m, {f}));
        if (!p.check(ok, "end " + elem_str(m, f) + " of maximal fan " + set_str(m, set)))
          return p.result;
      }
    }
  }
  return p.result;
}

LemmaResult two_separation_minor(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !is_connected(m) || three(m)) return p.result;
  for (const Matroid* n : minors_of(m)) {
    const auto l = has_minor(m, *n);
    const ElemSet kept = survivors(m, *l);
    for_each_subset(m, [&](ElemSet x) {
      const ElemSet y = m.ground() - x;
      if (!x.contains(0) || x.size() < 2 || y.size() < 2 || lambda(m, x) > 1) return true;
      p.hit();
      bool any = false;
      for (ElemSet u : {x, y}) {
        if ((u & kept).size() > 1) continue;
        any = true;
        for (int e : u) {
          const Matroid c = con(m, {e});
          const Matroid d = del(m, {e});
          if (is_connected(c) && !p.check(has_minor(c, *n).has_value(), "M/" + elem_str(m, e)))
            return false;
          if (is_connected(d) && !p.check(has_minor(d, *n).has_value(), "M\\" + elem_str(m, e)))
            return false;
        }
      }
      return p.check(any, "2-separation " + set_str(m, x));
    });
    if (p.failed()) break;
  }
  return p.result;
}

LemmaResult doubly_labelled(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  const auto ns = minors_of(m);
  if (ns.empty()) return p.result;
  const auto seps = cyclic_3_separations(m);
  for (const Matroid* n : ns) {
    for (const auto& s : seps)
      for (int side = 0; side < 2; ++side) {
        const ElemSet x = side == 0 ? s.x : s.y;
        const ElemSet y = side == 0 ? s.y : s.x;
        const int z = s.z;
        const ElemSet kept = m.ground().without(z);
        const ElemSet xl = compress(x, kept);
        LabellingConstraint constraint;
        constraint.filter = [xl](ElemSet, ElemSet surv) { return (xl & surv).size() <= 1; };
        if (!find_labelling(del(m, {z}), *n, constraint)) continue;
        p.hit();
        const ElemSet xp = x - m.coclosure(y);
        const ElemSet yp = m.coclosure(y).without(z);
        const std::string where = "X=" + set_str(m, x) + " z=" + elem_str(m, z);
        for (int e : xp)
          if (!p.check(has_minor(del(m, {e}), *n).has_value(), where + " deletable " + elem_str(m, e)))
            return p.result;
        ElemSet bad;
        for (int e : m.coclosure(x).without(z))
          if (!has_minor(con(m, {e}), *n)) bad.insert(e);
        if (!p.check(bad.size() <= 1, where + " non-contractible " + set_str(m, bad)))
          return p.result;
        if (bad.size() == 1) {
          const int e = bad.min();
          const bool ok = xp.contains(e) && m.closure(yp).contains(e) &&
                          m.coclosure(xp.without(e)).contains(z);
          if (!p.check(ok, where + " placement of " + elem_str(m, e))) return p.result;
        }
      }
  }
  return p.result;
}

LemmaResult label_switch(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  const auto tri = triangles(m);
  for (const Matroid* n : minors_of(m)) {
    if (n->size() < 4) continue;
    for (const auto& l : some_labellings(m, *n))
      for (int c : l.contract)
        for (ElemSet t : tri) {
          if (!t.contains(c)) continue;
          const ElemSet pair = t.without(c);
          const int d = pair.min(), e = pair.max();
          auto cls = [&](int x) { return l.contract.contains(x) ? 0 : l.del.contains(x) ? 1 : 2; };
          if (cls(d) == cls(e)) continue;
          p.hit();
          NLabelling s = l;
          const ElemSet both{d, e};
          auto swap_in = [&](ElemSet& part) {
            if ((part & both).size() == 1) part = part ^ both;
          };
          swap_in(s.contract);
          swap_in(s.del);
          if (!p.check(is_labelling(m, *n, s), "c=" + elem_str(m, c) + " switch " +
                                                   elem_str(m, d) + "," + elem_str(m, e)))
            return p.result;
        }
  }
  return p.result;
}

LemmaResult grounded_triangle_contraction(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  for (const Matroid* n : minors_of(m)) {
    if (n->size() < 4) continue;
    for (ElemSet t : grounded_triangles(m, *n))
      for (int x : t) {
        p.hit();
        if (!p.check(!has_minor(con(m, {x}), *n), "triangle " + set_str(m, t) + " x=" + elem_str(m, x)))
          return p.result;
      }
  }
  return p.result;
}

template <class F>
void for_each_plane(const Matroid& m, int size, F&& f) {
  if (m.size() < size) return;
  for_each_combination(m.size(), size, [&](ElemSet s) {
    if (!is_plane(m, s, size)) return true;
    return f(s);
  });
}

LemmaResult six_point_plane(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_plane(m, 5, [&](ElemSet s) {
    for (int e : m.closure(s) - s) {
      p.hit();
      if (!p.check(three(del(m, {e})), "P=" + set_str(m, s) + " p=" + elem_str(m, e))) return false;
    }
    return true;
  });
  return p.result;
}

LemmaResult plane_with_triad(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || m.size() < 6 || !standing(m)) return p.result;
  const auto tri = triads(m);
  for_each_plane(m, 5, [&](ElemSet s) {
    for (ElemSet t : tri) {
      if (!t.subset_of(s)) continue;
      for (int e : s - t) {
        p.hit();
        if (!p.check(three(del(m, {e})), "P=" + set_str(m, s) + " p=" + elem_str(m, e)))
          return false;
      }
    }
    return true;
  });
  return p.result;
}

LemmaResult plane_pair_deletion(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  const auto tri = triads(m);
  for_each_plane(m, 5, [&](ElemSet s) {
    if (triangle_in(m, m.closure(s))) return true;
    for (ElemSet t : tri)
      if (t.subset_of(s)) return true;
    for (int e : s) {
      if (three(del(m, {e}))) continue;
      p.hit();
      const auto rest = s.without(e).elements();
      bool found = false;
      // The three ways of splitting P - p into two pairs.
      for (int k = 1; k <= 3 && !found; ++k) {
        const int a = rest[0], b = rest[k];
        std::vector<int> other;
        for (int i = 1; i <= 3; ++i)
          if (i != k) other.push_back(rest[i]);
        found = three(del(m, {a, other[0]})) && three(del(m, {a, other[1]})) &&
                three(del(m, {b, other[0]})) && three(del(m, {b, other[1]}));
      }
      if (!p.check(found, "P=" + set_str(m, s) + " p=" + elem_str(m, e))) return false;
    }
    return true;
  });
  return p.result;
}

LemmaResult six_point_plane_pair(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  for_each_plane(m, 6, [&](ElemSet s) {
    if (triangle_in(m, m.closure(s))) return true;
    for_each_combination(6, 4, [&](ElemSet local) {
      const ElemSet x = expand(local, s);
      p.hit();
      bool found = false;
      for (int a : x)
        for (int b : x)
          if (a < b && !found) found = three(del(m, {a, b}));
      return p.check(found, "P=" + set_str(m, s) + " X=" + set_str(m, x));
    });
    return !p.failed();
  });
  return p.result;
}

LemmaResult four_cocircuit_contraction(const Matroid& m) {
  Probe p;
  if (!standing(m)) return p.result;
  ElemSet in_triangle;
  for (ElemSet t : triangles(m)) in_triangle |= t;
  for (ElemSet c : m.cocircuits()) {
    if (c.size() != 4 || (c - in_triangle).size() < 2) continue;
    p.hit();
    bool found = false;
    for (int e : c)
      if (!found) found = three(con(m, {e}));
    if (!p.check(found, "C*=" + set_str(m, c))) break;
  }
  return p.result;
}

LemmaResult flan_end(const Matroid& m) {
  Probe p;
  if (m.size() > kSubsetCap || !standing(m)) return p.result;
  ElemSet in_triangle;
  for (ElemSet t : triangles(m)) in_triangle |= t;
  std::vector<FlanRecord> maximal;
  try {
    maximal = flans(m);
  } catch (const MatroidError& err) {
    p.check(false, err.what());
    return p.result;
  }
  const auto orders = flan_orderings(m);
  for (const auto& flan : maximal) {
    const ElemSet set = ElemSet::from(flan.elements);
    if (set.size() < 5 || set == m.ground()) continue;
    for (const auto& order : orders) {
      if (order.size() != flan.elements.size() || ElemSet::from(order) != set) continue;
      for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 5; j <= order.size(); j += 2) {
          const int fi = order[i - 1], fj = order[j - 1];
          if (in_triangle.contains(fi) || in_triangle.contains(fj)) continue;
          p.hit();
          const std::string where = "flan " + set_str(m, set) + " f" + std::to_string(i) + "=" +
                                    elem_str(m, fi) + " f" + std::to_string(j) + "=" +
                                    elem_str(m, fj);
          const Matroid both = con(m, {fi, fj});
          bool ok = three(con(m, {fi})) && three(con(m, {fj})) && si_three(both);
          if (j >= 7 || set.size() == 5) ok = ok && three(both);
          if (!p.check(ok, where)) return p.result;
        }
    }
  }
  return p.result;
}

}  // namespace

const std::vector<LemmaCheck>& lemma_registry() {
  static const std::vector<LemmaCheck> registry{
      {"uncrossing", "X, Y 3-separating: X u Y if |X n Y| >= 2, X n Y if |E - (X u Y)| >= 2",
       uncrossing},
      {"closure-swap", "e in cl(X) iff e not in cl*(Y) for a partition (X, e, Y)", closure_swap},
      {"extend-separation", "X u e is 3-separating iff e in cl(X) or cl*(X)", extend_separation},
      {"exact-separation-element", "x in cl(X - x) or cl*(X - x)", exact_separation_element},
      {"guts-coguts", "X - x exactly 3-separating iff x is a guts or coguts element", guts_coguts},
      {"guts-coguts-disjoint", "cl(X) n cl*(X) n Y is empty", guts_coguts_disjoint},
      {"vertical-separation", "vertical 3-separation (X, z, Y) iff si(M/z) not 3-connected",
       vertical_separation},
      {"segment-removal", "M\\s is 3-connected for s in a segment of at least four elements",
       segment_removal},
      {"bixby", "si(M/e) or co(M\\e) is 3-connected", bixby},
      {"tutte-triangle", "M\\a, M\\b not 3-connected gives a triad with a and one of b, c",
       tutte_triangle},
      {"rank3-cocircuit-simplification",
       "triangle of M/x in cl(C*) - x gives si(M/x) 3-connected", rank3_cocircuit_simplification},
      {"rank3-cocircuit-cosimplification", "x in cl(C* - x) gives co(M\\x) 3-connected",
       rank3_cocircuit_cosimplification},
      {"presingle", "|X n cl(Y)| = |X n cl*(Y)| = 1 when both meet X", presingle},
      {"full-closure-2-separation", "(fcl(X), Y - fcl(X)) is a 2-separation",
       full_closure_2_separation},
      {"fan-ends", "spoke end: co(M\\f) 3-connected, si(M/f) not; rim end: dually", fan_ends},
      {"fan-ends-maximal", "maximal fan: spoke end M\\f, rim end M/f 3-connected",
       fan_ends_maximal},
      {"two-separation-minor", "a side U of a 2-separation has |U n E(N)| <= 1 and keeps N",
       two_separation_minor},
      {"doubly-labelled", "X - cl*(Y) is N-deletable; at most one coclosure element not N-contractible",
       doubly_labelled},
      {"label-switch", "switching labels on a parallel pair of M/c gives an N-labelling",
       label_switch},
      {"grounded-triangle-contraction", "M/x has no N-minor for x in an N-grounded triangle",
       grounded_triangle_contraction},
      {"six-point-plane", "M\\p is 3-connected for p in cl(P) - P", six_point_plane},
      {"plane-with-triad", "M\\p is 3-connected for p in P - T*", plane_with_triad},
      {"plane-pair-deletion", "M\\p_i\\p_j is 3-connected for i in {1,2}, j in {3,4}",
       plane_pair_deletion},
      {"six-point-plane-pair", "some M\\x1\\x2 with x1, x2 in X is 3-connected",
       six_point_plane_pair},
      {"four-cocircuit-contraction", "M/c is 3-connected for some c in C*",
       four_cocircuit_contraction},
      {"flan-end", "M/f_i, M/f_j and si(M/f_i/f_j) are 3-connected", flan_end},
  };
  return registry;
}

RegistryReport run_lemma_registry(const std::vector<CorpusEntry>& corpus,
                                  const std::vector<std::string>& only) {
  RegistryReport report;
  for (const auto& entry : corpus)
    for (const auto& lemma : lemma_registry()) {
      if (!only.empty() && std::find(only.begin(), only.end(), lemma.id) == only.end()) continue;
      const auto start = std::chrono::steady_clock::now();
      LemmaResult r;
      try {
        r = lemma.run(entry.matroid);
      } catch (const MatroidError& err) {
        r.witness = std::string("error: ") + err.what();
      }
      Verdict v;
      v.instance = entry.id;
      v.check = lemma.id;
      v.outcome = !r.witness.empty() ? Outcome::kFail
                  : r.exercised > 0  ? Outcome::kPass
                                     : Outcome::kVacuous;
      v.detail = r.witness.empty() ? std::to_string(r.exercised) + " instances" : r.witness;
      v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
      LemmaStats& s = report.stats[lemma.id];
      s.exercised += r.exercised;
      if (v.outcome == Outcome::kPass) ++s.pass;
      if (v.outcome == Outcome::kFail) ++s.fail;
      if (v.outcome == Outcome::kVacuous) ++s.vacuous;
      report.verdicts.push_back(std::move(v));
    }
  return report;
}

}  // namespace matroidkit
