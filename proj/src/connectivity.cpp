#include "matroidkit/connectivity.hpp"

#include <algorithm>

namespace matroidkit {

int lambda(const Matroid& m, ElemSet x) {
  return m.rank(x) + m.rank(m.ground() - x) - m.rank();
}

SeparationReport describe_separation(const Matroid& m, ElemSet side, int k) {
  SeparationReport rep;
  const ElemSet other = m.ground() - side;
  rep.side = side;
  rep.k = k;
  rep.lambda = lambda(m, side);
  rep.exact = rep.lambda == k - 1;
  rep.vertical = m.rank(side) >= k && m.rank(other) >= k;
  rep.cyclic = m.corank(side) >= k && m.corank(other) >= k;
  for (int e : m.ground()) {
    ElemSet xe = side.without(e), ye = other.without(e);
    if (m.closure(xe).contains(e) && m.closure(ye).contains(e)) rep.guts.insert(e);
    if (m.coclosure(xe).contains(e) && m.coclosure(ye).contains(e)) rep.coguts.insert(e);
  }
  return rep;
}

namespace {

// Calls f(x) for every subset x holding element 0 other than E.
template <typename F>
bool for_each_bipartition(const Matroid& m, F&& f) {
  const int n = m.size();
  if (n < 2) return true;
  const std::uint32_t half = std::uint32_t{1} << (n - 1);
  const std::uint32_t all = m.ground().bits();
  for (std::uint32_t h = 0; h < half; ++h) {
    std::uint32_t x = (h << 1) | 1U;
    if (x == all) continue;
    if (!f(x)) return false;
  }
  return true;
}

}  // namespace

std::vector<SeparationReport> separations(const Matroid& m, int k) {
  const std::uint8_t* rk = m.rank_table();
  const std::uint32_t all = m.ground().bits();
  const int n = m.size();
  std::vector<ElemSet> sides;
  for_each_bipartition(m, [&](std::uint32_t x) {
    int a = std::popcount(x);
    if (a >= k && n - a >= k && rk[x] + rk[all ^ x] - m.rank() <= k - 1)
      sides.push_back(ElemSet(x));
    return true;
  });
  std::sort(sides.begin(), sides.end(), LexLess{});
  std::vector<SeparationReport> out;
  for (ElemSet s : sides) out.push_back(describe_separation(m, s, k));
  return out;
}

bool is_connected(const Matroid& m) {
  const std::uint8_t* rk = m.rank_table();
  const std::uint32_t all = m.ground().bits();
  return for_each_bipartition(
      m, [&](std::uint32_t x) { return rk[x] + rk[all ^ x] - m.rank() != 0; });
}

bool is_3_connected(const Matroid& m) {
  const std::uint8_t* rk = m.rank_table();
  const std::uint32_t all = m.ground().bits();
  const int n = m.size();
  return for_each_bipartition(m, [&](std::uint32_t x) {
    int l = rk[x] + rk[all ^ x] - m.rank();
    if (l == 0) return false;
    int a = std::popcount(x);
    return !(l == 1 && a >= 2 && n - a >= 2);
  });
}

namespace {

bool vertical_pair(const Matroid& m, ElemSet a, ElemSet b) {
  return lambda(m, a) <= 2 && a.size() >= 3 && b.size() >= 3 && m.rank(a) >= 3 &&
         m.rank(b) >= 3;
}

void require_3_connected(const Matroid& m) {
  if (!is_3_connected(m))
    throw MatroidError(ErrorKind::kNotThreeConnected, "matroid is not 3-connected");
}

}  // namespace

bool is_vertical_3_separation(const Matroid& m, ElemSet x, int z, ElemSet y) {
  return vertical_pair(m, x.with(z), y) && vertical_pair(m, x, y.with(z)) &&
         m.closure(x).contains(z) && m.closure(y).contains(z);
}

bool is_cyclic_3_separation(const Matroid& m, ElemSet x, int z, ElemSet y) {
  return is_vertical_3_separation(dual(m), x, z, y);
}

std::vector<ZSeparation> vertical_3_separations(const Matroid& m) {
  require_3_connected(m);
  std::vector<ZSeparation> out;
  for (int z = 0; z < m.size(); ++z) {
    const ElemSet rest = m.ground().without(z);
    if (rest.size() < 6) continue;
    const int first = rest.min();
    const ElemSet others = rest.without(first);
    const std::uint32_t count = std::uint32_t{1} << others.size();
    for (std::uint32_t s = 0; s < count; ++s) {
      ElemSet x = expand(ElemSet(s), others).with(first);
      ElemSet y = rest - x;
      if (x.size() < 3 || y.size() < 3) continue;
      if (is_vertical_3_separation(m, x, z, y)) out.push_back({x, z, y});
    }
  }
  return out;
}

std::vector<ZSeparation> cyclic_3_separations(const Matroid& m) {
  require_3_connected(m);
  return vertical_3_separations(dual(m));
}

ElemSet full_closure(const Matroid& m, ElemSet x) {
  while (true) {
    ElemSet y = m.coclosure(m.closure(x));
    if (y == x) return x;
    x = y;
  }
}

GutsClass classify_guts(const Matroid& m, ElemSet x_side, ElemSet y_side, int x) {
  if (x_side.intersects(y_side) || (x_side | y_side) != m.ground() ||
      !x_side.contains(x) || x_side.size() < 3 || !is_exactly_3_separating(m, x_side))
    throw MatroidError(ErrorKind::kBadPartition,
                       "expected an exactly 3-separating partition with x in a side of size >= 3");
  const ElemSet rest = x_side.without(x);
  if (m.closure(rest).contains(x) && m.closure(y_side).contains(x)) return GutsClass::kGuts;
  if (m.coclosure(rest).contains(x) && m.coclosure(y_side).contains(x))
    return GutsClass::kCoguts;
  return GutsClass::kNeither;
}

Blocking blocks(const Matroid& m, int d, ElemSet x) {
  const ElemSet e_minus_d = m.ground().without(d);
  if (x.contains(d) || !x.subset_of(m.ground()) || m.is_coloop(d))
    throw MatroidError(ErrorKind::kBadInput, "X must avoid d and d must not be a coloop");
  Matroid md = delete_set(m, ElemSet::single(d));
  const ElemSet xd = compress(x, e_minus_d);
  if (!is_3_connected(md) || !is_exactly_3_separating(md, xd))
    throw MatroidError(ErrorKind::kBadInput,
                       "M\\d must be 3-connected with X exactly 3-separating");
  Blocking result = Blocking::kNotBlocked;
  if (lambda(m, x) > 2)
    result = lambda(m, x.with(d)) > 2 ? Blocking::kFullyBlocked : Blocking::kBlocked;
  const bool outside_both =
      !m.closure(x).contains(d) && !m.closure(e_minus_d - x).contains(d);
  if (outside_both != (result == Blocking::kFullyBlocked))
    throw MatroidError(ErrorKind::kBadInput, "blocking criteria disagree");
  return result;
}

bool is_path_of_3_separations(const Matroid& m, const std::vector<ElemSet>& parts) {
  ElemSet seen;
  for (ElemSet p : parts) {
    if (p.intersects(seen)) return false;
    seen |= p;
  }
  if (seen != m.ground()) return false;
  ElemSet prefix;
  for (ElemSet p : parts) {
    prefix |= p;
    if (lambda(m, prefix) > 2) return false;
  }
  return true;
}

}  // namespace matroidkit
