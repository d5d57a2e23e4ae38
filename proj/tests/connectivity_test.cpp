#include <algorithm>

#include "doctest.h"
#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "oracle.hpp"

using namespace matroidkit;

namespace {

std::vector<Matroid> catalog() {
  return {uniform(2, 4), uniform(3, 6), fano(), non_fano(), mk4(),
          wheel(4),      whirl(4),      spike(3), spike(4)};
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<ElemSet> bases;
  for (auto x : a.bases())
    for (auto y : b.bases()) bases.push_back(ElemSet(x.bits() | (y.bits() << a.size())));
  return validate(bases, a.size() + b.size());
}

bool has_side(const std::vector<SeparationReport>& reps, ElemSet s) {
  return std::any_of(reps.begin(), reps.end(), [&](const auto& r) { return r.side == s; });
}

}  // namespace

TEST_CASE("lambda") {
  Matroid u = uniform(2, 4);
  CHECK(lambda(u, ElemSet()) == 0);
  for_each_combination(4, 2, [&](ElemSet x) {
    CHECK(lambda(u, x) == 2);
    return true;
  });
  for (const Matroid& m : catalog()) {
    auto plain = oracle::bases_of(m);
    Matroid d = dual(m);
    for (std::uint32_t x = 0; x < (1u << m.size()); ++x) {
      ElemSet s(x);
      REQUIRE(lambda(m, s) == oracle::lambda(plain, m.size(), s.elements()));
      CHECK(lambda(m, s) == lambda(m, m.ground() - s));
      CHECK(lambda(m, s) == lambda(d, s));
    }
  }
}

TEST_CASE("separations") {
  CHECK(separations(uniform(2, 4), 2).empty());

  Matroid p = parallel_add(uniform(2, 4), 0, "a2");
  auto two = separations(p, 2);
  CHECK(has_side(two, ElemSet{0, 4}));
  for (const auto& r : two) {
    CHECK(r.side.contains(0));
    CHECK(r.lambda <= 1);
  }

  Matroid w = wheel(3);
  auto three = separations(w, 3);
  int triangles = 0;
  for (auto c : w.circuits()) {
    if (c.size() != 3) continue;
    ++triangles;
    CHECK((has_side(three, c) || has_side(three, w.ground() - c)));
  }
  CHECK(triangles == 4);
  for (const auto& r : three) {
    CHECK(r.exact);
    CHECK(r.lambda == 2);
  }
}

TEST_CASE("3-connectivity") {
  CHECK(is_3_connected(fano()));
  CHECK(is_3_connected(uniform(2, 4)));
  CHECK(!is_3_connected(direct_sum(uniform(2, 3), uniform(2, 3))));
  CHECK(!is_connected(direct_sum(uniform(2, 3), uniform(2, 3))));
  CHECK(!is_3_connected(series_add(uniform(2, 4), 1, "b2")));
  for (const Matroid& m : catalog()) {
    bool expected = oracle::three_connected(oracle::bases_of(m), m.size());
    CHECK(is_3_connected(m) == expected);
    CHECK(is_3_connected(m) == (separations(m, 1).empty() && separations(m, 2).empty()));
  }
}

TEST_CASE("vertical 3-separations") {
  CHECK(vertical_3_separations(uniform(3, 6)).empty());
  CHECK_THROWS_AS(vertical_3_separations(series_add(uniform(2, 4), 1, "b2")), MatroidError);

  // Contracting a spoke of a wheel leaves two parallel pairs whose
  // simplification has series pairs; contracting a rim element leaves M(K4).
  Matroid w = wheel(4);
  ElemSet guts;
  for (const auto& v : vertical_3_separations(w)) {
    CHECK(v.x.contains((w.ground().without(v.z)).min()));
    guts.insert(v.z);
  }
  CHECK(guts == elements(w, {"s1", "s2", "s3", "s4"}));

  // A vertical 3-separation with z in the guts exists iff si(M/z) is not
  // 3-connected.
  for (const Matroid& m : {wheel(4), whirl(4), spike(4), uniform(3, 7), dual(spike(4))}) {
    if (!is_3_connected(m)) continue;
    auto seps = vertical_3_separations(m);
    for (int z = 0; z < m.size(); ++z) {
      bool has = std::any_of(seps.begin(), seps.end(), [&](const auto& v) { return v.z == z; });
      bool si_bad = !is_3_connected(simplify(contract_set(m, ElemSet::single(z))).matroid);
      CHECK(has == si_bad);
    }
  }

  Matroid d = dual(w);
  auto cyc = cyclic_3_separations(w);
  CHECK(cyc.size() == vertical_3_separations(d).size());
  for (const auto& c : cyc) CHECK(is_cyclic_3_separation(w, c.x, c.z, c.y));
}

TEST_CASE("full closure") {
  Matroid k4 = mk4();
  CHECK(full_closure(k4, ElemSet{0, 1, 2}) == k4.ground());
  CHECK(full_closure(k4, k4.ground()) == k4.ground());
  CHECK(full_closure(k4, ElemSet()) == ElemSet());
  for (const Matroid& m : catalog()) {
    for (std::uint32_t x = 0; x < (1u << m.size()); x += 7) {
      ElemSet f = full_closure(m, ElemSet(x));
      CHECK(m.closure(f) == f);
      CHECK(m.coclosure(f) == f);
      CHECK(ElemSet(x).subset_of(f));
    }
  }
}

TEST_CASE("guts and coguts") {
  Matroid w = wheel(4);
  int guts = 0, coguts = 0;
  for (std::uint32_t bits = 1; bits < (1u << w.size()) - 1; ++bits) {
    ElemSet x(bits);
    if (x.size() < 3 || !is_exactly_3_separating(w, x)) continue;
    ElemSet y = w.ground() - x;
    for (int e : x) {
      ElemSet rest = x.without(e);
      bool g = w.closure(rest).contains(e) && w.closure(y).contains(e);
      bool c = w.coclosure(rest).contains(e) && w.coclosure(y).contains(e);
      CHECK(!(g && c));
      GutsClass k = classify_guts(w, x, y, e);
      if (k == GutsClass::kGuts) ++guts;
      if (k == GutsClass::kCoguts) ++coguts;
      CHECK((k == GutsClass::kNeither) == (!g && !c));
      // x is guts or coguts exactly when moving it keeps the partition exact
      if (rest.size() >= 1)
        CHECK((k != GutsClass::kNeither) == (lambda(w, rest) == 2));
    }
  }
  CHECK(guts > 0);
  CHECK(coguts > 0);
  CHECK_THROWS_AS(classify_guts(w, ElemSet{0, 1}, w.ground() - ElemSet{0, 1}, 0), MatroidError);
}

TEST_CASE("blocking") {
  Matroid base = wheel(4);
  Matroid m = principal_extension(base, base.ground(), "d");
  const int d = 8;
  int fully = 0;
  for (std::uint32_t bits = 1; bits < (1u << base.size()) - 1; ++bits) {
    ElemSet x(bits);
    if (!is_exactly_3_separating(base, x)) continue;
    ElemSet y = base.ground() - x;
    Blocking b = blocks(m, d, x);
    if (m.closure(x).contains(d)) CHECK(b != Blocking::kFullyBlocked);
    if (lambda(m, x) <= 2) CHECK(b == Blocking::kNotBlocked);
    if (base.rank(x) < base.rank() && base.rank(y) < base.rank()) {
      CHECK(b == Blocking::kFullyBlocked);
      ++fully;
    }
  }
  CHECK(fully > 0);
  CHECK_THROWS_AS(blocks(m, d, ElemSet{0, d}), MatroidError);
  CHECK_THROWS_AS(blocks(m, d, ElemSet{0}), MatroidError);
}

TEST_CASE("paths of 3-separations") {
  Matroid w = wheel(4);
  // s1 r1 s2 r2 s3 r3 s4 r4: a fan gives a path with singleton steps
  std::vector<ElemSet> parts;
  for (int e = 0; e < 8; ++e) parts.push_back(ElemSet::single(e));
  CHECK(is_path_of_3_separations(w, parts));
  CHECK(!is_path_of_3_separations(w, {ElemSet{0, 1}}));
  CHECK(!is_path_of_3_separations(uniform(3, 8), {ElemSet{0, 1}, ElemSet{2, 3}, ElemSet{4, 5, 6, 7}}));
}
