#include <algorithm>

#include "doctest.h"
#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/structures.hpp"
#include "oracle.hpp"

using namespace matroidkit;

namespace {

// Wheel with r spokes plus the chord joining rim vertices 1 and j.
Matroid chorded_wheel(int r, int j) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % r + 1);
  }
  edges.emplace_back(1, j);
  return graphic(r + 1, edges);
}

std::vector<ElemSet> sets_of_size(const oracle::Family& family, std::size_t k) {
  std::vector<ElemSet> out;
  for (const auto& s : family)
    if (s.size() == k) out.push_back(ElemSet::from(s));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

const std::vector<SeparatorKind> kAllKinds{SeparatorKind::kSpikeLike,
                                           SeparatorKind::kElongatedQuad,
                                           SeparatorKind::kSkewWhiff,
                                           SeparatorKind::kTwistedCubeLike};

std::vector<std::string> role_labels(const Matroid& m, const StructureReport& r) {
  std::vector<std::string> out;
  for (int e : r.labelling) out.push_back(m.label(e));
  return out;
}

}  // namespace

TEST_CASE("triangles, triads, segments and quads") {
  for (const Matroid& m : {fano(), wheel(3), wheel(4), spike(4), non_fano()}) {
    auto plain = oracle::bases_of(m);
    auto circ = oracle::circuits(plain, m.size());
    auto cocirc = oracle::circuits(oracle::dual_bases(plain, m.size()), m.size());
    CHECK(triangles(m) == sets_of_size(circ, 3));
    CHECK(triads(m) == sets_of_size(cocirc, 3));
    std::vector<ElemSet> q;
    for (ElemSet c : sets_of_size(circ, 4)) {
      auto co = sets_of_size(cocirc, 4);
      if (std::find(co.begin(), co.end(), c) != co.end()) q.push_back(c);
    }
    CHECK(quads(m) == q);
  }
  CHECK(triangles(fano()).size() == 7);
  CHECK(triads(fano()).empty());
  CHECK(triangles(wheel(3)).size() == 4);
  CHECK(triads(wheel(3)).size() == 4);
  Matroid s = spike(4);
  CHECK(quads(s).size() == 6);

  CHECK(segments(fano()).size() == 7);
  CHECK(segments(uniform(2, 5)) == std::vector<ElemSet>{ElemSet::full(5)});
  CHECK(cosegments(uniform(3, 5)) == std::vector<ElemSet>{ElemSet::full(5)});
  CHECK(segments(uniform(3, 6)).empty());
  Matroid on_line = principal_extension(fano(), triangles(fano())[0], "t");
  auto seg = segments(on_line);
  CHECK(std::count_if(seg.begin(), seg.end(), [](ElemSet x) { return x.size() == 4; }) == 1);
}

TEST_CASE("fans") {
  for (const Matroid& m : {wheel(3), wheel(4), whirl(4), wheel(5)}) {
    auto f = fans(m);
    REQUIRE(f.size() == 1);
    CHECK(ElemSet::from(f[0].elements) == m.ground());
    CHECK(is_fan_ordering(m, f[0].elements));
  }
  auto w = fans(wheel(4));
  Matroid wheel4 = wheel(4);
  for (std::size_t i = 0; i < w[0].elements.size(); ++i) {
    const bool spoke = wheel4.label(w[0].elements[i])[0] == 's';
    CHECK(spoke == (w[0].roles[i] == FanRole::kSpoke));
  }

  // A chorded wheel: several proper maximal fans.
  Matroid m = chorded_wheel(5, 3);
  auto records = fans(m);
  CHECK(records.size() > 1);
  for (const auto& r : records) {
    CHECK(is_fan_ordering(m, r.elements));
    for (const auto& other : records)
      if (&other != &r)
        CHECK(!ElemSet::from(r.elements).subset_of(ElemSet::from(other.elements)));
    // Lexicographically least among orderings of the same set.
    std::vector<int> perm = r.elements;
    std::sort(perm.begin(), perm.end());
    do {
      if (is_fan_ordering(m, perm)) {
        CHECK(!(perm < r.elements));
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  CHECK(!is_fan_ordering(wheel4, {0, 2, 4}));
  CHECK_THROWS_AS(fans(validate({{0, 1}}, 3)), MatroidError);
}

TEST_CASE("flans") {
  Matroid w = wheel(4);
  // Fans of length at least four that begin with a triad are flans.
  std::vector<int> order{1, 2, 3, 4, 5, 6, 7, 0};
  REQUIRE(is_fan_ordering(w, order));
  REQUIRE(w.is_cocircuit(ElemSet{1, 2, 3}));
  for (std::size_t k = 4; k <= order.size(); ++k)
    CHECK(is_flan_ordering(w, std::vector<int>(order.begin(), order.begin() + k)));

  CHECK(flans(uniform(3, 6)).empty());
  CHECK(flan_orderings(uniform(3, 6)).empty());

  // A flan of eight elements with r(M) = r(E - F) + 3.
  Matroid m = chorded_wheel(6, 3);
  bool found = false;
  for (const auto& f : flans(m)) {
    CHECK(is_flan_ordering(m, f.elements));
    const ElemSet set = ElemSet::from(f.elements);
    if (set.size() == 8 && m.rank() == m.rank(m.ground() - set) + 3) found = true;
    ElemSet prefix;
    for (int e : f.elements) {
      prefix.insert(e);
      CHECK(lambda(m, prefix) <= 2);
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(flans(validate({{0, 1}}, 3)), MatroidError);
}

TEST_CASE("spike-like separators") {
  Matroid m = spike_construction(4);
  std::vector<std::string> legs{"x2", "y2", "x3", "y3", "x4", "y4"};
  auto r = detect_spike_like(m, elements(m, legs));
  REQUIRE(r.has_value());
  REQUIRE(r->legs.size() == 3);
  CHECK(r->legs[0] == elements(m, {"x2", "y2"}));
  CHECK(r->legs[2] == elements(m, {"x4", "y4"}));
  CHECK(r->circuits.size() == 3);
  for (ElemSet q : r->circuits) {
    CHECK(m.is_circuit(q));
    CHECK(m.is_cocircuit(q));
  }

  // Exactly 3-separating but without quads.
  Matroid u = uniform(4, 8);
  CHECK(!detect_spike_like(u, ElemSet{0, 1, 2, 3, 4, 5}));
  int odd = 0;
  for_each_combination(m.size(), 5, [&](ElemSet p) {
    if (!is_exactly_3_separating(m, p)) return true;
    ++odd;
    CHECK(!detect_spike_like(m, p));
    return true;
  });
  CHECK(odd > 0);
  CHECK_THROWS_AS(detect_spike_like(u, ElemSet{0, 1, 2, 3, 4}), MatroidError);
}

TEST_CASE("six-element separators on the fixtures") {
  struct Case {
    Matroid m;
    SeparatorKind kind;
    std::vector<std::string> p;
  };
  std::vector<Case> cases{
      {elongated_quad_example(), SeparatorKind::kElongatedQuad, {"p1", "p2", "q1", "q2", "q3", "q4"}},
      {skew_whiff_example(), SeparatorKind::kSkewWhiff, {"s1", "s2", "t1", "t2", "u1", "u2"}},
      {twisted_cube_example(), SeparatorKind::kTwistedCubeLike, {"p1", "p2", "q1", "q2", "s1", "s2"}},
      {twisted_construction(), SeparatorKind::kTwistedCubeLike, {"p1", "p2", "q1", "q2", "s1", "s2"}}};
  for (const auto& c : cases) {
    REQUIRE(is_3_connected(c.m));
    const ElemSet p = elements(c.m, c.p);
    for (SeparatorKind k : kAllKinds) {
      auto r = detect(k, c.m, p);
      CHECK(r.has_value() == (k == c.kind));
      if (!r) continue;
      CHECK(role_labels(c.m, *r) == c.p);
      for (ElemSet x : r->circuits) CHECK(c.m.is_circuit(x));
      for (ElemSet x : r->cocircuits) CHECK(c.m.is_cocircuit(x));
    }
  }

  Matroid eq = elongated_quad_example();
  try {
    detect_elongated_quad(eq, elements(eq, {"q1", "q2", "q3", "q4"}));
    FAIL("expected BadSize");
  } catch (const MatroidError& err) {
    CHECK(err.kind() == ErrorKind::kBadSize);
  }
  Matroid tc = twisted_construction();
  const ElemSet loose = elements(tc, {"p1", "q1", "s1", "t1", "a", "b"});
  REQUIRE(!is_exactly_3_separating(tc, loose));
  try {
    detect_skew_whiff(tc, loose);
    FAIL("expected NotExactlyThreeSeparating");
  } catch (const MatroidError& err) {
    CHECK(err.kind() == ErrorKind::kNotExactlyThreeSeparating);
  }

  // The elongated-quad lists are self-dual; the twisted cube-like ones are not.
  const ElemSet q = elements(eq, {"p1", "p2", "q1", "q2", "q3", "q4"});
  CHECK(detect_elongated_quad(dual(eq), q).has_value());
  const ElemSet x = elements(tc, {"p1", "p2", "q1", "q2", "s1", "s2"});
  for (SeparatorKind k : kAllKinds) CHECK(!detect(k, dual(tc), x).has_value());
  CHECK(detect_twisted_cube_like(dual(dual(tc)), x).has_value());
}

TEST_CASE("the detectors are mutually exclusive") {
  for (const Matroid& m : {elongated_quad_example(), skew_whiff_example(), twisted_cube_example(),
                           twisted_construction(), spike_construction(4)}) {
    for_each_combination(m.size(), 6, [&](ElemSet p) {
      if (!is_exactly_3_separating(m, p)) return true;
      int hits = 0;
      for (SeparatorKind k : kAllKinds)
        if (detect(k, m, p)) ++hits;
      CHECK(hits <= 1);
      return true;
    });
  }
}
