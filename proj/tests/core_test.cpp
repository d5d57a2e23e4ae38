#include <random>

#include "doctest.h"
#include "matroidkit/builders.hpp"
#include "matroidkit/matroid.hpp"
#include "oracle.hpp"

using namespace matroidkit;

namespace {

std::vector<ElemSet> two_subsets_of_four() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

std::vector<Matroid> small_catalog() {
  return {uniform(2, 4), uniform(3, 6), uniform(1, 3), fano(), non_fano(), mk4(),
          wheel(4),      whirl(3),      spike(3),      spike(4)};
}

}  // namespace

TEST_CASE("validate accepts U24 and rejects broken families") {
  Matroid u = validate(two_subsets_of_four(), 4, {"a", "b", "c", "d"});
  CHECK(u.rank() == 2);
  CHECK(u.bases().size() == 6);

  try {
    validate({{0, 1}, {2, 3}}, 4, {"a", "b", "c", "d"});
    FAIL("expected AxiomViolation");
  } catch (const MatroidError& err) {
    CHECK(err.kind() == ErrorKind::kAxiomViolation);
    CHECK(std::string(err.what()) == "basis exchange fails for B1={a,b} B2={c,d} x=a");
  }
  CHECK(!oracle::exchange_holds({{0, 1}, {2, 3}}));

  try {
    validate({}, 3);
    FAIL("expected EmptyFamily");
  } catch (const MatroidError& err) {
    CHECK(err.kind() == ErrorKind::kEmptyFamily);
  }
  try {
    validate({{0}, {1, 2}}, 3);
    FAIL("expected CardinalityMismatch");
  } catch (const MatroidError& err) {
    CHECK(err.kind() == ErrorKind::kCardinalityMismatch);
  }
}

TEST_CASE("validate agrees with the brute-force exchange check on random families") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    int r = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<ElemSet> family;
    for_each_combination(n, r, [&](ElemSet s) {
      if (rng() % 4 != 0) family.push_back(s);
      return true;
    });
    if (family.empty()) continue;
    oracle::Family plain;
    for (auto s : family) plain.push_back(s.elements());
    bool expected = oracle::exchange_holds(plain);
    bool accepted = true;
    try {
      validate(family, n);
    } catch (const MatroidError& err) {
      CHECK(err.kind() == ErrorKind::kAxiomViolation);
      accepted = false;
    }
    CHECK(accepted == expected);
  }
}

TEST_CASE("Fano plane from the 28 non-line triples") {
  std::vector<ElemSet> lines{{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                             {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  std::vector<ElemSet> bases;
  for_each_combination(7, 3, [&](ElemSet s) {
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
    return true;
  });
  CHECK(bases.size() == 28);
  Matroid f7 = validate(bases, 7);
  CHECK(f7 == fano());
}

TEST_CASE("rank, closure and coclosure") {
  Matroid u = uniform(2, 4);
  CHECK(u.rank(ElemSet{0, 1, 2}) == 2);
  CHECK(u.rank(ElemSet()) == 0);
  Matroid f7 = fano();
  CHECK(f7.rank(ElemSet{0, 1, 3}) == 2);
  CHECK(f7.closure(ElemSet{0, 1}) == ElemSet({0, 1, 3}));
  CHECK(f7.closure(f7.ground()) == f7.ground());

  // Expected coclosure derived from the brute-force dual rank.
  auto plain = oracle::bases_of(u);
  oracle::Set expected;
  int base = oracle::corank(plain, 4, {0, 1, 2});
  for (int e = 0; e < 4; ++e) {
    oracle::Set y{0, 1, 2};
    if (e == 3) y.push_back(e);
    if (oracle::corank(plain, 4, y) == base) expected.push_back(e);
  }
  CHECK(expected == oracle::Set{0, 1, 2, 3});
  CHECK(u.coclosure(ElemSet{0, 1, 2}) == ElemSet({0, 1, 2, 3}));
}

TEST_CASE("rank table matches the brute-force rank on the catalog") {
  for (const Matroid& m : small_catalog()) {
    auto plain = oracle::bases_of(m);
    for (const auto& s : oracle::all_subsets(m.size())) {
      ElemSet x = ElemSet::from(s);
      REQUIRE(m.rank(x) == oracle::rank(plain, s));
      CHECK(m.corank(x) == oracle::corank(plain, m.size(), s));
      CHECK(m.closure(x) == ElemSet::from(oracle::closure(plain, m.size(), s)));
      // closure is extensive and idempotent
      CHECK(x.subset_of(m.closure(x)));
      CHECK(m.closure(m.closure(x)) == m.closure(x));
      CHECK(m.coclosure(m.coclosure(x)) == m.coclosure(x));
    }
  }
}

TEST_CASE("closure is monotone") {
  Matroid m = wheel(4);
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    ElemSet a(rng() & m.ground().bits());
    ElemSet b = a | ElemSet(rng() & m.ground().bits());
    CHECK(m.closure(a).subset_of(m.closure(b)));
    CHECK(m.coclosure(a).subset_of(m.coclosure(b)));
  }
}

TEST_CASE("duality") {
  CHECK(dual(uniform(2, 4)) == uniform(2, 4));
  Matroid f7s = dual(fano());
  CHECK(f7s.bases().size() == 28);
  CHECK(f7s.rank() == 4);
  CHECK(is_isomorphic(mk4(), dual(mk4())).has_value());
  for (const Matroid& m : small_catalog()) {
    CHECK(dual(dual(m)) == m);
    CHECK(dual(dual(m)).labels() == m.labels());
    CHECK(dual(m).circuits() == m.cocircuits());
  }
}

TEST_CASE("deletion and contraction") {
  Matroid u = uniform(2, 4);
  CHECK(delete_set(u, ElemSet{0}) == uniform(2, 3));
  CHECK(contract_set(u, ElemSet{0}) == uniform(1, 3));
  CHECK(contract_set(u, ElemSet{0}) == dual(delete_set(dual(u), ElemSet{0})));
  CHECK_THROWS_AS(delete_set(u, u.ground()), MatroidError);

  Matroid w = wheel(4);
  Matroid d = delete_set(w, ElemSet{2});
  CHECK(d.labels() == std::vector<std::string>{"s1", "r1", "r2", "s3", "r3", "s4", "r4"});

  // M/C\D = M\D/C after identical relabelling
  std::mt19937 rng(11);
  for (const Matroid& m : small_catalog()) {
    for (int i = 0; i < 20; ++i) {
      ElemSet c(rng() & m.ground().bits());
      ElemSet d2 = ElemSet(rng() & m.ground().bits()) - c;
      if ((c | d2) == m.ground()) continue;
      Matroid a = minor(m, c, d2);
      ElemSet kept_after_delete = m.ground() - d2;
      Matroid b = contract_set(delete_set(m, d2), compress(c, kept_after_delete));
      CHECK(a == b);
      CHECK(a.labels() == b.labels());
    }
  }
}

TEST_CASE("circuits and cocircuits") {
  Matroid u = uniform(2, 4);
  CHECK(u.circuits() == std::vector<ElemSet>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  Matroid f7 = fano();
  int triangles = 0, quads = 0;
  for (auto c : f7.circuits()) {
    if (c.size() == 3) ++triangles;
    if (c.size() == 4) ++quads;
  }
  CHECK(triangles == 7);
  CHECK(quads == 7);
  CHECK(f7.circuits().size() == 14);
  for (auto c : f7.circuits())
    if (c.size() == 4) CHECK(f7.is_circuit(f7.ground() - c));

  for (const Matroid& m : small_catalog()) {
    auto expected = oracle::circuits(oracle::bases_of(m), m.size());
    std::vector<oracle::Set> got;
    for (auto c : m.circuits()) got.push_back(c.elements());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    for (auto c : m.circuits())
      for (auto d : m.cocircuits()) CHECK((c & d).size() != 1);
  }
}

TEST_CASE("simplification") {
  Matroid u = uniform(2, 4);
  Matroid p = parallel_add(u, 0, "a2");
  Reduction s = simplify(p);
  CHECK(s.matroid == u);
  CHECK(s.representative == std::vector<int>{0, 1, 2, 3, 0});
  CHECK(simplify(fano()).matroid == fano());

  Matroid q = series_add(u, 1, "b2");
  Reduction cs = cosimplify(q);
  CHECK(cs.matroid == u);
  CHECK(cs.representative[4] == 1);

  Matroid w = wheel(4);
  // s1 ends a fan s1 r1 s2 ... of the wheel; co(M\s1) is 3-connected.
  Reduction c = cosimplify(delete_set(w, ElemSet{0}));
  CHECK(c.matroid.size() < 7);
  CHECK(oracle::three_connected(oracle::bases_of(c.matroid), c.matroid.size()));
}

TEST_CASE("isomorphism") {
  Matroid f7 = fano();
  Matroid shuffled = reorder(f7, {3, 6, 0, 5, 1, 4, 2});
  auto w = is_isomorphic(f7, shuffled);
  REQUIRE(w.has_value());
  for (auto b : f7.bases()) {
    ElemSet image;
    for (int e : b) image.insert(w->mapping[e]);
    CHECK(shuffled.is_basis(image));
  }
  CHECK(!is_isomorphic(f7, non_fano()).has_value());
  CHECK(is_isomorphic(mk4(), dual(mk4())).has_value());
  CHECK(is_isomorphic(wheel(3), mk4()).has_value());
  CHECK(!is_isomorphic(wheel(3), whirl(3)).has_value());
}

TEST_CASE("connectivity function formulas agree") {
  for (const Matroid& m : small_catalog()) {
    for (std::uint32_t x = 0; x < (1u << m.size()); ++x) {
      ElemSet s(x);
      int a = m.rank(s) + m.rank(m.ground() - s) - m.rank();
      int b = m.rank(s) + m.corank(s) - s.size();
      CHECK(a == b);
    }
  }
}
