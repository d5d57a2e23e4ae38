#include <algorithm>
#include <random>

#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/harness.hpp"

namespace matroidkit {

namespace {

Matroid chorded_wheel(int r, int j) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % r + 1);
  }
  edges.emplace_back(1, j);
  return graphic(r + 1, edges);
}

// A U_{3,5}-plane P = p1..p4,p in a rank-5 matroid whose deletion of p has a
// 2-separation (A, B) with p1,p2 in A and p3,p4 in B.
Matroid plane_pair_fixture() {
  return vector_matroid({{0, 1, 0, 0, 0},
                         {1, 1, 0, 0, 0},
                         {0, 0, 0, 1, 0},
                         {1, 0, 0, 1, 0},
                         {3, 1, 0, 1, 0},
                         {1, 2, 5, 0, 0},
                         {2, 7, 3, 0, 0},
                         {5, 1, 9, 0, 0},
                         {1, 0, 0, 3, 7},
                         {4, 0, 0, 9, 2},
                         {6, 0, 0, 1, 8}},
                        101, {"p1", "p2", "p3", "p4", "p", "a1", "a2", "a3", "b1", "b2", "b3"});
}

// A U_{3,5}-plane containing the triad {p3,p4,p5}.
Matroid plane_triad_fixture() {
  return vector_matroid({{1, 0, 0, 0},
                         {0, 1, 0, 0},
                         {0, 0, 1, 0},
                         {1, 1, 1, 0},
                         {1, 2, 3, 0},
                         {0, 0, 0, 1},
                         {1, 1, 0, 1},
                         {1, 3, 0, 5},
                         {2, 1, 0, 7}},
                        101, {"p1", "p2", "p3", "p4", "p5", "h1", "h2", "h3", "h4"});
}

// Dual of a graph on six vertices with a maximal flan of five elements
// avoiding triangles at both ends.
Matroid flan_end_fixture() {
  return dual(graphic(6, {{0, 2}, {0, 5}, {2, 3}, {4, 5}, {0, 1}, {0, 3},
                          {2, 4}, {1, 3}, {3, 5}, {0, 4}, {2, 5}, {1, 4}}));
}

// Two copies of K4 glued along an edge, with the edge removed.
Matroid two_sum_k4() {
  return graphic(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

// 2-sum of two Fano planes over GF(2).
Matroid two_sum_fano() {
  std::vector<std::vector<int>> cols;
  for (int v = 1; v < 8; ++v) {
    if (v == 4) continue;
    cols.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1, 0, 0});
  }
  for (int v = 1; v < 8; ++v) {
    if (v == 1) continue;
    cols.push_back({0, 0, v & 1, (v >> 1) & 1, (v >> 2) & 1});
  }
  return vector_matroid(cols, 2);
}

}  // namespace

std::vector<CorpusEntry> catalog(int max_elements) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string id, const Matroid& m) {
    if (m.size() <= max_elements) out.push_back({std::move(id), m});
  };
  for (int n = 2; n <= 9; ++n)
    for (int r = 1; r <= std::min(4, n - 1); ++r)
      add("U" + std::to_string(r) + std::to_string(n), uniform(r, n));
  for (int r = 3; r <= 5; ++r) {
    add("wheel" + std::to_string(r), wheel(r));
    add("whirl" + std::to_string(r), whirl(r));
  }
  add("fano", fano());
  add("non-fano", non_fano());
  add("fano-dual", dual(fano()));
  add("non-fano-dual", dual(non_fano()));
  add("spike3", spike(3));
  add("spike4", spike(4));
  add("spike-construction", spike_construction(4));
  add("spike-construction-free-tip", spike_construction(4, true));
  add("twisted-construction", twisted_construction());
  add("elongated-quad-example", elongated_quad_example());
  add("skew-whiff-example", skew_whiff_example());
  add("twisted-cube-example", twisted_cube_example());
  add("chorded-wheel-5-3", chorded_wheel(5, 3));
  add("chorded-wheel-6-3", chorded_wheel(6, 3));
  add("plane-pair", plane_pair_fixture());
  add("plane-triad", plane_triad_fixture());
  add("flan-end", flan_end_fixture());
  add("two-sum-k4", two_sum_k4());
  add("two-sum-fano", two_sum_fano());
  return out;
}

std::vector<CorpusEntry> random_sparse_paving(std::uint64_t seed, const CorpusLimits& limits) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  const int hi = std::min(limits.random_max_n, limits.max_elements);
  if (hi < limits.random_min_n) return out;
  std::uniform_int_distribution<int> size_dist(limits.random_min_n, hi);
  for (int attempt = 0; static_cast<int>(out.size()) < limits.random_count && attempt < 1000;
       ++attempt) {
    const int n = size_dist(rng);
    const int r = n / 2;
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i;
    std::vector<ElemSet> hyperplanes;
    for (int tries = 0; tries < 4 * n; ++tries) {
      std::shuffle(ground.begin(), ground.end(), rng);
      const ElemSet h = ElemSet::from(std::vector<int>(ground.begin(), ground.begin() + r));
      const bool ok = std::all_of(hyperplanes.begin(), hyperplanes.end(),
                                  [&](ElemSet g) { return (g & h).size() <= r - 2; });
      if (ok && h.size() == r) hyperplanes.push_back(h);
    }
    std::sort(hyperplanes.begin(), hyperplanes.end(), LexLess{});
    Matroid m = paving(r, n, hyperplanes);
    if (!is_3_connected(m)) continue;
    out.push_back({"sparse-paving-" + std::to_string(out.size()), m});
  }
  return out;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, const CorpusLimits& limits) {
  std::vector<CorpusEntry> out = catalog(limits.max_elements);
  for (auto& e : random_sparse_paving(seed, limits)) out.push_back(std::move(e));
  return out;
}

const std::vector<CorpusEntry>& minor_palette() {
  static const std::vector<CorpusEntry> palette{
      {"U24", uniform(2, 4)},   {"U25", uniform(2, 5)},        {"U35", uniform(3, 5)},
      {"wheel3", wheel(3)},     {"whirl3", whirl(3)},          {"fano", fano()},
      {"non-fano", non_fano()}, {"fano-dual", dual(fano())},   {"non-fano-dual", dual(non_fano())}};
  return palette;
}

bool is_wheel_or_whirl(const Matroid& m) {
  const int r = m.rank();
  if (r == 2 && m.size() == 4) return m == uniform(2, 4);
  if (r < 3 || m.size() != 2 * r) return false;
  return is_isomorphic(m, wheel(r)).has_value() || is_isomorphic(m, whirl(r)).has_value();
}

}  // namespace matroidkit
