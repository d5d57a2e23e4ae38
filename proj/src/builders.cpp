#include "matroidkit/builders.hpp"

#include <algorithm>
#include <numeric>

namespace matroidkit {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxElements)
    throw MatroidError(ErrorKind::kBadParams,
                       "ground set size " + std::to_string(n) + " outside 0..24");
}

void check_new_label(const Matroid& m, const std::string& label) {
  if (label.empty() || m.find_label(label))
    throw MatroidError(ErrorKind::kBadParams, "label '" + label + "' is empty or in use");
}

std::vector<ElemSet> all_subsets_of_size(int n, int r) {
  std::vector<ElemSet> out;
  for_each_combination(n, r, [&](ElemSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<std::string> append_label(std::vector<std::string> labels, std::string label) {
  labels.push_back(std::move(label));
  return labels;
}

}  // namespace

int element(const Matroid& m, const std::string& label) {
  auto e = m.find_label(label);
  if (!e) throw MatroidError(ErrorKind::kBadElement, "unknown element '" + label + "'");
  return *e;
}

ElemSet elements(const Matroid& m, const std::vector<std::string>& labels) {
  ElemSet out;
  for (const auto& l : labels) out.insert(element(m, l));
  return out;
}

Matroid uniform(int r, int n) {
  check_size(n);
  if (r < 0 || r > n)
    throw MatroidError(ErrorKind::kBadParams, "uniform needs 0 <= r <= n");
  if (n == 0) return Matroid::unchecked(0, {ElemSet()});
  return validate(all_subsets_of_size(n, r), n);
}

Matroid paving(int r, int n, const std::vector<ElemSet>& nonspanning_circuits,
               std::vector<std::string> labels) {
  check_size(n);
  if (r < 0 || r > n) throw MatroidError(ErrorKind::kBadParams, "paving needs 0 <= r <= n");
  for (ElemSet c : nonspanning_circuits)
    if (c.size() != r || !c.subset_of(ElemSet::full(n)))
      throw MatroidError(ErrorKind::kBadParams, "non-spanning circuits must be r-subsets");
  std::vector<ElemSet> bases;
  for (ElemSet s : all_subsets_of_size(n, r))
    if (std::find(nonspanning_circuits.begin(), nonspanning_circuits.end(), s) ==
        nonspanning_circuits.end())
      bases.push_back(s);
  return validate(bases, n, std::move(labels));
}

namespace {

int forest_rank(int vertices, const std::vector<std::pair<int, int>>& edges, ElemSet x) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int rank = 0;
  for (int e : x) {
    int a = find(edges[e].first);
    int b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                std::vector<std::string> labels) {
  const int n = static_cast<int>(edges.size());
  check_size(n);
  const int r = forest_rank(vertices, edges, ElemSet::full(n));
  std::vector<ElemSet> bases;
  for (ElemSet s : all_subsets_of_size(n, r))
    if (forest_rank(vertices, edges, s) == r) bases.push_back(s);
  return validate(bases, n, std::move(labels));
}

namespace {

int rank_mod_p(std::vector<std::vector<long long>> rows, int prime) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    long long inv = 1, base = rows[rank][c], exp = prime - 2;
    while (exp > 0) {
      if (exp & 1) inv = inv * base % prime;
      base = base * base % prime;
      exp >>= 1;
    }
    for (auto& v : rows[rank]) v = v * inv % prime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const long long f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % prime + prime) % prime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid vector_matroid(const std::vector<std::vector<int>>& columns, int prime,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(columns.size());
  check_size(n);
  if (prime < 2) throw MatroidError(ErrorKind::kBadParams, "field size must be a prime");
  auto rows_of = [&](ElemSet s) {
    std::vector<std::vector<long long>> rows;
    for (int e : s) {
      std::vector<long long> v;
      for (int x : columns[e]) v.push_back(((x % prime) + prime) % prime);
      rows.push_back(std::move(v));
    }
    return rows;
  };
  const int r = rank_mod_p(rows_of(ElemSet::full(n)), prime);
  std::vector<ElemSet> bases;
  for (ElemSet s : all_subsets_of_size(n, r))
    if (rank_mod_p(rows_of(s), prime) == r) bases.push_back(s);
  return validate(bases, n, std::move(labels));
}

Matroid wheel(int r) {
  if (r < 2 || 2 * r > kMaxElements)
    throw MatroidError(ErrorKind::kBadParams, "wheel needs 2 <= r <= 12");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    labels.push_back("s" + std::to_string(i));
    edges.emplace_back(i, i % r + 1);
    labels.push_back("r" + std::to_string(i));
  }
  return graphic(r + 1, edges, std::move(labels));
}

Matroid whirl(int r) {
  Matroid w = wheel(r);
  ElemSet rim;
  for (int i = 0; i < r; ++i) rim.insert(2 * i + 1);
  return relax(w, rim);
}

Matroid mk4() {
  // Vertices 0..3; the triad {a',b',c'} is the star at vertex 3.
  return graphic(4, {{1, 2}, {0, 2}, {0, 1}, {0, 3}, {1, 3}, {2, 3}},
                 {"a", "b", "c", "a'", "b'", "c'"});
}

namespace {

std::vector<ElemSet> fano_lines() {
  // a b c d e f g = 0..6
  return {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
}

}  // namespace

Matroid fano() {
  return paving(3, 7, fano_lines(), {"a", "b", "c", "d", "e", "f", "g"});
}

Matroid non_fano() {
  auto lines = fano_lines();
  lines.erase(lines.begin());
  return paving(3, 7, lines, {"a", "b", "c", "d", "e", "f", "g"});
}

Matroid spike(int r) {
  if (r < 3 || 2 * r + 1 > kMaxElements)
    throw MatroidError(ErrorKind::kBadParams, "spike needs 3 <= r <= 11");
  const int n = 2 * r + 1;
  std::vector<std::string> labels{"t"};
  for (int i = 1; i <= r; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  auto leg = [](int i) { return ElemSet{2 * i + 1, 2 * i + 2}; };
  std::vector<ElemSet> small_circuits;
  for (int i = 0; i < r; ++i) {
    small_circuits.push_back(leg(i).with(0));
    for (int j = i + 1; j < r; ++j) small_circuits.push_back(leg(i) | leg(j));
  }
  std::vector<ElemSet> bases;
  for (ElemSet s : all_subsets_of_size(n, r)) {
    bool independent = std::none_of(small_circuits.begin(), small_circuits.end(),
                                     [&](ElemSet c) { return c.subset_of(s); });
    if (independent) bases.push_back(s);
  }
  return validate(bases, n, std::move(labels));
}

Matroid relax(const Matroid& m, ElemSet x) {
  if (!m.is_circuit(x) || !m.is_flat(x) || m.rank(x) != m.rank() - 1)
    throw MatroidError(ErrorKind::kNotCircuitHyperplane,
                       format_set(m, x) + " is not a circuit-hyperplane");
  auto bases = m.bases();
  bases.push_back(x);
  return validate(bases, m.size(), m.labels());
}

Matroid relabel(const Matroid& m, int e, std::string label) {
  auto labels = m.labels();
  if (labels[e] == label) return m;
  check_new_label(m, label);
  labels[e] = std::move(label);
  return m.with_labels(std::move(labels));
}

Matroid reorder(const Matroid& m, const std::vector<int>& order) {
  std::vector<int> new_id(m.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) new_id[order[i]] = i;
  std::vector<ElemSet> bases;
  for (ElemSet b : m.bases()) {
    ElemSet nb;
    for (int e : b) nb.insert(new_id[e]);
    bases.push_back(nb);
  }
  std::vector<std::string> labels;
  for (int e : order) labels.push_back(m.label(e));
  return Matroid::unchecked(m.size(), std::move(bases), std::move(labels));
}

Matroid parallel_add(const Matroid& m, int e, std::string label) {
  if (e < 0 || e >= m.size() || m.is_loop(e))
    throw MatroidError(ErrorKind::kBadElement, "parallel element must be a non-loop");
  check_new_label(m, label);
  check_size(m.size() + 1);
  const int p = m.size();
  auto bases = m.bases();
  for (ElemSet b : m.bases())
    if (b.contains(e)) bases.push_back(b.without(e).with(p));
  return validate(bases, m.size() + 1, append_label(m.labels(), std::move(label)));
}

Matroid series_add(const Matroid& m, int e, std::string label) {
  if (e < 0 || e >= m.size() || m.is_coloop(e))
    throw MatroidError(ErrorKind::kBadElement, "series element must be a non-coloop");
  return dual(parallel_add(dual(m), e, std::move(label)));
}

namespace {

// Extension by a new last element p; `in_cut` decides membership of flats.
template <typename InCut>
Matroid extend_by_cut(const Matroid& m, InCut&& in_cut, std::string label) {
  check_new_label(m, label);
  check_size(m.size() + 1);
  const int p = m.size();
  const int r = m.rank();
  std::vector<ElemSet> bases;
  if (!in_cut(m.ground())) {
    for (ElemSet b : m.bases()) bases.push_back(b.with(p));
  } else {
    bases = m.bases();
    for_each_combination(m.size(), r - 1, [&](ElemSet s) {
      if (r >= 1 && m.is_independent(s) && !in_cut(m.closure(s))) bases.push_back(s.with(p));
      return true;
    });
  }
  return validate(bases, m.size() + 1, append_label(m.labels(), std::move(label)));
}

}  // namespace

Matroid principal_extension(const Matroid& m, ElemSet f, std::string label) {
  if (!f.subset_of(m.ground()) || !m.is_flat(f))
    throw MatroidError(ErrorKind::kNotAFlat, format_set(m, f) + " is not a flat");
  return extend_by_cut(m, [&](ElemSet flat) { return f.subset_of(flat); }, std::move(label));
}

Matroid modular_cut_extension(const Matroid& m, const std::vector<ElemSet>& generators,
                              std::string label) {
  for (ElemSet g : generators)
    if (!g.subset_of(m.ground()) || !m.is_flat(g))
      throw MatroidError(ErrorKind::kNotAFlat, format_set(m, g) + " is not a flat");
  const auto& flats = m.flats();
  std::vector<char> in(flats.size(), 0);
  auto add_up = [&](ElemSet g) {
    bool changed = false;
    for (std::size_t i = 0; i < flats.size(); ++i)
      if (!in[i] && g.subset_of(flats[i])) in[i] = changed = true;
    return changed;
  };
  for (ElemSet g : generators) add_up(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = i + 1; j < flats.size(); ++j) {
        if (!in[j]) continue;
        ElemSet a = flats[i], b = flats[j];
        ElemSet meet = a & b;
        if (m.rank(a) + m.rank(b) == m.rank(a | b) + m.rank(meet) && add_up(meet))
          changed = true;
      }
    }
  }
  ElemSet loops = m.closure(ElemSet());
  auto loop_index = std::find(flats.begin(), flats.end(), loops) - flats.begin();
  bool generators_loop =
      std::find(generators.begin(), generators.end(), loops) != generators.end();
  if (in[loop_index] && !generators_loop)
    throw MatroidError(ErrorKind::kNotAModularCut,
                       "the generating flats force the new element to be a loop");
  try {
    return extend_by_cut(
        m,
        [&](ElemSet flat) {
          auto it = std::lower_bound(flats.begin(), flats.end(), flat, LexLess{});
          return in[it - flats.begin()] != 0;
        },
        std::move(label));
  } catch (const MatroidError& err) {
    if (err.kind() != ErrorKind::kAxiomViolation) throw;
    throw MatroidError(ErrorKind::kNotAModularCut, err.what());
  }
}

namespace {

// Ids of `from` elements in `to` by label; -1 where absent.
std::vector<int> label_map(const Matroid& from, const Matroid& to) {
  std::vector<int> out(from.size(), -1);
  for (int e = 0; e < from.size(); ++e)
    if (auto f = to.find_label(from.label(e))) out[e] = *f;
  return out;
}

ElemSet translate(ElemSet x, const std::vector<int>& map) {
  ElemSet out;
  for (int e : x)
    if (map[e] >= 0) out.insert(map[e]);
  return out;
}

}  // namespace

Matroid parallel_connection(const Matroid& m1, const Matroid& m2, bool require_modular) {
  const std::vector<int> one_to_two = label_map(m1, m2);
  ElemSet t1;
  for (int e = 0; e < m1.size(); ++e)
    if (one_to_two[e] >= 0) t1.insert(e);
  const ElemSet t2 = translate(t1, one_to_two);
  const int n1 = m1.size();
  const int n = n1 + m2.size() - t1.size();
  check_size(n);

  // Union coordinates: m1's ids, then m2's elements outside T in order.
  std::vector<int> union_to_two(n, -1);
  std::vector<int> two_to_union(m2.size(), -1);
  std::vector<std::string> labels = m1.labels();
  for (int e : t1) {
    union_to_two[e] = one_to_two[e];
    two_to_union[one_to_two[e]] = e;
  }
  int next = n1;
  for (int f = 0; f < m2.size(); ++f) {
    if (t2.contains(f)) continue;
    union_to_two[next] = f;
    two_to_union[f] = next;
    labels.push_back(m2.label(f));
    ++next;
  }
  const ElemSet e1 = ElemSet::full(n1);
  const ElemSet all = ElemSet::full(n);
  const ElemSet e2 = (all - e1) | t1;

  const std::uint32_t t_subsets = std::uint32_t{1} << t1.size();
  for (std::uint32_t s = 0; s < t_subsets; ++s) {
    ElemSet sub = expand(ElemSet(s), t1);
    if (m1.rank(sub) != m2.rank(translate(sub, one_to_two)))
      throw MatroidError(ErrorKind::kRestrictionMismatch,
                         "the restrictions to the common set differ");
  }

  const ElemSet cl_t = m1.closure(t1);
  if (require_modular)
    for (ElemSet f : m1.flats())
      if (m1.rank(cl_t) + m1.rank(f) != m1.rank(cl_t | f) + m1.rank(cl_t & f))
        throw MatroidError(ErrorKind::kNotModularFlat,
                           "closure of " + format_set(m1, t1) + " is not modular");

  auto closure = [&](ElemSet x) {
    while (true) {
      ElemSet c1 = m1.closure(x & e1);
      ElemSet c2 = translate(m2.closure(translate(x & e2, union_to_two)), two_to_union);
      ElemSet y = c1 | c2 | x;
      if (y == x) return x;
      x = y;
    }
  };
  auto rank = [&](ElemSet x) {
    ElemSet f = closure(x);
    return m1.rank(f & e1) + m2.rank(translate(f & e2, union_to_two)) - m1.rank(f & t1);
  };
  const int r = m1.rank() + m2.rank() - m1.rank(t1);
  std::vector<ElemSet> bases;
  for_each_combination(n, r, [&](ElemSet s) {
    if (rank(s) == r) bases.push_back(s);
    return true;
  });
  Matroid p = validate(bases, n, labels);

  // The restrictions to E1 and E2 must give back m1 and m2.
  if (!(restrict_to(p, e1) == m1))
    throw MatroidError(ErrorKind::kRestrictionMismatch, "restriction to the first side differs");
  std::vector<int> order2(m2.size());
  for (int f = 0; f < m2.size(); ++f) order2[f] = two_to_union[f];
  std::vector<int> sorted2 = order2;
  std::sort(sorted2.begin(), sorted2.end());
  Matroid side2 = restrict_to(p, e2);
  std::vector<int> perm(m2.size());
  for (int f = 0; f < m2.size(); ++f)
    perm[f] = static_cast<int>(std::lower_bound(sorted2.begin(), sorted2.end(), order2[f]) -
                               sorted2.begin());
  if (!(reorder(side2, perm) == m2))
    throw MatroidError(ErrorKind::kRestrictionMismatch, "restriction to the second side differs");
  return p;
}

namespace {

std::string fresh_label(const Matroid& m, std::string base) {
  while (m.find_label(base)) base += '\'';
  return base;
}

}  // namespace

Matroid delta_wye(const Matroid& m, ElemSet triangle) {
  if (triangle.size() != 3 || !m.is_circuit(triangle))
    throw MatroidError(ErrorKind::kNotATriangle, format_set(m, triangle) + " is not a triangle");
  const auto tri = triangle.elements();
  // Copy of M(K4) whose triangle {a,b,c} carries M's labels and whose triad
  // gets fresh labels.
  Matroid k4 = mk4();
  std::vector<std::string> fresh;
  std::vector<std::string> k4_labels(6);
  for (int i = 0; i < 3; ++i) {
    k4_labels[i] = m.label(tri[i]);
    fresh.push_back(fresh_label(m, m.label(tri[i]) + "'"));
    k4_labels[i + 3] = fresh.back();
  }
  k4 = k4.with_labels(k4_labels);
  Matroid p = parallel_connection(k4, m);
  // p: a b c a' b' c' then m's elements outside the triangle.
  Matroid y = delete_set(p, ElemSet{0, 1, 2});
  // y: a' b' c' then the rest; put them back in m's order with m's labels.
  std::vector<int> order;
  int rest = 3;
  for (int e = 0; e < m.size(); ++e) {
    auto it = std::find(tri.begin(), tri.end(), e);
    order.push_back(it != tri.end() ? static_cast<int>(it - tri.begin()) : rest++);
  }
  return reorder(y, order).with_labels(m.labels());
}

Matroid wye_delta(const Matroid& m, ElemSet triad) {
  if (triad.size() != 3 || !m.is_cocircuit(triad))
    throw MatroidError(ErrorKind::kNotATriad, format_set(m, triad) + " is not a triad");
  return dual(delta_wye(dual(m), triad));
}

}  // namespace matroidkit
