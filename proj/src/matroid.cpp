#include "matroidkit/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>

#include "matroidkit/detail/embedding.hpp"

namespace matroidkit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyFamily: return "EmptyFamily";
    case ErrorKind::kCardinalityMismatch: return "CardinalityMismatch";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kBadParams: return "BadParams";
    case ErrorKind::kBadElement: return "BadElement";
    case ErrorKind::kGroundSetExhausted: return "GroundSetExhausted";
    case ErrorKind::kNotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorKind::kNotAFlat: return "NotAFlat";
    case ErrorKind::kNotAModularCut: return "NotAModularCut";
    case ErrorKind::kRestrictionMismatch: return "RestrictionMismatch";
    case ErrorKind::kNotModularFlat: return "NotModularFlat";
    case ErrorKind::kNotATriangle: return "NotATriangle";
    case ErrorKind::kNotATriad: return "NotATriad";
    case ErrorKind::kNotThreeConnected: return "NotThreeConnected";
    case ErrorKind::kBadPartition: return "BadPartition";
    case ErrorKind::kBadInput: return "BadInput";
    case ErrorKind::kBadSize: return "BadSize";
    case ErrorKind::kNotExactlyThreeSeparating: return "NotExactlyThreeSeparating";
    case ErrorKind::kHypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

struct Matroid::Tables {
  std::once_flag rank_once;
  std::vector<std::uint8_t> rank;

  std::once_flag circuits_once;
  std::vector<ElemSet> circuits;
  std::once_flag cocircuits_once;
  std::vector<ElemSet> cocircuits;
  std::once_flag flats_once;
  std::vector<ElemSet> flats;
  std::once_flag degrees_once;
  std::vector<int> degrees;
};

namespace {

std::vector<std::uint8_t> build_rank_table(int n, int r,
                                           const std::vector<ElemSet>& bases) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(count, 0);
  for (ElemSet b : bases) indep[b.bits()] = 1;
  for (std::size_t x = count; x-- > 1;) {
    if (!indep[x]) continue;
    for (std::size_t w = x; w != 0; w &= w - 1) indep[x & ~(w & (~w + 1))] = 1;
  }
  std::vector<std::uint8_t> rank(count, 0);
  for (std::size_t x = 1; x < count; ++x) {
    int pc = std::popcount(static_cast<std::uint32_t>(x));
    if (indep[x]) {
      rank[x] = static_cast<std::uint8_t>(pc);
      continue;
    }
    int cap = std::min(pc - 1, r);
    int best = 0;
    for (std::size_t w = x; w != 0; w &= w - 1) {
      best = std::max<int>(best, rank[x & ~(w & (~w + 1))]);
      if (best == cap) break;
    }
    rank[x] = static_cast<std::uint8_t>(best);
  }
  return rank;
}

bool numeric_less(ElemSet a, ElemSet b) { return a.bits() < b.bits(); }

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

std::string format_set(const Matroid& m, ElemSet x) {
  std::string out = "{";
  bool first = true;
  for (int e : x) {
    if (!first) out += ',';
    first = false;
    out += m.label(e);
  }
  out += '}';
  return out;
}

Matroid Matroid::unchecked(int n, std::vector<ElemSet> bases,
                           std::vector<std::string> labels) {
  Matroid m;
  m.n_ = n;
  std::sort(bases.begin(), bases.end(), numeric_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  m.bases_ = std::move(bases);
  m.rank_ = m.bases_.empty() ? 0 : m.bases_.front().size();
  m.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  m.tables_ = std::make_shared<Tables>();
  return m;
}

const Matroid::Tables& Matroid::tables() const {
  std::call_once(tables_->rank_once,
                 [&] { tables_->rank = build_rank_table(n_, rank_, bases_); });
  return *tables_;
}

bool Matroid::is_basis(ElemSet x) const {
  return std::binary_search(bases_.begin(), bases_.end(), x, numeric_less);
}

std::optional<int> Matroid::find_label(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  Matroid m = *this;
  m.labels_ = std::move(labels);
  return m;
}

int Matroid::rank(ElemSet x) const { return tables().rank[x.bits()]; }

const std::uint8_t* Matroid::rank_table() const { return tables().rank.data(); }

ElemSet Matroid::closure(ElemSet x) const {
  const auto& rk = tables().rank;
  int base = rk[x.bits()];
  ElemSet out = x;
  for (int e : ground() - x)
    if (rk[x.with(e).bits()] == base) out.insert(e);
  return out;
}

ElemSet Matroid::coclosure(ElemSet x) const {
  int base = corank(x);
  ElemSet out = x;
  for (int e : ground() - x)
    if (corank(x.with(e)) == base) out.insert(e);
  return out;
}

bool Matroid::is_circuit(ElemSet x) const {
  if (x.empty() || rank(x) != x.size() - 1) return false;
  for (int e : x)
    if (rank(x.without(e)) != x.size() - 1) return false;
  return true;
}

bool Matroid::is_cocircuit(ElemSet x) const {
  if (x.empty()) return false;
  ElemSet h = ground() - x;
  if (rank(h) != rank_ - 1) return false;
  for (int e : x)
    if (rank(h.with(e)) != rank_) return false;
  return true;
}

const std::vector<ElemSet>& Matroid::circuits() const {
  const auto& rk = tables().rank;
  std::call_once(tables_->circuits_once, [&] {
    std::vector<ElemSet> out;
    const std::uint32_t count = std::uint32_t{1} << n_;
    for (std::uint32_t x = 1; x < count; ++x) {
      int pc = std::popcount(x);
      if (rk[x] != pc - 1) continue;
      bool minimal = true;
      for (std::uint32_t w = x; w != 0 && minimal; w &= w - 1)
        minimal = rk[x & ~(w & (~w + 1))] == pc - 1;
      if (minimal) out.push_back(ElemSet(x));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    tables_->circuits = std::move(out);
  });
  return tables_->circuits;
}

const std::vector<ElemSet>& Matroid::cocircuits() const {
  const auto& rk = tables().rank;
  std::call_once(tables_->cocircuits_once, [&] {
    std::vector<ElemSet> out;
    const std::uint32_t count = std::uint32_t{1} << n_;
    const ElemSet all = ground();
    for (std::uint32_t x = 0; x < count; ++x) {
      if (rk[x] != rank_ - 1) continue;
      bool hyperplane = true;
      for (int e : all - ElemSet(x))
        if (rk[x | (std::uint32_t{1} << e)] != rank_) {
          hyperplane = false;
          break;
        }
      if (hyperplane) out.push_back(all - ElemSet(x));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    tables_->cocircuits = std::move(out);
  });
  return tables_->cocircuits;
}

const std::vector<ElemSet>& Matroid::flats() const {
  const auto& rk = tables().rank;
  std::call_once(tables_->flats_once, [&] {
    std::vector<ElemSet> out;
    const std::uint32_t count = std::uint32_t{1} << n_;
    const ElemSet all = ground();
    for (std::uint32_t x = 0; x < count; ++x) {
      bool closed = true;
      for (int e : all - ElemSet(x))
        if (rk[x | (std::uint32_t{1} << e)] == rk[x]) {
          closed = false;
          break;
        }
      if (closed) out.push_back(ElemSet(x));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    tables_->flats = std::move(out);
  });
  return tables_->flats;
}

const std::vector<int>& Matroid::basis_degrees() const {
  std::call_once(tables_->degrees_once, [&] {
    std::vector<int> deg(n_, 0);
    for (ElemSet b : bases_)
      for (int e : b) ++deg[e];
    tables_->degrees = std::move(deg);
  });
  return tables_->degrees;
}

namespace {

[[noreturn]] void throw_exchange_witness(const Matroid& m) {
  const auto& bases = m.bases();
  for (ElemSet b1 : bases) {
    for (ElemSet b2 : bases) {
      for (int x : b1 - b2) {
        bool found = false;
        for (int y : b2 - b1) {
          if (m.is_basis(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw MatroidError(ErrorKind::kAxiomViolation,
                             "basis exchange fails for B1=" + format_set(m, b1) +
                                 " B2=" + format_set(m, b2) + " x=" + m.label(x));
        }
      }
    }
  }
  throw MatroidError(ErrorKind::kAxiomViolation, "basis exchange fails");
}

}  // namespace

Matroid validate(const std::vector<ElemSet>& bases, int n,
                 std::vector<std::string> labels) {
  if (n < 1 || n > kMaxElements)
    throw MatroidError(ErrorKind::kBadParams,
                       "ground set size " + std::to_string(n) + " outside 1..24");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw MatroidError(ErrorKind::kBadParams, "label count does not match ground set");
  if (bases.empty()) throw MatroidError(ErrorKind::kEmptyFamily, "no bases given");
  const ElemSet all = ElemSet::full(n);
  const int r = bases.front().size();
  for (ElemSet b : bases) {
    if (!b.subset_of(all))
      throw MatroidError(ErrorKind::kBadParams, "basis outside the ground set");
    if (b.size() != r)
      throw MatroidError(ErrorKind::kCardinalityMismatch,
                         "bases of sizes " + std::to_string(r) + " and " +
                             std::to_string(b.size()));
  }
  Matroid m = Matroid::unchecked(n, bases, std::move(labels));

  // The function X -> max |B & X| is a matroid rank function exactly when the
  // family satisfies exchange; for unit-increase functions submodularity
  // reduces to the local form r(X+e)+r(X+f) >= r(X+e+f)+r(X).
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t x = 0; x < count; ++x) {
    ElemSet xs(x);
    int rx = m.rank(xs);
    ElemSet flat_part;
    for (int e : all - xs)
      if (m.rank(xs.with(e)) == rx) flat_part.insert(e);
    for (int e : flat_part)
      for (int f : flat_part)
        if (e < f && m.rank(xs.with(e).with(f)) != rx) throw_exchange_witness(m);
  }
  return m;
}

Matroid dual(const Matroid& m) {
  std::vector<ElemSet> bases;
  bases.reserve(m.bases().size());
  for (ElemSet b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::unchecked(m.size(), std::move(bases), m.labels());
}

Matroid minor(const Matroid& m, ElemSet c, ElemSet d) {
  if (c.intersects(d))
    throw MatroidError(ErrorKind::kBadInput, "contract and delete sets overlap");
  if (!(c | d).subset_of(m.ground()))
    throw MatroidError(ErrorKind::kBadInput, "set outside the ground set");
  const ElemSet kept = m.ground() - c - d;
  if (kept.empty())
    throw MatroidError(ErrorKind::kGroundSetExhausted, "minor removes every element");
  const int rc = m.rank(c);
  const int r = m.rank(m.ground() - d) - rc;
  std::vector<ElemSet> bases;
  for_each_subset_of_size(kept, r, [&](ElemSet b) {
    if (m.rank(b | c) == rc + r) bases.push_back(compress(b, kept));
    return true;
  });
  std::vector<std::string> labels;
  for (int e : kept) labels.push_back(m.label(e));
  return Matroid::unchecked(kept.size(), std::move(bases), std::move(labels));
}

Matroid delete_set(const Matroid& m, ElemSet d) { return minor(m, ElemSet(), d); }
Matroid contract_set(const Matroid& m, ElemSet c) { return minor(m, c, ElemSet()); }
Matroid restrict_to(const Matroid& m, ElemSet x) {
  return minor(m, ElemSet(), m.ground() - x);
}

Reduction simplify(const Matroid& m) {
  std::vector<int> rep_of(m.size(), -1);
  ElemSet kept;
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_loop(e)) continue;
    int rep = e;
    for (int f : kept)
      if (m.rank(ElemSet{e, f}) == 1) {
        rep = f;
        break;
      }
    if (rep == e) kept.insert(e);
    rep_of[e] = rep;
  }
  Reduction out{restrict_to(m, kept), std::vector<int>(m.size(), -1)};
  for (int e = 0; e < m.size(); ++e)
    if (rep_of[e] >= 0) out.representative[e] = compress(ElemSet::single(rep_of[e]), kept).min();
  return out;
}

Reduction cosimplify(const Matroid& m) {
  Reduction s = simplify(dual(m));
  return Reduction{dual(s.matroid), std::move(s.representative)};
}

namespace detail {

EmbeddingPattern::EmbeddingPattern(const Matroid& pattern) {
  const int n = pattern.size();
  const auto& circuits = pattern.circuits();
  ElemSet placed;
  while (placed.size() < n) {
    int best = -1;
    int best_score = -1;
    for (int e : pattern.ground() - placed) {
      int score = 0;
      ElemSet with_e = placed.with(e);
      for (ElemSet c : circuits)
        if (c.contains(e) && c.subset_of(with_e)) ++score;
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    order_.push_back(best);
    placed.insert(best);
  }

  checks_.resize(n);
  ElemSet prefix;  // in pattern ids
  for (int pos = 0; pos < n; ++pos) {
    const int e = order_[pos];
    prefix.insert(e);
    auto to_positions = [&](ElemSet s) {
      ElemSet out;
      for (int i = 0; i <= pos; ++i)
        if (s.contains(order_[i])) out.insert(i);
      return out;
    };
    const int rp = pattern.rank(prefix);
    if (!pattern.is_loop(e)) {
      for_each_subset_of_size(prefix.without(e), rp - 1, [&](ElemSet s) {
        ElemSet b = s.with(e);
        if (pattern.is_independent(b)) checks_[pos].push_back({to_positions(b), true});
        return true;
      });
    }
    for (ElemSet c : circuits)
      if (c.contains(e) && c.subset_of(prefix))
        checks_[pos].push_back({to_positions(c), false});
  }
}

}  // namespace detail

namespace {

// Per-element invariant: basis degree followed by the number of circuits of
// each size through the element.
std::vector<std::vector<int>> element_signatures(const Matroid& m) {
  std::vector<std::vector<int>> sig(m.size(), std::vector<int>(m.size() + 2, 0));
  for (int e = 0; e < m.size(); ++e) sig[e][0] = m.basis_degrees()[e];
  for (ElemSet c : m.circuits())
    for (int e : c) ++sig[e][c.size()];
  return sig;
}

std::vector<ElemSet> parallel_clones(const Matroid& m) {
  std::vector<ElemSet> lower(m.size());
  for (int e = 0; e < m.size(); ++e) {
    for (int f = 0; f < e; ++f) {
      bool both_loops = m.is_loop(e) && m.is_loop(f);
      bool parallel = !m.is_loop(e) && !m.is_loop(f) && m.rank(ElemSet{e, f}) == 1;
      if (both_loops || parallel) lower[e].insert(f);
    }
  }
  return lower;
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size())
    return std::nullopt;
  auto sig_a = element_signatures(a);
  auto sig_b = element_signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  detail::EmbeddingPattern pattern(a);
  std::optional<IsoWitness> found;
  detail::embed(
      pattern, a.size(), b.ground(), parallel_clones(b),
      [&](ElemSet x) { return b.is_independent(x); },
      [&](int p, int t) { return sig_a[p] == sig_b[t]; },
      [&](const std::vector<int>& image) {
        found = IsoWitness{image};
        return false;
      });
  return found;
}

}  // namespace matroidkit
