#include "matroidkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "matroidkit/builders.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/harness.hpp"

namespace matroidkit {

namespace {

enum class Body { kNone, kBases, kCircuits, kNonspanning };

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_token(std::string_view t) {
  return !t.empty() && t.find_first_of("{},#") == std::string_view::npos;
}

struct Parser {
  int line = 0;
  int last_line = 0;
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> labels;
  std::optional<int> rank;
  Body body = Body::kNone;
  int body_line = 0;
  std::vector<ElemSet> sets;

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line, reason); }

  int lookup(std::string_view label) const {
    const auto& ls = *labels;
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) fail("unknown element '" + std::string(label) + "'");
    return static_cast<int>(it - ls.begin());
  }

  void read_sets(std::string_view rest) {
    if (!labels) fail("set list before elements");
    rest = trim(rest);
    if (rest.empty()) fail("expected at least one set");
    while (!rest.empty()) {
      if (rest.front() != '{') fail("expected '{'");
      const std::size_t close = rest.find('}');
      if (close == std::string_view::npos) fail("unterminated set");
      std::string_view inside = trim(rest.substr(1, close - 1));
      ElemSet s;
      if (!inside.empty()) {
        std::size_t start = 0;
        while (true) {
          const std::size_t comma = inside.find(',', start);
          const std::string_view item =
              trim(inside.substr(start, comma == std::string_view::npos ? inside.npos : comma - start));
          if (!valid_token(item) || item.find_first_of(" \t") != std::string_view::npos)
            fail("bad element in set");
          const int e = lookup(item);
          if (s.contains(e)) fail("repeated element '" + std::string(item) + "'");
          s.insert(e);
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      }
      sets.push_back(s);
      rest = trim(rest.substr(close + 1));
    }
  }

  void directive(std::string_view text) {
    const std::size_t cut = text.find_first_of(" \t");
    const std::string_view key = text.substr(0, cut);
    const std::string_view rest = cut == std::string_view::npos ? "" : text.substr(cut);
    if (key == "name") {
      if (name) fail("name given twice");
      const auto w = split_words(rest);
      if (w.size() != 1 || !valid_token(w[0])) fail("name takes one token");
      name = std::string(w[0]);
    } else if (key == "elements") {
      if (labels) fail("elements given twice");
      const auto w = split_words(rest);
      if (w.empty()) fail("no elements");
      if (static_cast<int>(w.size()) > kMaxElements)
        fail("more than " + std::to_string(kMaxElements) + " elements");
      std::vector<std::string> ls;
      for (auto t : w) {
        if (!valid_token(t)) fail("bad element label '" + std::string(t) + "'");
        if (std::find(ls.begin(), ls.end(), t) != ls.end())
          fail("repeated element '" + std::string(t) + "'");
        ls.emplace_back(t);
      }
      labels = std::move(ls);
    } else if (key == "rank") {
      if (rank) fail("rank given twice");
      const auto w = split_words(rest);
      int r = -1;
      if (w.size() != 1) fail("rank takes one integer");
      const auto [ptr, ec] = std::from_chars(w[0].data(), w[0].data() + w[0].size(), r);
      if (ec != std::errc() || ptr != w[0].data() + w[0].size() || r < 0)
        fail("rank takes one integer");
      rank = r;
    } else if (key == "bases" || key == "circuits" || key == "nonspanning_circuits") {
      const Body kind = key == "bases"      ? Body::kBases
                        : key == "circuits" ? Body::kCircuits
                                            : Body::kNonspanning;
      if (body != Body::kNone && body != kind) fail("more than one kind of set list");
      if (body == Body::kNone) body_line = line;
      body = kind;
      read_sets(rest);
    } else {
      fail("unknown directive '" + std::string(key) + "'");
    }
  }
};

std::vector<ElemSet> sorted_sets(std::vector<ElemSet> sets) {
  std::sort(sets.begin(), sets.end(), LexLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// Masks containing some member of `sets`.
std::vector<bool> upward_closure(const std::vector<ElemSet>& sets, int n) {
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<bool> dep(count, false);
  for (ElemSet c : sets) dep[c.bits()] = true;
  for (int b = 0; b < n; ++b)
    for (std::uint32_t s = 0; s < count; ++s)
      if ((s >> b & 1U) && dep[s & ~(std::uint32_t{1} << b)]) dep[s] = true;
  return dep;
}

Matroid from_circuits(const std::vector<ElemSet>& given, int n, std::vector<std::string> labels) {
  const auto circuits = sorted_sets(given);
  for (ElemSet c : circuits)
    if (c.empty()) throw MatroidError(ErrorKind::kAxiomViolation, "the empty set is a circuit");
  const auto dep = upward_closure(circuits, n);
  int r = 0;
  for (std::uint32_t s = 0; s < dep.size(); ++s)
    if (!dep[s]) r = std::max(r, ElemSet(s).size());
  std::vector<ElemSet> bases;
  for (std::uint32_t s = 0; s < dep.size(); ++s)
    if (!dep[s] && ElemSet(s).size() == r) bases.push_back(ElemSet(s));
  Matroid m = validate(bases, n, std::move(labels));
  if (m.circuits() != circuits)
    throw MatroidError(ErrorKind::kAxiomViolation, "sets are not the circuits of a matroid");
  return m;
}

Matroid from_nonspanning(const std::vector<ElemSet>& given, int r, int n,
                         std::vector<std::string> labels) {
  const auto circuits = sorted_sets(given);
  for (ElemSet c : circuits)
    if (c.size() > r)
      throw MatroidError(ErrorKind::kAxiomViolation, "a non-spanning circuit exceeds the rank");
  const auto dep = upward_closure(circuits, n);
  std::vector<ElemSet> bases;
  for_each_combination(n, r, [&](ElemSet s) {
    if (!dep[s.bits()]) bases.push_back(s);
    return true;
  });
  Matroid m = validate(bases, n, std::move(labels));
  std::vector<ElemSet> small;
  for (ElemSet c : m.circuits())
    if (c.size() <= r) small.push_back(c);
  if (sorted_sets(small) != circuits)
    throw MatroidError(ErrorKind::kAxiomViolation,
                       "sets are not the non-spanning circuits of a rank-" + std::to_string(r) +
                           " matroid");
  return m;
}

}  // namespace

MatroidFile parse(std::string_view text) {
  Parser p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++p.line;
    pos = end + 1;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) {
      p.directive(raw);
      p.last_line = p.line;
    }
    if (end == text.size()) break;
  }
  p.line = p.last_line;
  if (!p.name) p.fail("missing name");
  if (!p.labels) p.fail("missing elements");
  if (p.body == Body::kNone) p.fail("missing bases, circuits or nonspanning_circuits");
  p.line = p.body_line;
  const int n = static_cast<int>(p.labels->size());
  std::optional<Matroid> m;
  switch (p.body) {
    case Body::kBases:
      m = validate(p.sets, n, *p.labels);
      break;
    case Body::kCircuits:
      m = from_circuits(p.sets, n, *p.labels);
      break;
    case Body::kNonspanning:
      if (!p.rank) p.fail("nonspanning_circuits needs a rank line");
      if (*p.rank > n) p.fail("rank exceeds the number of elements");
      m = from_nonspanning(p.sets, *p.rank, n, *p.labels);
      break;
    case Body::kNone:
      break;
  }
  if (p.rank && *p.rank != m->rank())
    p.fail("rank " + std::to_string(*p.rank) + " does not match the sets (rank " +
           std::to_string(m->rank()) + ")");
  return {*p.name, *m};
}

std::string serialize(const Matroid& m, std::string_view name) {
  constexpr int kPerLine = 10;
  std::string out = "name " + std::string(name.empty() ? "M" : name) + "\nelements";
  for (const auto& l : m.labels()) out += " " + l;
  out += "\n";
  auto bases = m.bases();
  std::sort(bases.begin(), bases.end(), LexLess{});
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out += i % kPerLine == 0 ? "bases " : " ";
    out += "{";
    bool first = true;
    for (int e : bases[i]) {
      if (!first) out += ",";
      out += m.label(e);
      first = false;
    }
    out += "}";
    if (i % kPerLine == kPerLine - 1 || i + 1 == bases.size()) out += "\n";
  }
  return out;
}

Matroid build_recipe(std::string_view recipe) {
  auto words = split_words(recipe);
  bool dualize = false;
  if (!words.empty() && words.front() == "dual") {
    dualize = true;
    words.erase(words.begin());
  }
  auto bad = [&](const std::string& why) {
    return MatroidError(ErrorKind::kBadInput, "recipe '" + std::string(trim(recipe)) + "': " + why);
  };
  if (words.empty()) throw bad("empty");
  const std::string head(words.front());
  std::optional<Matroid> m;
  if (head == "catalog") {
    if (words.size() != 2) throw bad("catalog takes one id");
    for (auto& e : catalog(kMaxElements))
      if (e.id == words[1]) m = e.matroid;
    if (!m) throw bad("no catalog entry '" + std::string(words[1]) + "'");
  } else {
    std::vector<int> args;
    for (std::size_t i = 1; i < words.size(); ++i) {
      int v = 0;
      const auto w = words[i];
      const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || ptr != w.data() + w.size()) throw bad("arguments must be integers");
      args.push_back(v);
    }
    using Builder = std::pair<std::size_t, std::function<Matroid(const std::vector<int>&)>>;
    static const std::map<std::string, Builder> builders{
        {"uniform", {2, [](auto& a) { return uniform(a[0], a[1]); }}},
        {"wheel", {1, [](auto& a) { return wheel(a[0]); }}},
        {"whirl", {1, [](auto& a) { return whirl(a[0]); }}},
        {"spike", {1, [](auto& a) { return spike(a[0]); }}},
        {"mk4", {0, [](auto&) { return mk4(); }}},
        {"fano", {0, [](auto&) { return fano(); }}},
        {"non-fano", {0, [](auto&) { return non_fano(); }}},
        {"u8", {0, [](auto&) { return u8(); }}},
        {"u8-plus", {0, [](auto&) { return u8_plus(); }}},
        {"fano-prime", {0, [](auto&) { return fano_prime(); }}},
        {"fano-double-prime", {0, [](auto&) { return fano_double_prime(); }}},
        {"spike-construction", {1, [](auto& a) { return spike_construction(a[0]); }}},
        {"spike-construction-free-tip",
         {1, [](auto& a) { return spike_construction(a[0], true); }}},
        {"twisted-construction", {0, [](auto&) { return twisted_construction(); }}},
        {"elongated-quad-example", {0, [](auto&) { return elongated_quad_example(); }}},
        {"skew-whiff-example", {0, [](auto&) { return skew_whiff_example(); }}},
        {"twisted-cube-example", {0, [](auto&) { return twisted_cube_example(); }}},
    };
    const auto it = builders.find(head);
    if (it == builders.end()) throw bad("unknown builder '" + head + "'");
    if (args.size() != it->second.first)
      throw bad(head + " takes " + std::to_string(it->second.first) + " argument(s)");
    m = it->second.second(args);
  }
  return dualize ? dual(*m) : *m;
}

std::string recipe_name(std::string_view recipe) {
  std::string out;
  for (auto w : split_words(recipe)) {
    if (!out.empty()) out += "-";
    out += w;
  }
  return out;
}

}  // namespace matroidkit
