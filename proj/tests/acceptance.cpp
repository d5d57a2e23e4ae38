// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-mkit> <data-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/harness.hpp"
#include "matroidkit/io.hpp"
#include "matroidkit/minors.hpp"
#include "oracle.hpp"

using namespace matroidkit;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Result {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Result()> run;
};

const std::vector<CorpusEntry>& corpus() {
  static const auto c = generate_corpus(kSeed);
  return c;
}

bool three(const Matroid& m) { return m.size() >= 4 && is_3_connected(m); }

Result axioms_and_calculus() {
  Result o;
  int lambda_checked = 0;
  for (const auto& e : corpus()) {
    const Matroid& m = e.matroid;
    if (!oracle::exchange_holds(oracle::bases_of(m))) {
      o.ok = false;
      o.detail = e.id + " fails basis exchange";
      return o;
    }
    if (!(dual(dual(m)) == m)) {
      o.ok = false;
      o.detail = e.id + ": dual is not an involution";
      return o;
    }
    if (m.size() > 12) continue;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m.size()); ++bits) {
      const ElemSet x(bits);
      const int by_rank = m.rank(x) + m.rank(m.ground() - x) - m.rank();
      const int by_corank = m.rank(x) + m.corank(x) - x.size();
      if (by_rank != by_corank || lambda(m, x) != by_rank) {
        o.ok = false;
        o.detail = e.id + ": lambda formulas disagree on " + format_set(m, x);
        return o;
      }
      ++lambda_checked;
    }
  }
  o.detail = std::to_string(corpus().size()) + " matroids validated, " +
             std::to_string(lambda_checked) + " subsets checked";
  return o;
}

Result lemma_registry_sweep() {
  Result o;
  const auto report = run_lemma_registry(corpus());
  std::vector<std::string> fails;
  for (const auto& v : report.verdicts)
    if (v.outcome == Outcome::kFail) fails.push_back(v.check + " on " + v.instance + " (" + v.detail + ")");
  std::vector<std::string> idle;
  for (const auto& [id, s] : report.stats)
    if (s.exercised == 0) idle.push_back(id);
  o.ok = fails.empty() && idle.empty();
  if (!o.ok) {
    std::string d;
    for (auto& f : fails) d += (d.empty() ? "fail: " : "; ") + f;
    for (auto& i : idle) d += (d.empty() ? "never exercised: " : "; never exercised: ") + i;
    o.detail = d;
    return o;
  }
  long total = 0;
  for (const auto& [id, s] : report.stats) total += s.exercised;
  o.detail = std::to_string(report.stats.size()) + " lemmas, " + std::to_string(total) +
             " instances, all pass or vacuous";
  return o;
}

Result twisted_replay() {
  Result o;
  const Verdict v = verify_construction_twisted();
  o.ok = v.outcome == Outcome::kPass && twisted_construction().size() == 12;
  o.detail = v.detail;
  return o;
}

Result spike_replay() {
  Result o;
  const Verdict a = verify_construction_spike(false);
  const Verdict b = verify_construction_spike(true);
  o.ok = a.outcome == Outcome::kPass && b.outcome == Outcome::kPass;
  o.detail = "relabelled: " + a.detail + "; free tip: " + b.detail;
  return o;
}

Result triangle_theorem_sweep() {
  Result o;
  int pairs = 0;
  std::map<std::string, int> branches;
  for (const auto& me : corpus()) {
    const Matroid& m = me.matroid;
    if (m.size() > 11 || !three(m)) continue;
    for (const auto& ne : corpus()) {
      const Matroid& n = ne.matroid;
      if (!three(n) || m.size() - n.size() < 5 || !has_minor(m, n)) continue;
      const Verdict v = verify_theorem_triangles(m, n, me.id);
      ++pairs;
      ++branches[v.detail.substr(0, v.detail.find(' '))];
      if (v.outcome != Outcome::kPass) {
        o.ok = false;
        o.detail = me.id + " with N = " + ne.id + ": " + v.detail;
        return o;
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs";
  for (auto& [b, c] : branches) o.detail += ", " + b + " x" + std::to_string(c);
  o.ok = pairs > 0;
  return o;
}

Result foundation_sweep() {
  Result o;
  int qualifying = 0, excluded = 0;
  bool twisted_seen = false;
  for (const auto& me : corpus()) {
    const Matroid& m = me.matroid;
    if (m.size() > 12 || !three(m)) continue;
    for (const auto& ne : corpus()) {
      const Matroid& n = ne.matroid;
      if (n.size() >= m.size() || !three(n)) continue;
      for (const auto& f : foundation_instances(m, n)) {
        Verdict v;
        try {
          v = verify_foundation(m, n, f.d, f.d_prime, f.y, f.z, me.id);
        } catch (const MatroidError& err) {
          if (err.kind() != ErrorKind::kHypothesisUnmet) throw;
          ++excluded;
          continue;
        }
        ++qualifying;
        if (me.id == "twisted-construction" && ne.id == "non-fano") twisted_seen = true;
        if (v.outcome != Outcome::kPass) {
          o.ok = false;
          o.detail = me.id + " with N = " + ne.id + " d=" + m.label(f.d) + ": " + v.detail;
          return o;
        }
      }
    }
  }
  o.ok = twisted_seen;
  o.detail = std::to_string(qualifying) + " qualifying instances pass, " +
             std::to_string(excluded) + " excluded by a detachable pair";
  if (!twisted_seen) o.detail += "; the twisted construction did not qualify";
  return o;
}

Result splitter_property() {
  Result o;
  std::vector<CorpusEntry> minors = corpus();
  for (const auto& p : minor_palette()) minors.push_back(p);
  int checked = 0;
  for (const auto& me : corpus()) {
    const Matroid& m = me.matroid;
    if (m.size() > 12 || !three(m) || is_wheel_or_whirl(m)) continue;
    std::vector<Matroid> seen;
    for (const auto& ne : minors) {
      const Matroid& n = ne.matroid;
      if (n.size() >= m.size() || !three(n)) continue;
      if (std::any_of(seen.begin(), seen.end(), [&](const Matroid& s) {
            return s.size() == n.size() && is_isomorphic(s, n).has_value();
          }))
        continue;
      seen.push_back(n);
      if (!has_minor(m, n)) continue;
      ++checked;
      bool found = false;
      for (int e = 0; e < m.size() && !found; ++e)
        for (const Matroid& r : {delete_set(m, ElemSet::single(e)), contract_set(m, ElemSet::single(e))})
          if (!found && is_3_connected(r) && has_minor(r, n)) found = true;
      if (!found) {
        o.ok = false;
        o.detail = me.id + " with N = " + ne.id + " has no 3-connected single removal";
        return o;
      }
    }
  }
  o.detail = std::to_string(checked) + " (M, N) pairs";
  o.ok = checked > 0;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<int, std::string> run(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> chunk;
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
  return {pclose(pipe), out};
}

Result cli_checks(const std::string& mkit, const std::string& data) {
  Result o;
  int round_trips = 0;
  for (const auto& e : catalog()) {
    const std::string text = serialize(e.matroid, e.id);
    const auto f = parse(text);
    if (!(f.matroid == e.matroid) || serialize(f.matroid, f.name) != text) {
      o.ok = false;
      o.detail = "round trip fails on " + e.id;
      return o;
    }
    ++round_trips;
  }
  const std::string q = "'" + mkit + "' ";
  const std::vector<std::pair<std::string, std::string>> examples{
      {"detachable '" + data + "/M4.mtx' --minor '" + data + "/F7minus.mtx' --exchange",
       "detachable-m4.txt"},
      {"separators '" + data + "/M4.mtx'", "separators-m4.txt"},
      {"construct 'whirl 3'", "construct-whirl3.txt"},
  };
  for (const auto& [args, golden] : examples) {
    const auto [status, out] = run(q + args);
    if (status != 0 || out != read_file(data + "/expected/" + golden)) {
      o.ok = false;
      o.detail = "mkit " + args + " does not match " + golden;
      return o;
    }
  }
  const auto whirl = parse(run(q + "construct 'whirl 3'").second).matroid;
  if (whirl.bases().size() != 17) {
    o.ok = false;
    o.detail = "whirl 3 file does not have 17 bases";
    return o;
  }
  o.detail = std::to_string(round_trips) + " catalog round trips, 3 command examples match";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <mkit> <data-dir>\n";
    return 2;
  }
  const std::string mkit = argv[1];
  const std::string data = argv[2];
  const std::vector<Criterion> criteria{
      {1, "axioms and connectivity calculus", 10, axioms_and_calculus},
      {2, "lemma registry", 300, lemma_registry_sweep},
      {3, "twisted cube-like construction replay", 600, twisted_replay},
      {4, "spike construction replay", 600, spike_replay},
      {5, "triangle theorem sweep", 1800, triangle_theorem_sweep},
      {6, "foundation sweep", 1800, foundation_sweep},
      {7, "splitter property", 600, splitter_property},
      {8, "file format and command line", 600, [&] { return cli_checks(mkit, data); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the time budget";
    }
    if (!o.ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << " " << c.name << ": "
              << o.detail << " [" << timing << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
