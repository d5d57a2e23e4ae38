#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

enum class Outcome { kPass, kFail, kVacuous };

std::string_view outcome_name(Outcome outcome);

struct Verdict {
  std::string instance;
  std::string check;
  Outcome outcome = Outcome::kVacuous;
  // Which branch passed, or the witness of a failure.
  std::string detail;
  double millis = 0;
};

// One JSON object per line: instance, check, outcome, detail, millis.
std::string to_record(const Verdict& verdict);

struct CorpusEntry {
  std::string id;
  Matroid matroid;
};

struct CorpusLimits {
  int max_elements = 16;
  int random_count = 16;
  int random_min_n = 6;
  int random_max_n = 10;
};

// Named matroids: uniform (r <= 4, n <= 9), wheels and whirls, Fano-type,
// spikes, the two constructions, the six-element separator examples and
// fixtures that meet the harder lemma hypotheses.
std::vector<CorpusEntry> catalog(int max_elements = 16);

// Random sparse paving matroids of rank floor(n/2), kept when 3-connected.
std::vector<CorpusEntry> random_sparse_paving(std::uint64_t seed, const CorpusLimits& limits);

// catalog() followed by random_sparse_paving(); deterministic in the seed.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, const CorpusLimits& limits = {});

// Small 3-connected matroids used as N for the lemmas that need a minor.
const std::vector<CorpusEntry>& minor_palette();

bool is_wheel_or_whirl(const Matroid& m);

// Result of a single lemma on a single matroid.
struct LemmaResult {
  // Number of hypothesis instances checked.
  long exercised = 0;
  // Empty unless some instance failed.
  std::string witness;
};

struct LemmaCheck {
  std::string id;
  std::string statement;
  std::function<LemmaResult(const Matroid&)> run;
};

const std::vector<LemmaCheck>& lemma_registry();

struct LemmaStats {
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  long exercised = 0;
};

struct RegistryReport {
  std::vector<Verdict> verdicts;
  std::map<std::string, LemmaStats> stats;
};

// Runs every registry lemma on every corpus member; one verdict per pair,
// ordered by corpus position then registry position.
RegistryReport run_lemma_registry(const std::vector<CorpusEntry>& corpus,
                                  const std::vector<std::string>& only = {});

// The verifiers below throw HypothesisUnmet when their instance does not
// satisfy the theorem's hypotheses.

// Gap |E(M)| - |E(N)| >= 10: a detachable pair, one after a single exchange,
// or a spike-like 3-separator P with |E(M) - E(N') - P| <= 1 for a copy N'.
Verdict verify_theorem_main(const Matroid& m, const Matroid& n, std::string instance = "");

// Gap >= 5: a detachable pair, one after a single exchange, or every
// triangle and triad N-grounded.
Verdict verify_theorem_triangles(const Matroid& m, const Matroid& n, std::string instance = "");

// `flan` is a flan ordering of M\d, given in the ids of M.
Verdict verify_flan_corollary(const Matroid& m, const Matroid& n, int d,
                              const std::vector<int>& flan, std::string instance = "");

// (Y,{d'},Z) is a cyclic 3-separation of M\d, in the ids of M.
Verdict verify_foundation(const Matroid& m, const Matroid& n, int d, int d_prime, ElemSet y,
                          ElemSet z, std::string instance = "");

struct FoundationInstance {
  int d = -1;
  int d_prime = -1;
  ElemSet y;
  ElemSet z;
};

// Every (d, d', Y, Z) meeting the standing hypotheses of verify_foundation
// apart from the absence of detachable pairs. Y and Z range over both
// orientations of each cyclic 3-separation.
std::vector<FoundationInstance> foundation_instances(const Matroid& m, const Matroid& n);

// Rebuild the two constructions and check their claims; throw
// ConstructionFailed naming the first claim that does not hold.
Verdict verify_construction_spike(bool free_tip = false);
Verdict verify_construction_twisted();

}  // namespace matroidkit
