// mkit: command-line front end for matroidkit.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidkit/builders.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/harness.hpp"
#include "matroidkit/io.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/structures.hpp"

using namespace matroidkit;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string minor;
  bool exchange = false;
  std::uint64_t seed = 7;
  int max_n = 16;
};

bool records(const Options& o) { return o.format == "records"; }

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MatroidFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "none";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string ordering(const Matroid& m, const std::vector<int>& order) {
  std::string s = "(";
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? "," : "") + m.label(order[i]);
  return s + ")";
}

std::vector<std::string> labels_of(const Matroid& m, ElemSet x) {
  std::vector<std::string> out;
  for (int e : x) out.push_back(m.label(e));
  return out;
}

// "3:4 4:10" from the sizes of a family.
std::string size_profile(const std::vector<ElemSet>& family) {
  std::map<int, int> count;
  for (ElemSet s : family) ++count[s.size()];
  std::vector<std::string> parts;
  for (auto [k, v] : count) parts.push_back(std::to_string(k) + ":" + std::to_string(v));
  return join(parts);
}

int cmd_analyze(const std::string& path, const Options& o) {
  const auto file = load(path);
  const Matroid& m = file.matroid;
  const bool three = is_3_connected(m);
  std::vector<std::string> tri, triad, fan_list, flan_list;
  for (ElemSet t : triangles(m)) tri.push_back(format_set(m, t));
  for (ElemSet t : triads(m)) triad.push_back(format_set(m, t));
  if (three) {
    for (const auto& f : fans(m)) fan_list.push_back(ordering(m, f.elements));
    for (const auto& f : flans(m)) flan_list.push_back(ordering(m, f.elements));
  }
  const bool self_dual = is_isomorphic(m, dual(m)).has_value();
  if (records(o)) {
    json j;
    j["name"] = file.name;
    j["elements"] = m.size();
    j["rank"] = m.rank();
    j["corank"] = m.size() - m.rank();
    j["bases"] = m.bases().size();
    j["circuits"] = size_profile(m.circuits());
    j["cocircuits"] = size_profile(m.cocircuits());
    j["self_dual"] = self_dual;
    j["three_connected"] = three;
    j["triangles"] = tri;
    j["triads"] = triad;
    if (three) {
      j["fans"] = fan_list;
      j["flans"] = flan_list;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "name " << file.name << "\n"
            << "elements " << m.size() << "\n"
            << "rank " << m.rank() << "\n"
            << "corank " << m.size() - m.rank() << "\n"
            << "bases " << m.bases().size() << "\n"
            << "circuits " << size_profile(m.circuits()) << "\n"
            << "cocircuits " << size_profile(m.cocircuits()) << "\n"
            << "self-dual " << (self_dual ? "yes" : "no") << "\n"
            << "3-connected " << (three ? "yes" : "no") << "\n"
            << "triangles " << join(tri) << "\n"
            << "triads " << join(triad) << "\n";
  if (three) std::cout << "fans " << join(fan_list) << "\n" << "flans " << join(flan_list) << "\n";
  return 0;
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kDirect: return "direct";
    case Stage::kAfterDeltaWye: return "delta-wye";
    case Stage::kAfterWyeDelta: return "wye-delta";
  }
  return "direct";
}

int cmd_detachable(const std::string& path, const Options& o) {
  if (o.minor.empty()) throw MatroidError(ErrorKind::kBadInput, "detachable needs --minor");
  const Matroid m = load(path).matroid;
  const Matroid n = load(o.minor).matroid;
  auto found = detachable_pairs(m, n);
  if (o.exchange)
    for (auto& r : detachable_after_exchange(m, n)) found.push_back(std::move(r));
  if (records(o)) {
    for (const auto& r : found) {
      json j;
      j["pair"] = labels_of(m, ElemSet{r.x, r.y});
      j["mode"] = r.mode == RemovalMode::kContract ? "contract" : "delete";
      j["stage"] = stage_name(r.stage);
      j["exchanged"] = labels_of(m, r.exchanged);
      std::cout << j.dump() << "\n";
    }
    return 0;
  }
  if (found.empty()) std::cout << "none\n";
  for (const auto& r : found) std::cout << format_detachable(m, r) << "\n";
  return 0;
}

int cmd_separators(const std::string& path, const Options& o) {
  const Matroid m = load(path).matroid;
  std::vector<StructureReport> found;
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const ElemSet p(bits);
    if (p.size() < 6 || p.size() % 2 != 0 || !is_exactly_3_separating(m, p)) continue;
    if (p.size() == 6)
      for (auto kind : {SeparatorKind::kElongatedQuad, SeparatorKind::kSkewWhiff,
                        SeparatorKind::kTwistedCubeLike})
        if (auto r = detect(kind, m, p)) found.push_back(*r);
    if (auto r = detect_spike_like(m, p)) found.push_back(*r);
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return lex_less(a.support, b.support);
  });
  for (const auto& r : found) {
    if (records(o)) {
      json j;
      j["kind"] = separator_name(r.kind);
      j["support"] = labels_of(m, r.support);
      if (r.kind == SeparatorKind::kSpikeLike) {
        j["legs"] = json::array();
        for (ElemSet leg : r.legs) j["legs"].push_back(labels_of(m, leg));
      } else {
        json roles = json::object();
        const auto& names = separator_roles(r.kind);
        for (std::size_t i = 0; i < names.size(); ++i)
          roles[std::string(names[i])] = m.label(r.labelling[i]);
        j["labelling"] = roles;
      }
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << separator_name(r.kind) << " " << format_set(m, r.support);
    if (r.kind == SeparatorKind::kSpikeLike) {
      std::cout << " legs";
      for (ElemSet leg : r.legs) std::cout << " " << format_set(m, leg);
    } else {
      const auto& names = separator_roles(r.kind);
      for (std::size_t i = 0; i < names.size(); ++i)
        std::cout << " " << names[i] << "=" << m.label(r.labelling[i]);
    }
    std::cout << "\n";
  }
  if (found.empty() && !records(o)) std::cout << "none\n";
  return 0;
}

void print_verdict(const Verdict& v, const Options& o) {
  if (records(o)) {
    std::cout << to_record(v) << "\n";
  } else {
    std::cout << outcome_name(v.outcome) << " " << v.instance << " " << v.check << " " << v.detail
              << "\n";
  }
  if (v.outcome == Outcome::kVacuous) {
    json w;
    w["warning"] = "vacuous";
    w["instance"] = v.instance;
    w["check"] = v.check;
    std::cerr << w.dump() << "\n";
  }
}

std::vector<CorpusEntry> entries_from(const std::vector<std::string>& files) {
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    auto file = load(f);
    out.push_back({file.name, file.matroid});
  }
  return out;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& files, const Options& o) {
  std::vector<Verdict> verdicts;
  auto need = [&](std::size_t k) {
    if (files.size() != k)
      throw MatroidError(ErrorKind::kBadInput,
                         id + " takes " + std::to_string(k) + " file argument(s)");
  };
  const auto& registry = lemma_registry();
  const bool is_lemma = std::any_of(registry.begin(), registry.end(),
                                    [&](const LemmaCheck& l) { return l.id == id; });
  if (id == "registry" || is_lemma) {
    CorpusLimits limits;
    limits.max_elements = o.max_n;
    const auto corpus = files.empty() ? generate_corpus(o.seed, limits) : entries_from(files);
    std::vector<std::string> only;
    if (is_lemma) only.push_back(id);
    verdicts = run_lemma_registry(corpus, only).verdicts;
  } else if (id == "theorem-main" || id == "theorem-triangles") {
    need(2);
    const auto m = load(files[0]);
    const auto n = load(files[1]);
    verdicts.push_back(id == "theorem-main"
                           ? verify_theorem_main(m.matroid, n.matroid, m.name)
                           : verify_theorem_triangles(m.matroid, n.matroid, m.name));
  } else if (id == "foundation") {
    need(2);
    const auto m = load(files[0]);
    const auto n = load(files[1]);
    const auto found = foundation_instances(m.matroid, n.matroid);
    for (const auto& f : found)
      verdicts.push_back(verify_foundation(m.matroid, n.matroid, f.d, f.d_prime, f.y, f.z,
                                           m.name + " d=" + m.matroid.label(f.d) +
                                               " d'=" + m.matroid.label(f.d_prime)));
    if (found.empty()) verdicts.push_back({m.name, "foundation", Outcome::kVacuous, "no instance", 0});
  } else if (id == "construction-spike" || id == "construction-spike-free-tip") {
    need(0);
    verdicts.push_back(verify_construction_spike(id == "construction-spike-free-tip"));
  } else if (id == "construction-twisted") {
    need(0);
    verdicts.push_back(verify_construction_twisted());
  } else {
    throw MatroidError(ErrorKind::kBadInput, "unknown check '" + id + "'");
  }
  bool failed = false;
  for (const auto& v : verdicts) {
    print_verdict(v, o);
    failed = failed || v.outcome == Outcome::kFail;
  }
  return failed ? 1 : 0;
}

int cmd_construct(const std::string& recipe) {
  std::cout << serialize(build_recipe(recipe), recipe_name(recipe));
  return 0;
}

void error_record(const std::string& kind, const std::string& message, int line = 0) {
  json j;
  j["error"] = kind;
  if (line > 0) j["line"] = line;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid analysis and verification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  std::string file, id, recipe;
  std::vector<std::string> files;

  auto* analyze = app.add_subcommand("analyze", "Rank, connectivity, triangles, triads, fans");
  analyze->add_option("file", file)->required();

  auto* detach = app.add_subcommand("detachable", "N-detachable pairs");
  detach->add_option("file", file)->required();
  detach->add_option("--minor", o.minor, "File holding N")->required();
  detach->add_flag("--exchange", o.exchange, "Also search after one delta-wye or wye-delta");

  auto* seps = app.add_subcommand("separators", "Special exactly 3-separating sets");
  seps->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "Run a lemma, theorem or construction check");
  verify->add_option("id", id)->required();
  verify->add_option("files", files);
  verify->add_option("--seed", o.seed, "Corpus seed")->capture_default_str();
  verify->add_option("--max-n", o.max_n, "Largest corpus member")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Print a matroid file for a recipe");
  construct->add_option("recipe", recipe)->required();

  for (auto* sub : {analyze, detach, seps, verify, construct})
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_record("UsageError", e.what());
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(file, o);
    if (*detach) return cmd_detachable(file, o);
    if (*seps) return cmd_separators(file, o);
    if (*verify) return cmd_verify(id, files, o);
    if (*construct) return cmd_construct(recipe);
  } catch (const ParseError& e) {
    error_record("ParseError", e.reason(), e.line());
  } catch (const MatroidError& e) {
    error_record(std::string(error_kind_name(e.kind())), e.what());
  } catch (const IoError& e) {
    error_record("IoError", e.what());
  }
  return 2;
}
