#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

std::vector<ElemSet> triangles(const Matroid& m);
std::vector<ElemSet> triads(const Matroid& m);
// Rank-2 flats with at least three elements and no loops or parallel pairs.
std::vector<ElemSet> segments(const Matroid& m);
std::vector<ElemSet> cosegments(const Matroid& m);
// 4-element sets that are both circuits and cocircuits.
std::vector<ElemSet> quads(const Matroid& m);

enum class FanRole { kSpoke, kRim };

struct FanRecord {
  std::vector<int> elements;
  std::vector<FanRole> roles;
  bool maximal = true;
};

bool is_fan_ordering(const Matroid& m, const std::vector<int>& order);

// Every fan ordering of at least three elements.
std::vector<std::vector<int>> fan_orderings(const Matroid& m);

// Maximal fans, each with its lexicographically least fan ordering. Sorted by
// that ordering. Requires M 3-connected.
std::vector<FanRecord> fans(const Matroid& m);

struct FlanRecord {
  std::vector<int> elements;
  bool maximal = true;
};

bool is_flan_ordering(const Matroid& m, const std::vector<int>& order);

// Maximal flans with their lexicographically least flan ordering. Requires M
// 3-connected.
std::vector<FlanRecord> flans(const Matroid& m);
// Every flan ordering of at least four elements.
std::vector<std::vector<int>> flan_orderings(const Matroid& m);

enum class SeparatorKind { kSpikeLike, kElongatedQuad, kSkewWhiff, kTwistedCubeLike };

std::string_view separator_name(SeparatorKind kind);

struct StructureReport {
  SeparatorKind kind;
  ElemSet support;
  // Spike-like: the legs. Otherwise empty.
  std::vector<ElemSet> legs;
  // Elements in the order of the definition's names: p1 p2 q1 q2 q3 q4
  // (elongated quad), s1 s2 t1 t2 u1 u2 (skew-whiff), p1 p2 q1 q2 s1 s2
  // (twisted cube-like).
  std::vector<int> labelling;
  std::vector<ElemSet> circuits;
  std::vector<ElemSet> cocircuits;
};

// Role names for the labelling of each six-element separator.
const std::vector<std::string_view>& separator_roles(SeparatorKind kind);

// All four throw NotExactlyThreeSeparating unless P is exactly 3-separating;
// the six-element ones throw BadSize unless |P| = 6. Circuits and cocircuits
// of M inside P must match the definition's lists exactly (for the
// elongated quad, the quad Q is on both lists).
std::optional<StructureReport> detect_spike_like(const Matroid& m, ElemSet p);
std::optional<StructureReport> detect_elongated_quad(const Matroid& m, ElemSet p);
std::optional<StructureReport> detect_skew_whiff(const Matroid& m, ElemSet p);
std::optional<StructureReport> detect_twisted_cube_like(const Matroid& m, ElemSet p);

std::optional<StructureReport> detect(SeparatorKind kind, const Matroid& m, ElemSet p);

}  // namespace matroidkit
