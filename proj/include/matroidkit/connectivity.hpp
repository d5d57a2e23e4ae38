#pragma once

#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

// r(X) + r(E-X) - r(M)
int lambda(const Matroid& m, ElemSet x);

inline bool is_k_separating(const Matroid& m, ElemSet x, int k) {
  return lambda(m, x) <= k - 1;
}
inline bool is_exactly_3_separating(const Matroid& m, ElemSet x) {
  return lambda(m, x) == 2;
}

struct SeparationReport {
  ElemSet side;
  int k = 0;
  int lambda = 0;
  bool exact = false;
  bool vertical = false;
  bool cyclic = false;
  // Elements e in cl(X-e) and cl(Y-e) (guts) or the dual closures (coguts).
  ElemSet guts;
  ElemSet coguts;
};

SeparationReport describe_separation(const Matroid& m, ElemSet side, int k);

// Every k-separation once; the reported side is the part holding the
// lowest element. Sorted by side.
std::vector<SeparationReport> separations(const Matroid& m, int k);

bool is_connected(const Matroid& m);
bool is_3_connected(const Matroid& m);

struct ZSeparation {
  ElemSet x;
  int z = -1;
  ElemSet y;
};

// (X,{z},Y) with (X+z,Y) and (X,Y+z) vertical 3-separations and z in
// cl(X) and cl(Y). X holds the lowest element of E-z. Requires M 3-connected.
std::vector<ZSeparation> vertical_3_separations(const Matroid& m);
std::vector<ZSeparation> cyclic_3_separations(const Matroid& m);
bool is_vertical_3_separation(const Matroid& m, ElemSet x, int z, ElemSet y);
bool is_cyclic_3_separation(const Matroid& m, ElemSet x, int z, ElemSet y);

// Smallest set containing X that is both closed and coclosed.
ElemSet full_closure(const Matroid& m, ElemSet x);

enum class GutsClass { kGuts, kCoguts, kNeither };

// Requires (X,Y) to be an exactly 3-separating partition, x in X, |X| >= 3.
GutsClass classify_guts(const Matroid& m, ElemSet x_side, ElemSet y_side, int x);

enum class Blocking { kNotBlocked, kBlocked, kFullyBlocked };

// X is given in the ids of M and must avoid d; M\d must be 3-connected with X
// exactly 3-separating in M\d.
Blocking blocks(const Matroid& m, int d, ElemSet x);

// Ordered partition whose every prefix union is 3-separating.
bool is_path_of_3_separations(const Matroid& m, const std::vector<ElemSet>& parts);

}  // namespace matroidkit
