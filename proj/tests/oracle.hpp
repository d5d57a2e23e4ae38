#pragma once

// Brute-force reference implementations used to derive expected values.
// They work on plain sorted vectors and share no code with the library.

#include <algorithm>
#include <set>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace oracle {

using Set = std::vector<int>;
using Family = std::vector<Set>;

inline Set to_set(matroidkit::ElemSet x) { return x.elements(); }

inline Family bases_of(const matroidkit::Matroid& m) {
  Family out;
  for (auto b : m.bases()) out.push_back(to_set(b));
  return out;
}

inline int intersection_size(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

inline int rank(const Family& bases, const Set& x) {
  int best = 0;
  for (const auto& b : bases) best = std::max(best, intersection_size(b, x));
  return best;
}

inline Set complement(int n, const Set& x) {
  Set out;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(x.begin(), x.end(), i)) out.push_back(i);
  return out;
}

inline int corank(const Family& bases, int n, const Set& x) {
  int r = rank(bases, complement(n, {}));
  return static_cast<int>(x.size()) - r + rank(bases, complement(n, x));
}

inline Set closure(const Family& bases, int n, const Set& x) {
  int rx = rank(bases, x);
  Set out;
  for (int e = 0; e < n; ++e) {
    Set y = x;
    if (!std::binary_search(y.begin(), y.end(), e)) {
      y.push_back(e);
      std::sort(y.begin(), y.end());
    }
    if (rank(bases, y) == rx) out.push_back(e);
  }
  return out;
}

inline Family dual_bases(const Family& bases, int n) {
  Family out;
  for (const auto& b : bases) out.push_back(complement(n, b));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

inline bool exchange_holds(const Family& bases) {
  std::set<Set> family(bases.begin(), bases.end());
  for (const auto& b1 : bases)
    for (const auto& b2 : bases)
      for (int x : b1) {
        if (std::binary_search(b2.begin(), b2.end(), x)) continue;
        bool ok = false;
        for (int y : b2) {
          if (std::binary_search(b1.begin(), b1.end(), y)) continue;
          Set c;
          for (int z : b1)
            if (z != x) c.push_back(z);
          c.push_back(y);
          std::sort(c.begin(), c.end());
          if (family.count(c)) ok = true;
        }
        if (!ok) return false;
      }
  return true;
}

inline Family circuits(const Family& bases, int n) {
  Family out;
  for (const auto& s : all_subsets(n)) {
    if (s.empty() || rank(bases, s) == static_cast<int>(s.size())) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      Set t = s;
      t.erase(t.begin() + i);
      minimal = rank(bases, t) == static_cast<int>(t.size());
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All 2^n subsets as lists; feasible for n <= 12 with these helpers.
inline int lambda(const Family& bases, int n, const Set& x) {
  int r = rank(bases, complement(n, {}));
  return rank(bases, x) + rank(bases, complement(n, x)) - r;
}

inline bool three_connected(const Family& bases, int n) {
  for (const auto& s : all_subsets(n)) {
    int a = static_cast<int>(s.size());
    int b = n - a;
    int l = lambda(bases, n, s);
    if (a >= 1 && b >= 1 && l < 1) return false;
    if (a >= 2 && b >= 2 && l < 2) return false;
  }
  return true;
}

}  // namespace oracle
