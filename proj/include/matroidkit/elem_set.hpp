#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace matroidkit {

inline constexpr int kMaxElements = 24;

// A subset of a ground set {0, ..., n-1}, n <= 24, stored as a bit mask.
class ElemSet {
 public:
  using Word = std::uint32_t;

  class Iterator {
   public:
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Word rest_;
  };

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(Word bits) : bits_(bits) {}
  constexpr ElemSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= Word{1} << e;
  }

  static constexpr ElemSet full(int n) {
    return ElemSet(n >= 32 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr ElemSet single(int e) { return ElemSet(Word{1} << e); }
  static ElemSet from(const std::vector<int>& elements) {
    ElemSet s;
    for (int e : elements) s.insert(e);
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 31 - std::countl_zero(bits_); }

  constexpr void insert(int e) { bits_ |= Word{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(Word{1} << e); }
  constexpr ElemSet with(int e) const { return ElemSet(bits_ | (Word{1} << e)); }
  constexpr ElemSet without(int e) const {
    return ElemSet(bits_ & ~(Word{1} << e));
  }
  constexpr ElemSet complement(int n) const {
    return ElemSet(~bits_ & full(n).bits_);
  }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  constexpr ElemSet operator^(ElemSet o) const { return ElemSet(bits_ ^ o.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator-=(ElemSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElemSet&) const = default;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }

 private:
  Word bits_ = 0;
};

// Order on sets by their sorted element lists compared lexicographically.
constexpr bool lex_less(ElemSet a, ElemSet b) {
  ElemSet::Word diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  ElemSet::Word low = diff & (~diff + 1);
  // Both sets agree below `low`; the set holding `low` continues with the
  // smaller element unless the other set has already ended.
  ElemSet::Word above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(ElemSet a, ElemSet b) const { return lex_less(a, b); }
};

// Bit-compresses `x` onto the positions of `kept`: the i-th element of `kept`
// becomes element i. Used to move sets into the coordinates of a minor.
constexpr ElemSet compress(ElemSet x, ElemSet kept) {
  ElemSet::Word out = 0;
  int i = 0;
  for (int e : kept) {
    if (x.contains(e)) out |= ElemSet::Word{1} << i;
    ++i;
  }
  return ElemSet(out);
}

// Inverse of compress.
constexpr ElemSet expand(ElemSet y, ElemSet kept) {
  ElemSet::Word out = 0;
  int i = 0;
  for (int e : kept) {
    if (y.contains(i)) out |= ElemSet::Word{1} << e;
    ++i;
  }
  return ElemSet(out);
}

// Calls f(ElemSet) for every k-subset of {0..n-1} in lexicographic order of
// element lists. Stops early when f returns false. Returns false if stopped.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElemSet s;
    for (int i : idx) s.insert(i);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// As above, but over k-subsets of `base` (expressed in original ids).
template <typename F>
bool for_each_subset_of_size(ElemSet base, int k, F&& f) {
  return for_each_combination(base.size(), k,
                              [&](ElemSet s) { return f(expand(s, base)); });
}

}  // namespace matroidkit
