#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroidkit/elem_set.hpp"
#include "matroidkit/errors.hpp"

namespace matroidkit {

// A matroid on {0..n-1} given by its family of bases. Values are immutable;
// derived tables (rank of every subset, circuits, flats) are filled lazily on
// first use and shared between copies.
class Matroid {
 public:
  // Builds a matroid from a basis family that is already known to satisfy the
  // basis axioms. Bases are deduplicated and sorted. Use validate() for
  // untrusted input.
  static Matroid unchecked(int n, std::vector<ElemSet> bases,
                           std::vector<std::string> labels = {});

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElemSet ground() const { return ElemSet::full(n_); }
  const std::vector<ElemSet>& bases() const { return bases_; }
  bool is_basis(ElemSet x) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_[e]; }
  std::optional<int> find_label(std::string_view label) const;
  Matroid with_labels(std::vector<std::string> labels) const;

  int rank(ElemSet x) const;
  // Rank of every subset, indexed by bit mask; valid while the matroid lives.
  const std::uint8_t* rank_table() const;
  int corank(ElemSet x) const { return x.size() - rank_ + rank(ground() - x); }
  bool is_independent(ElemSet x) const { return rank(x) == x.size(); }
  ElemSet closure(ElemSet x) const;
  ElemSet coclosure(ElemSet x) const;
  bool is_flat(ElemSet x) const { return closure(x) == x; }
  bool is_loop(int e) const { return rank(ElemSet::single(e)) == 0; }
  bool is_coloop(int e) const { return corank(ElemSet::single(e)) == 0; }

  // Sorted in lexicographic order of element lists.
  const std::vector<ElemSet>& circuits() const;
  const std::vector<ElemSet>& cocircuits() const;
  const std::vector<ElemSet>& flats() const;
  bool is_circuit(ElemSet x) const;
  bool is_cocircuit(ElemSet x) const;

  // Number of bases containing each element.
  const std::vector<int>& basis_degrees() const;

  // Equality of ground-set size and basis family; labels are not compared.
  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

 private:
  struct Tables;

  Matroid() = default;
  const Tables& tables() const;

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElemSet> bases_;
  std::vector<std::string> labels_;
  std::shared_ptr<Tables> tables_;
};

// Returns the matroid with the given bases iff the family is nonempty,
// equicardinal and satisfies basis exchange. Labels default to e0, e1, ...
Matroid validate(const std::vector<ElemSet>& bases, int n,
                 std::vector<std::string> labels = {});

std::vector<std::string> default_labels(int n);
std::string format_set(const Matroid& m, ElemSet x);

Matroid dual(const Matroid& m);

// Minors keep the surviving elements in increasing id order, renumbered
// densely, with their labels.
Matroid delete_set(const Matroid& m, ElemSet d);
Matroid contract_set(const Matroid& m, ElemSet c);
Matroid minor(const Matroid& m, ElemSet c, ElemSet d);
Matroid restrict_to(const Matroid& m, ElemSet x);

struct Reduction {
  Matroid matroid;
  // For each element of the input: the retained element (in output ids)
  // that represents it, or -1 for removed loops (coloops for cosimplify).
  std::vector<int> representative;
};

Reduction simplify(const Matroid& m);
Reduction cosimplify(const Matroid& m);

// Bijection from the elements of the first matroid onto those of the second.
struct IsoWitness {
  std::vector<int> mapping;
};

std::optional<IsoWitness> is_isomorphic(const Matroid& a, const Matroid& b);

}  // namespace matroidkit
