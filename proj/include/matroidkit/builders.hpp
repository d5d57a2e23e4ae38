#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

Matroid uniform(int r, int n);

// Paving matroid of rank r whose non-spanning circuits are the listed r-sets.
Matroid paving(int r, int n, const std::vector<ElemSet>& nonspanning_circuits,
               std::vector<std::string> labels = {});

// Cycle matroid of a graph on vertices 0..v-1; edges may be parallel.
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                std::vector<std::string> labels = {});

// Matroid of the columns of a matrix over GF(prime); columns are given as
// coordinate vectors of equal length.
Matroid vector_matroid(const std::vector<std::vector<int>>& columns, int prime,
                       std::vector<std::string> labels = {});

// Wheel with r spokes, elements ordered s1 r1 s2 r2 ... with triangles
// {s_i, r_i, s_{i+1}} and rim r_i joining the ends of s_i and s_{i+1}.
Matroid wheel(int r);
Matroid whirl(int r);

// M(K4) labelled a b c a' b' c': {a,b,c} is a triangle whose complement is a
// triad, and {a,b',c'}, {a',b,c'}, {a',b',c} are the other triangles.
Matroid mk4();
Matroid fano();
// Fano with the line {a,b,d} relaxed.
Matroid non_fano();

// Free spike with tip t on t x1 y1 ... xr yr, rank r.
Matroid spike(int r);

Matroid relax(const Matroid& m, ElemSet x);
Matroid relabel(const Matroid& m, int e, std::string label);
// Reorders the ground set: element i of the result is element order[i] of m.
Matroid reorder(const Matroid& m, const std::vector<int>& order);

Matroid parallel_add(const Matroid& m, int e, std::string label);
Matroid series_add(const Matroid& m, int e, std::string label);

// Single-element extension by the principal modular cut of flats containing f.
Matroid principal_extension(const Matroid& m, ElemSet f, std::string label);

// Single-element extension by the modular cut generated by the given flats.
Matroid modular_cut_extension(const Matroid& m, const std::vector<ElemSet>& generators,
                              std::string label);

// Generalized parallel connection of m1 and m2 along the elements whose labels
// they share. Requires the two restrictions to the shared set to agree and the
// closure of the shared set in m1 to be a modular flat. The result lists the
// elements of m1 followed by the remaining elements of m2.
//
// With require_modular = false the same flat-rank formula is applied without
// the modularity check; the result is still validated and must restrict to m1
// and m2, otherwise construction fails.
Matroid parallel_connection(const Matroid& m1, const Matroid& m2, bool require_modular = true);

Matroid delta_wye(const Matroid& m, ElemSet triangle);
Matroid wye_delta(const Matroid& m, ElemSet triad);

// Element ids by label; throws BadElement for unknown labels.
int element(const Matroid& m, const std::string& label);
ElemSet elements(const Matroid& m, const std::vector<std::string>& labels);

}  // namespace matroidkit
