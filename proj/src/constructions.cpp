#include "matroidkit/constructions.hpp"

#include "matroidkit/builders.hpp"

namespace matroidkit {

namespace {

// The line {a,b,d} of fano() plays {x,y,z}.
Matroid fano_xyz() {
  return fano().with_labels({"x", "y", "c", "z", "e", "f", "g"});
}

}  // namespace

Matroid fano_prime() {
  Matroid m = fano_xyz();
  m = parallel_add(m, element(m, "y"), "y'");
  m = parallel_add(m, element(m, "z"), "z'");
  return relabel(m, element(m, "x"), "t");
}

Matroid fano_double_prime() {
  Matroid m = fano_xyz();
  m = principal_extension(m, m.closure(elements(m, {"x", "y"})), "t");
  m = parallel_add(m, element(m, "y"), "y'");
  return parallel_add(m, element(m, "z"), "z'");
}

Matroid spike_on_leg(int r) {
  Matroid s = spike(r);
  s = relabel(s, element(s, "x1"), "y'");
  return relabel(s, element(s, "y1"), "z'");
}

Matroid spike_construction(int r, bool free_tip) {
  Matroid p = parallel_connection(free_tip ? fano_double_prime() : fano_prime(),
                                  spike_on_leg(r));
  return delete_set(p, elements(p, {"t", "y'", "z'"}));
}

Matroid u8() {
  std::vector<std::string> labels{"p1", "p2", "q1", "q2", "s1", "s2", "t1", "t2"};
  Matroid plain = uniform(4, 8).with_labels(labels);
  auto set = [&](std::vector<std::string> ls) { return elements(plain, ls); };
  return paving(4, 8,
                {set({"t1", "t2", "p1", "q1"}), set({"t1", "t2", "p2", "q2"}),
                 set({"p1", "p2", "q1", "q2"}), set({"p1", "p2", "s1", "s2"}),
                 set({"q1", "q2", "s1", "s2"})},
                labels);
}

Matroid u8_plus() {
  Matroid m = u8();
  return modular_cut_extension(
      m, {elements(m, {"t1", "t2"}), elements(m, {"p1", "q1"}), elements(m, {"p2", "q2"})},
      "z");
}

Matroid non_fano_on_triangle() {
  // non_fano() has lines bce cdf deg efa fgb gac; {a,b,d} is relaxed.
  Matroid nf = non_fano();
  Matroid m = reorder(nf, {element(nf, "e"), element(nf, "f"), element(nf, "a"),
                           element(nf, "b"), element(nf, "c"), element(nf, "d"),
                           element(nf, "g")});
  return m.with_labels({"t1", "t2", "z", "a", "b", "c", "d"});
}

Matroid twisted_construction() {
  Matroid p = parallel_connection(u8_plus(), non_fano_on_triangle(), false);
  return delete_set(p, ElemSet::single(element(p, "z")));
}

namespace {

Matroid sparse_paving_on(const std::vector<std::string>& labels,
                         const std::vector<std::vector<std::string>>& hyperplanes) {
  Matroid plain = uniform(4, 8).with_labels(labels);
  std::vector<ElemSet> sets;
  for (const auto& h : hyperplanes) sets.push_back(elements(plain, h));
  return paving(4, 8, sets, labels);
}

}  // namespace

Matroid elongated_quad_example() {
  return sparse_paving_on({"p1", "p2", "q1", "q2", "q3", "q4", "x", "y"},
                          {{"p1", "p2", "q1", "q2"},
                           {"p1", "p2", "q3", "q4"},
                           {"q1", "q2", "q3", "q4"},
                           {"q2", "q4", "x", "y"},
                           {"q1", "q3", "x", "y"},
                           {"p1", "p2", "x", "y"}});
}

Matroid skew_whiff_example() {
  return sparse_paving_on({"s1", "s2", "t1", "t2", "u1", "u2", "x", "y"},
                          {{"s1", "s2", "t2", "u1"},
                           {"s1", "t1", "t2", "u2"},
                           {"s2", "t1", "u1", "u2"},
                           {"u1", "u2", "x", "y"},
                           {"t1", "t2", "x", "y"},
                           {"s1", "s2", "x", "y"}});
}

Matroid twisted_cube_example() {
  return sparse_paving_on({"p1", "p2", "q1", "q2", "s1", "s2", "x", "y"},
                          {{"p1", "p2", "s1", "s2"},
                           {"q1", "q2", "s1", "s2"},
                           {"p1", "p2", "q1", "q2"},
                           {"p2", "q2", "x", "y"},
                           {"p1", "q1", "x", "y"}});
}

}  // namespace matroidkit
