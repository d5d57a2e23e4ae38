#pragma once

#include "matroidkit/matroid.hpp"

namespace matroidkit {

// Fano plane with triangle {t,y,z} where y' and z' are added parallel to y
// and z. Elements: t y c z e f g y' z'.
Matroid fano_prime();
// Fano plane on x y c z e f g with t added freely on the line {x,y,z} and
// y', z' parallel to y, z.
Matroid fano_double_prime();

// spike(r) with the leg {t,x1,y1} relabelled {t,y',z'}.
Matroid spike_on_leg(int r);

// P_T(F, spike_on_leg(r)) \ T for T = {t,y',z'}, with F = fano_prime() or
// fano_double_prime(). The spike part is {x2,y2,...,xr,yr}.
Matroid spike_construction(int r, bool free_tip = false);

// Paving matroid of rank 4 on p1 p2 q1 q2 s1 s2 t1 t2 with non-spanning
// circuits t1t2p1q1, t1t2p2q2, p1p2q1q2, p1p2s1s2, q1q2s1s2.
Matroid u8();
// u8() extended by z on the lines t1t2, p1q1 and p2q2.
Matroid u8_plus();
// Non-Fano on t1 t2 z a b c d with triangle {t1,t2,z}.
Matroid non_fano_on_triangle();
// P_T(u8_plus(), non_fano_on_triangle()) \ z for T = {t1,t2,z}.
Matroid twisted_construction();

// Sparse paving matroids of rank 4 on the six roles of a separator plus x, y,
// where the roles form an elongated quad, a skew-whiff or a twisted
// cube-like set.
Matroid elongated_quad_example();
Matroid skew_whiff_example();
Matroid twisted_cube_example();

}  // namespace matroidkit
