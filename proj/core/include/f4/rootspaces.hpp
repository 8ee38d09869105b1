#pragma once

#include "f4/algebra.hpp"
#include "f4/structure.hpp"

#include <vector>

namespace f4 {

// Distinguished subspaces of the non-compact form, in global coordinates:
//   k  = so(8) x O x 0 x 0                      (36)
//   p* = 0 x 0 x O x O                          (16)
//   a  = span{(0,0,e,0)}                        (1)
//   g_{+a}  = {(0,-conj(x),0,x)}                (8)
//   g_{-a}  = {(0, conj(x),0,x)}                (8)
//   g_{+2a} = {( R_p,0,p,0), p pure}            (7)
//   g_{-2a} = {(-R_p,0,p,0), p pure}            (7)
//   k0 = {(lambda2(X),0,0,0), X in so(7)}       (21)
Subspace k_space();
Subspace p_star_space();
Subspace a_space();
Subspace v_space();        // g_{+a}
Subspace z_space();        // g_{+2a}
Subspace k0_space();
Subspace n_space();        // g_{+a} + g_{+2a}
Subspace an_space();       // a + n
Subspace parabolic_space();  // k0 + a + n

struct RootSpaceDecomp {
  Subspace g_m2a, g_ma, g_0, g_a, g_2a;  // dims 7, 8, 22, 8, 7
  Subspace k0;                           // 21
  Subspace a;                            // 1
};

// Builds the root space decomposition and verifies the eigenvalue relations
// [H, xi] = beta(H) xi exactly for H = (0,0,e,0) on every basis vector; a
// failure aborts with the offending basis vector.
RootSpaceDecomp root_decomposition();

// Coordinates on the maximal parabolic k0 + a + n: an so(7) matrix (acting
// before the lambda^2 twist), the a-coefficient, an octonion for g_{+a}, and
// a pure octonion for g_{+2a}.
struct IwasawaCoords {
  MatQ A = MatQ(8, 8);  // skew with zero first row and column
  Rat s;
  Octonion x;
  Octonion p;  // pure

  static IwasawaCoords make(MatQ A, Rat s, Octonion x, Octonion p);
};

// (A,s,x,p) -> (lambda2(A) + R_p, -conj(x), s e + p, x); injective, image is
// the 37-dimensional parabolic subalgebra.
F4Elt iota(const IwasawaCoords& c);

// Bracket in Iwasawa coordinates:
//   ([A,B], 0, lambda(A)y - lambda(B)x + sy - tx,
//    Aq - Bp + 2sq - 2tp + x conj(y) - y conj(x));
// satisfies iota(an_bracket(c1,c2)) = bracket_nc(iota(c1), iota(c2)).
IwasawaCoords an_bracket(const IwasawaCoords& c1, const IwasawaCoords& c2);

// Is S closed under the bracket? On failure *witness receives indices of an
// offending basis pair.
bool is_bracket_closed(const StructureTable& table, const Subspace& S,
                       std::pair<int, int>* witness = nullptr);

// Span of all brackets [S, T].
Subspace bracket_span(const StructureTable& table, const Subspace& S, const Subspace& T);

// Descending chains S, [S,S], [S,[S,S]], ... resp. S, [S,S], [[S,S],[S,S]],
// ... of the non-compact bracket, computed to stabilization. The input must
// be a subalgebra; otherwise std::invalid_argument with a witness pair.
std::vector<Subspace> lower_central_series(const Subspace& S);
std::vector<Subspace> derived_series(const Subspace& S);

}  // namespace f4
