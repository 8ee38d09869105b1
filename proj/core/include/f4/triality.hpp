#pragma once

#include "f4/linalg.hpp"
#include "f4/octonion.hpp"

#include <utility>

namespace f4 {

// so(8) as skew 8x8 matrices over Rat, spanned by the wedges
// e_i ^ e_j = e_i e_j^t - e_j e_i^t. The 28-dimensional coordinate order is
// the lexicographic list of pairs (i, j) with i < j; this order is frozen and
// shared with the JSON exports.
inline constexpr int kWedgeDim = 28;

MatQ wedge(const Octonion& x, const Octonion& y);
MatQ basis_wedge(int k);

int wedge_index(int i, int j);            // requires i < j
std::pair<int, int> wedge_pair(int k);

Vec skew_to_wedge_coords(const MatQ& A);  // A must be 8x8 skew
MatQ wedge_coords_to_skew(const Vec& w);

// The triality automorphisms of so(8), stored as exact 28x28 matrices on the
// wedge basis. pi and kappa are computed from their generator formulas,
// lambda = pi * kappa, lambda2 = lambda * lambda.
const MatQ& pi_matrix();
const MatQ& kappa_matrix();
const MatQ& lambda_matrix();
const MatQ& lambda2_matrix();

// Applications to skew matrices; non-skew input is rejected.
MatQ pi(const MatQ& A);
MatQ kappa(const MatQ& A);
MatQ lambda(const MatQ& A);
MatQ lambda2(const MatQ& A);

// kappa(lambda2(A))(xy) - x * (lambda(A) y) - (A x) * y. Identically zero;
// the exhaustive sweep over basis tuples is part of the verification suite.
Octonion triality_defect(const MatQ& A, const Octonion& x, const Octonion& y);

// so(9) modelled on so(8) x O with
// [(A,x),(B,y)] = (AB - BA - 4 x^y, Ay - Bx), embedded into skew 9x9
// matrices as [[A, 2x], [-2x^t, 0]].
struct So9Elt {
  MatQ A = MatQ(8, 8);
  Octonion x;

  bool operator==(const So9Elt& other) const = default;
};

MatQ so9_embed(const So9Elt& v);
So9Elt so9_bracket(const So9Elt& v, const So9Elt& w);

// Subalgebras of so(8) used by the geometry of the standard embeddings:
// so(7) = wedges of imaginary units, so(4) = upper-left 4x4 block.
Subspace so7_wedge_span();
Subspace so4_wedge_span();

}  // namespace f4
