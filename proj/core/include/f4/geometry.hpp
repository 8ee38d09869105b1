#pragma once

#include "f4/rootspaces.hpp"

#include <optional>
#include <string>

namespace f4 {

// Shorthand (y, z) for (0, 0, y, z) in p* = O x O.
struct PStarVector {
  Octonion y, z;
};

F4Elt pstar_elt(const PStarVector& v);

// Labels of the totally geodesic subspace classes: the hyperbolic spaces
// H^1..H^8, the three hyperbolic planes over R, C, H (RH2, CH2, HH2) and the
// full space. Signatures outside the validated table classify as
// Unclassified, never as a guess.
enum class TgLabel {
  H1, H2, H3, H4, H5, H6, H7, H8,
  RH2, CH2, HH2,
  Full,
  Unclassified,
};

std::string label_name(TgLabel label);
TgLabel label_from_name(const std::string& name);

struct TripleSystemCheck {
  bool ok = false;
  // Basis indices of an offending triple when ok is false.
  std::optional<std::array<int, 3>> witness;
};

// [[L,L],L] subseteq L under the non-compact bracket, checked on all basis
// triples. L must be contained in p*.
TripleSystemCheck is_lie_triple(const Subspace& L);

// Smallest bracket-closed subspace containing S (iterated span of brackets).
Subspace generated_subalgebra(Algebra alg, const Subspace& S);

// Sectional curvature of the plane spanned by orthogonal X, Y in p*, in the
// normalization where the octonion-slot basis vectors count as unit vectors:
// K = 64 <[X,Y],[X,Y]> / (|X|^2 |Y|^2) for the compact form, negated for the
// non-compact one. Non-orthogonal or zero inputs are rejected.
Rat sectional_curvature(Algebra alg, const PStarVector& X, const PStarVector& Y);

// Standard representative of each class, as a subspace of p* in global
// coordinates: H^m is the span of the first m y-slot coordinates, RH2 is
// span{(e,0),(0,e)}, CH2 is C x C, HH2 is H x H, Full is p*.
Subspace std_triple(TgLabel label);

// Classification by the pair (dim L, dim of the generated subalgebra), with
// the (2,3) tie between H2 and RH2 broken by the sectional curvature of the
// plane (32 resp. 8). The signature table is built from the standard
// representatives on first use.
TgLabel classify_triple_system(const Subspace& L);

// so(4) + lambda(so(4)) + lambda^2(so(4)), a 9-dimensional subalgebra of
// so(8) isomorphic to sp(1)^3; wedge coordinates.
Subspace sp13();

// Block-diagonal so(4) + so(4) inside so(8), 12-dimensional; wedge coords.
Subspace sp14();

// sp13 x H x H x H inside the non-compact form, 21-dimensional, bracket
// closed; global coordinates.
Subspace sp12_algebra();

// { X in ambient : [X, s] = 0 for all s in S } resp.
// { X in ambient : [X, S] subseteq S }, canonical bases.
Subspace centralizer_in(Algebra alg, const Subspace& S, const Subspace& ambient);
Subspace normalizer_in(Algebra alg, const Subspace& S, const Subspace& ambient);

}  // namespace f4
