#pragma once

#include "f4/geometry.hpp"

#include <map>
#include <optional>
#include <string>

namespace f4 {

// The Lie-algebra half of the polarity criterion: a subalgebra h and a
// candidate section tangent sigma subseteq p* pass iff
// <h, [sigma, sigma]> = 0. The slice-representation half of the criterion
// needs isotropy orbits and is reported as "not evaluated" throughout.
struct PolarityReport {
  Subspace h;
  Subspace sigma;
  Subspace sigma_bracket;  // span{[X,Y] : X,Y basis of sigma}
  bool orthogonality_holds = false;
  struct Witness {
    Vec bracket_elt;
    Vec h_elt;
    Rat pairing;
  };
  std::optional<Witness> witness;  // present iff orthogonality fails
  std::string slice_condition = "not evaluated";
};

// h must be bracket-closed (rejected with a witness pair otherwise) and
// sigma must lie in p*. Exact, first failing pair in basis order.
PolarityReport section_orthogonality(const Subspace& h, const Subspace& sigma);

// The obstruction of the totally geodesic H^8 orbit case: the pairing of
// (L_{e1},0,0,0) from [sigma, sigma] against (R_{e1},0,e1,0) from the
// 2-alpha root space, returned as tr(L_{e1} R_{e1}) = 4. Nonzero certifies
// failure of the orthogonality criterion.
Rat nonpolar_witness_h8();

// Named bracket-closed subalgebras of the worked examples:
//   "n"         the nilpotent 15-dim part of the Iwasawa decomposition
//   "amz"       a + m + z for the codimension-1 coordinate m in g_{+a}
//   "coh2nilp"  m' + z with m' = {(0,x,0,x) : x pure}, 14-dim
// Closure is verified on construction; a failure aborts with a witness.
std::map<std::string, Subspace> example_subalgebras();

// Coordinate subspace of g_{+a} of the given codimension (dropping the last
// codim octonion coordinates).
Subspace coordinate_m(int codim);

// Normalizer of m in k0 = { X in k0 : [X, m] subseteq m }; m must lie in
// g_{+a}. For coordinate subspaces the dimensions are 21, 14, 9, 6 for
// codimension 0, {1,7}, {2,6}, {3,5}; codimension 4 depends on the position
// of m and is reported, not pinned.
Subspace normalizer_nk0(const Subspace& m);

}  // namespace f4
