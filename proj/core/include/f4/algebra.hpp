#pragma once

#include "f4/octonion.hpp"
#include "f4/triality.hpp"

namespace f4 {

// Elements of both real forms live in the same coordinate space
// so(8) x O x O x O; which algebra an element belongs to is decided by the
// bracket applied to it, not by the type. The 52 global coordinates are the
// 28 wedge coordinates followed by the three octonion slots x, y, z; this
// order is frozen and shared with the JSON exports.
inline constexpr int kF4Dim = 52;

enum class Algebra { compact, noncompact };

const char* algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& name);

struct F4Elt {
  MatQ A = MatQ(8, 8);  // skew
  Octonion x, y, z;

  bool operator==(const F4Elt& other) const = default;
  bool is_zero() const;

  static F4Elt basis(int idx);  // 0..51 in the global coordinate order
  static F4Elt from_parts(MatQ A, Octonion x, Octonion y, Octonion z);
};

F4Elt operator+(const F4Elt& a, const F4Elt& b);
F4Elt operator-(const F4Elt& a, const F4Elt& b);
F4Elt operator-(const F4Elt& a);
F4Elt operator*(const Rat& s, const F4Elt& a);

Vec to_vec52(const F4Elt& p);
F4Elt from_vec52(const Vec& v);

// Bracket of the compact form:
//   C = AB - BA - 4 u^x - 4 lambda^2(v^y) - 4 lambda(w^z)
//   r = Ax - Bu + conj(vz) - conj(yw)
//   s = lambda(A)y - lambda(B)v + conj(wx) - conj(zu)
//   t = lambda^2(A)z - lambda^2(B)w + conj(uy) - conj(xv)
F4Elt bracket_c(const F4Elt& p, const F4Elt& q);

// Bracket of the non-compact form; the sign of every p x p contribution
// (the lambda^2(v^y), lambda(w^z) and conj(vz), conj(yw) terms) is flipped.
F4Elt bracket_nc(const F4Elt& p, const F4Elt& q);

F4Elt bracket(Algebra alg, const F4Elt& p, const F4Elt& q);

// The order-3 automorphism (A, x, y, z) -> (lambda(A), y, z, x).
F4Elt tau(const F4Elt& p);

// Ad-invariant scalar product 8(u.x + v.y + w.z) - tr(AB). Positive definite
// and tau-invariant; on coordinates it is diagonal with weight 2 on the
// wedge block and weight 8 on the octonion slots.
Rat inner(const F4Elt& p, const F4Elt& q);
Rat inner_vec(const Vec& a, const Vec& b);

// Infinitesimal so(8) action ([X,A], Xx, lambda(X)y, lambda^2(X)z); agrees
// with bracket(alg, (X,0,0,0), p) in both algebras.
F4Elt so8_derivation(const MatQ& X, const F4Elt& p);

// Cyclic sum [p,[q,r]] + [q,[r,p]] + [r,[p,q]]; identically zero.
F4Elt jacobi_defect(Algebra alg, const F4Elt& p, const F4Elt& q, const F4Elt& r);

// Cartan involution of the non-compact form: identity on k = so(8) x O x 0 x 0,
// minus identity on p* = 0 x 0 x O x O.
F4Elt cartan_involution(const F4Elt& p);

}  // namespace f4
