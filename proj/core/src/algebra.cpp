#include "f4/algebra.hpp"

#include <stdexcept>

namespace f4 {

const char* algebra_name(Algebra a) {
  return a == Algebra::compact ? "f4" : "f4star";
}

Algebra algebra_from_name(const std::string& name) {
  if (name == "f4") return Algebra::compact;
  if (name == "f4star") return Algebra::noncompact;
  throw std::invalid_argument("unknown algebra '" + name + "' (expected f4 or f4star)");
}

bool F4Elt::is_zero() const {
  return A.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
}

F4Elt F4Elt::basis(int idx) {
  if (idx < 0 || idx >= kF4Dim) throw std::invalid_argument("F4Elt::basis: index out of range");
  F4Elt p;
  if (idx < kWedgeDim) {
    p.A = basis_wedge(idx);
  } else if (idx < kWedgeDim + 8) {
    p.x = Octonion::basis(idx - kWedgeDim);
  } else if (idx < kWedgeDim + 16) {
    p.y = Octonion::basis(idx - kWedgeDim - 8);
  } else {
    p.z = Octonion::basis(idx - kWedgeDim - 16);
  }
  return p;
}

F4Elt F4Elt::from_parts(MatQ A, Octonion x, Octonion y, Octonion z) {
  if (A.rows() != 8 || A.cols() != 8 || !A.is_skew())
    throw std::invalid_argument("F4Elt: matrix part must be skew 8x8");
  F4Elt p;
  p.A = std::move(A);
  p.x = x;
  p.y = y;
  p.z = z;
  return p;
}

F4Elt operator+(const F4Elt& a, const F4Elt& b) {
  F4Elt r;
  r.A = a.A + b.A;
  r.x = a.x + b.x;
  r.y = a.y + b.y;
  r.z = a.z + b.z;
  return r;
}

F4Elt operator-(const F4Elt& a, const F4Elt& b) {
  F4Elt r;
  r.A = a.A - b.A;
  r.x = a.x - b.x;
  r.y = a.y - b.y;
  r.z = a.z - b.z;
  return r;
}

F4Elt operator-(const F4Elt& a) {
  F4Elt r;
  r.A = -a.A;
  r.x = -a.x;
  r.y = -a.y;
  r.z = -a.z;
  return r;
}

F4Elt operator*(const Rat& s, const F4Elt& a) {
  F4Elt r;
  r.A = s * a.A;
  r.x = s * a.x;
  r.y = s * a.y;
  r.z = s * a.z;
  return r;
}

Vec to_vec52(const F4Elt& p) {
  Vec v(kF4Dim);
  const Vec w = skew_to_wedge_coords(p.A);
  for (int k = 0; k < kWedgeDim; ++k) v[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < 8; ++i) {
    v[kWedgeDim + i] = p.x.c[i];
    v[kWedgeDim + 8 + i] = p.y.c[i];
    v[kWedgeDim + 16 + i] = p.z.c[i];
  }
  return v;
}

F4Elt from_vec52(const Vec& v) {
  if (v.size() != kF4Dim) throw std::invalid_argument("from_vec52: need 52 coordinates");
  F4Elt p;
  p.A = wedge_coords_to_skew(Vec(v.begin(), v.begin() + kWedgeDim));
  for (std::size_t i = 0; i < 8; ++i) {
    p.x.c[i] = v[kWedgeDim + i];
    p.y.c[i] = v[kWedgeDim + 8 + i];
    p.z.c[i] = v[kWedgeDim + 16 + i];
  }
  return p;
}

namespace {

Octonion apply8(const MatQ& M, const Octonion& o) {
  return Octonion::from_coords(M.apply(o.coords()));
}

// Shared shape of the two brackets; pp_sign is -1 for the compact form and
// +1 for the non-compact one on the p x p contributions. The zero guards
// matter: the structure-constant tables and the verification sweeps evaluate
// this on thousands of mostly-zero basis pairs.
F4Elt bracket_impl(const F4Elt& p, const F4Elt& q, int pp_sign) {
  const MatQ& A = p.A;
  const MatQ& B = q.A;
  const Octonion &u = p.x, &v = p.y, &w = p.z;
  const Octonion &x = q.x, &y = q.y, &z = q.z;
  const Rat sgn(pp_sign);
  const bool Az = A.is_zero(), Bz = B.is_zero();

  F4Elt r;
  if (!Az && !Bz) r.A = commutator(A, B);
  if (!u.is_zero() && !x.is_zero()) r.A = r.A - Rat(4) * wedge(u, x);
  if (!v.is_zero() && !y.is_zero()) r.A = r.A + sgn * Rat(4) * lambda2(wedge(v, y));
  if (!w.is_zero() && !z.is_zero()) r.A = r.A + sgn * Rat(4) * lambda(wedge(w, z));

  if (!Az) r.x = apply8(A, x);
  if (!Bz) r.x = r.x - apply8(B, u);
  r.x = r.x + sgn * (conj(mul(y, w)) - conj(mul(v, z)));

  if (!Az) r.y = apply8(lambda(A), y);
  if (!Bz) r.y = r.y - apply8(lambda(B), v);
  r.y = r.y + conj(mul(w, x)) - conj(mul(z, u));

  if (!Az) r.z = apply8(lambda2(A), z);
  if (!Bz) r.z = r.z - apply8(lambda2(B), w);
  r.z = r.z + conj(mul(u, y)) - conj(mul(x, v));
  return r;
}

}  // namespace

F4Elt bracket_c(const F4Elt& p, const F4Elt& q) { return bracket_impl(p, q, -1); }

F4Elt bracket_nc(const F4Elt& p, const F4Elt& q) { return bracket_impl(p, q, +1); }

F4Elt bracket(Algebra alg, const F4Elt& p, const F4Elt& q) {
  return alg == Algebra::compact ? bracket_c(p, q) : bracket_nc(p, q);
}

F4Elt tau(const F4Elt& p) {
  F4Elt r;
  r.A = lambda(p.A);
  r.x = p.y;
  r.y = p.z;
  r.z = p.x;
  return r;
}

Rat inner(const F4Elt& p, const F4Elt& q) {
  Rat oct = 0;
  for (std::size_t i = 0; i < 8; ++i)
    oct += p.x.c[i] * q.x.c[i] + p.y.c[i] * q.y.c[i] + p.z.c[i] * q.z.c[i];
  return Rat(8) * oct - (p.A * q.A).trace();
}

Rat inner_vec(const Vec& a, const Vec& b) {
  if (a.size() != kF4Dim || b.size() != kF4Dim)
    throw std::invalid_argument("inner_vec: need 52 coordinates");
  Rat s = 0;
  for (std::size_t i = 0; i < kWedgeDim; ++i) {
    if (a[i] != 0 && b[i] != 0) s += Rat(2) * a[i] * b[i];
  }
  for (std::size_t i = kWedgeDim; i < kF4Dim; ++i) {
    if (a[i] != 0 && b[i] != 0) s += Rat(8) * a[i] * b[i];
  }
  return s;
}

F4Elt so8_derivation(const MatQ& X, const F4Elt& p) {
  if (X.rows() != 8 || X.cols() != 8 || !X.is_skew())
    throw std::invalid_argument("so8_derivation: X must be skew 8x8");
  F4Elt r;
  r.A = commutator(X, p.A);
  r.x = Octonion::from_coords(X.apply(p.x.coords()));
  r.y = Octonion::from_coords(lambda(X).apply(p.y.coords()));
  r.z = Octonion::from_coords(lambda2(X).apply(p.z.coords()));
  return r;
}

F4Elt jacobi_defect(Algebra alg, const F4Elt& p, const F4Elt& q, const F4Elt& r) {
  return bracket(alg, p, bracket(alg, q, r)) + bracket(alg, q, bracket(alg, r, p)) +
         bracket(alg, r, bracket(alg, p, q));
}

F4Elt cartan_involution(const F4Elt& p) {
  F4Elt r;
  r.A = p.A;
  r.x = p.x;
  r.y = -p.y;
  r.z = -p.z;
  return r;
}

}  // namespace f4
