#pragma once

#include "f4/linalg.hpp"
#include "f4/rat.hpp"

#include <array>

namespace f4 {

// The Cayley algebra O over Rat, with basis e0..e7, e0 = 1. The products of
// imaginary units are derived once at startup from seven seed products plus
// the unit rules, anticommutativity of distinct imaginary units, and the
// quaternion cycle rule e_i e_j = e_k  =>  e_j e_k = e_i, e_k e_i = e_j.
// The derived table is validated against the alternative laws before use.
struct Octonion {
  std::array<Rat, 8> c{};

  Octonion() = default;
  static Octonion basis(int i);
  static Octonion unit();  // e0

  bool operator==(const Octonion& other) const = default;
  bool is_zero() const;

  Vec coords() const;
  static Octonion from_coords(const Vec& v);
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a);
Octonion operator*(const Rat& s, const Octonion& a);
Octonion mul(const Octonion& a, const Octonion& b);
Octonion operator*(const Octonion& a, const Octonion& b);

Octonion conj(const Octonion& a);
Rat re(const Octonion& a);
Octonion pure_part(const Octonion& a);
bool is_pure(const Octonion& a);

// Squared Euclidean norm, multiplicative: norm2(xy) = norm2(x) norm2(y).
Rat norm2(const Octonion& a);

// (ab)c - a(bc); alternating in its three arguments.
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

// Matrices of left/right multiplication and T_a = L_a + R_a on R^8.
MatQ lmat(const Octonion& a);
MatQ rmat(const Octonion& a);
MatQ tmat(const Octonion& a);

// Signed product of basis units: e_i e_j = mul_sign(i,j) e_{mul_index(i,j)}.
int mul_sign(int i, int j);
int mul_index(int i, int j);

}  // namespace f4
