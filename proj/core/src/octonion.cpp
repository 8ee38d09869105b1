#include "f4/octonion.hpp"

#include <stdexcept>

namespace f4 {

namespace {

struct MulTable {
  std::array<std::array<int, 8>, 8> idx{};
  std::array<std::array<int, 8>, 8> sign{};
};

MulTable derive_table() {
  MulTable t;
  std::array<std::array<bool, 8>, 8> filled{};

  auto set = [&](int i, int j, int k, int s) {
    if (filled[i][j]) {
      if (t.idx[i][j] != k || t.sign[i][j] != s)
        throw std::logic_error("octonion table derivation: inconsistent product");
      return;
    }
    t.idx[i][j] = k;
    t.sign[i][j] = s;
    filled[i][j] = true;
  };

  // unit and square rules
  for (int j = 0; j < 8; ++j) set(0, j, j, 1);
  for (int i = 1; i < 8; ++i) {
    set(i, 0, i, 1);
    set(i, i, 0, -1);
  }

  // seed products e_i e_j = e_k; each line generates a quaternion triple
  const int seeds[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                           {5, 3, 6}, {6, 1, 7}, {7, 2, 5}};
  for (const auto& s : seeds) {
    const int i = s[0], j = s[1], k = s[2];
    set(i, j, k, 1);
    set(j, i, k, -1);
    set(j, k, i, 1);
    set(k, j, i, -1);
    set(k, i, j, 1);
    set(i, k, j, -1);
  }

  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!filled[i][j]) throw std::logic_error("octonion table derivation: incomplete table");

  // validate the alternative laws on all basis pairs
  auto prod = [&](int i, int j) { return std::pair<int, int>(t.sign[i][j], t.idx[i][j]); };
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      {
        // (xx)y = x(xy)
        auto [s1, xx] = prod(x, x);
        auto [s2, l] = prod(xx, y);
        auto [s3, xy] = prod(x, y);
        auto [s4, r] = prod(x, xy);
        if (l != r || s1 * s2 != s3 * s4)
          throw std::logic_error("octonion table derivation: left alternative law fails");
      }
      {
        // (xy)y = x(yy)
        auto [s1, xy] = prod(x, y);
        auto [s2, l] = prod(xy, y);
        auto [s3, yy] = prod(y, y);
        auto [s4, r] = prod(x, yy);
        if (l != r || s1 * s2 != s3 * s4)
          throw std::logic_error("octonion table derivation: right alternative law fails");
      }
    }
  }

  // validate norm multiplicativity on two-unit sums: for x = e_a + e_b,
  // y = e_c + e_d the product is a sum of four signed units and must have
  // squared norm 4, which pins the cross structure of the table
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) {
        for (int d = c + 1; d < 8; ++d) {
          std::array<int, 8> coords{};
          coords[static_cast<std::size_t>(t.idx[a][c])] += t.sign[a][c];
          coords[static_cast<std::size_t>(t.idx[a][d])] += t.sign[a][d];
          coords[static_cast<std::size_t>(t.idx[b][c])] += t.sign[b][c];
          coords[static_cast<std::size_t>(t.idx[b][d])] += t.sign[b][d];
          int norm = 0;
          for (const int v : coords) norm += v * v;
          if (norm != 4)
            throw std::logic_error("octonion table derivation: norm multiplicativity fails");
        }
      }
    }
  }
  return t;
}

const MulTable& table() {
  static const MulTable t = derive_table();
  return t;
}

}  // namespace

Octonion Octonion::basis(int i) {
  Octonion o;
  o.c[static_cast<std::size_t>(i)] = 1;
  return o;
}

Octonion Octonion::unit() { return basis(0); }

bool Octonion::is_zero() const {
  for (const auto& v : c) {
    if (v != 0) return false;
  }
  return true;
}

Vec Octonion::coords() const { return Vec(c.begin(), c.end()); }

Octonion Octonion::from_coords(const Vec& v) {
  if (v.size() != 8) throw std::invalid_argument("Octonion::from_coords: need 8 coordinates");
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c[i] = v[i];
  return o;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Octonion operator-(const Octonion& a) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

Octonion operator*(const Rat& s, const Octonion& a) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
  return r;
}

Octonion mul(const Octonion& a, const Octonion& b) {
  const MulTable& t = table();
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (b.c[j] == 0) continue;
      const Rat p = a.c[i] * b.c[j];
      const std::size_t k = static_cast<std::size_t>(t.idx[i][j]);
      if (t.sign[i][j] > 0)
        r.c[k] += p;
      else
        r.c[k] -= p;
    }
  }
  return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) { return mul(a, b); }

Octonion conj(const Octonion& a) {
  Octonion r;
  r.c[0] = a.c[0];
  for (std::size_t i = 1; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

Rat re(const Octonion& a) { return a.c[0]; }

Octonion pure_part(const Octonion& a) {
  Octonion r = a;
  r.c[0] = 0;
  return r;
}

bool is_pure(const Octonion& a) { return a.c[0] == 0; }

Rat norm2(const Octonion& a) {
  Rat s = 0;
  for (const auto& v : a.c) s += v * v;
  return s;
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

MatQ lmat(const Octonion& a) {
  MatQ m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion col = mul(a, Octonion::basis(j));
    for (std::size_t i = 0; i < 8; ++i) m(i, static_cast<std::size_t>(j)) = col.c[i];
  }
  return m;
}

MatQ rmat(const Octonion& a) {
  MatQ m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion col = mul(Octonion::basis(j), a);
    for (std::size_t i = 0; i < 8; ++i) m(i, static_cast<std::size_t>(j)) = col.c[i];
  }
  return m;
}

MatQ tmat(const Octonion& a) { return lmat(a) + rmat(a); }

int mul_sign(int i, int j) { return table().sign[i][j]; }
int mul_index(int i, int j) { return table().idx[i][j]; }

}  // namespace f4
