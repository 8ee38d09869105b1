#pragma once

#include "f4/algebra.hpp"

#include <random>

namespace f4::testing {

// Deterministic generators for property-style tests.
class Gen {
 public:
  explicit Gen(unsigned seed = 987654321) : rng_(seed) {}

  Rat rat(int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng_), den(rng_));
  }

  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& c : v) c = rat();
    return v;
  }

  Octonion octonion() {
    Octonion o;
    for (auto& c : o.c) c = rat();
    return o;
  }

  MatQ skew8() {
    MatQ m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) {
        m(i, j) = rat();
        m(j, i) = -m(i, j);
      }
    }
    return m;
  }

  MatQ mat(std::size_t rows, std::size_t cols) {
    MatQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(-4, 4);
    return m;
  }

  F4Elt elt() { return F4Elt::from_parts(skew8(), octonion(), octonion(), octonion()); }

  int index(int n) {
    std::uniform_int_distribution<int> d(0, n - 1);
    return d(rng_);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace f4::testing
