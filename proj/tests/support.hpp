#pragma once

#include "cohom/exactnum.hpp"
#include "cohom/linalg.hpp"
#include "cohom/poly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <random>
#include <string>

namespace cohom {

// readable gtest failure messages
inline void PrintTo(const AlgNum& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }

} // namespace cohom

namespace cohom::test_support {

inline std::string fixture(const std::string& name) {
  return std::string(COHOM_FIXTURES) + "/" + name;
}

/// Random element with up to `max_keys` radical terms over {1, 2, 3, 5, 6, 10, 15, 30}.
inline AlgNum random_algnum(std::mt19937_64& rng, int max_keys = 3) {
  static const std::uint64_t keys[] = {1, 2, 3, 5, 6, 10, 15, 30};
  std::uniform_int_distribution<int> nkeys(0, max_keys), key(0, 7), num(-9, 9), den(1, 7);
  AlgNum x;
  for (int i = nkeys(rng); i > 0; --i)
    x += AlgNum(num(rng), den(rng)) * AlgNum::sqrt(keys[key(rng)]);
  return x;
}

inline AlgNum random_nonzero(std::mt19937_64& rng, int max_keys = 3) {
  for (;;)
    if (AlgNum x = random_algnum(rng, max_keys); !x.is_zero())
      return x;
}

/// Numeric exp(θ·a) by scaling and squaring of a Taylor series, row-major.
inline std::vector<double> expm(const Mat& a, double theta) {
  const std::size_t n = a.rows();
  std::vector<double> x(n * n), term(n * n), out(n * n);
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x[i * n + j] = theta * a(i, j).to_float();
      norm = std::max(norm, std::abs(x[i * n + j]) * n);
    }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  for (auto& v : x)
    v = std::ldexp(v, -squarings);
  auto mul = [n](const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> r(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j)
          r[i * n + j] += p[i * n + l] * q[l * n + j];
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    term[i * n + i] = out[i * n + i] = 1;
  for (int k = 1; k < 20; ++k) {
    term = mul(term, x);
    for (std::size_t i = 0; i < n * n; ++i) {
      term[i] /= k;
      out[i] += term[i];
    }
  }
  for (int s = 0; s < squarings; ++s)
    out = mul(out, out);
  return out;
}

} // namespace cohom::test_support
