#ifndef SEGRESTRAT_TESTS_ORACLES_HPP
#define SEGRESTRAT_TESTS_ORACLES_HPP

// Test-only oracles that recompute parabolic data along an independent path:
// instead of expanding roots in the simple-root base, solve for a defining
// rational cocharacter and split the root set by the sign of the pairing.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "segrestrat/parabolic.hpp"

namespace oracles {

struct Frac {
  long long num = 0;
  long long den = 1;

  static Frac make(long long n, long long d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return g ? Frac{n / g, d / g} : Frac{0, 1};
  }

  Frac operator+(const Frac& o) const { return make(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return make(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return make(num * o.den, den * o.num); }
  int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }
};

/// Solve <alpha_i, lambda> = (1 if i omitted else 0) over the simple roots
/// alpha_i by Gaussian elimination; free coordinates are set to zero.
inline std::vector<Frac> defining_cocharacter(const sgs::RootSystem& rs,
                                              const std::vector<int>& omitted) {
  const std::size_t rows = rs.simple_roots.size();
  const std::size_t cols = static_cast<std::size_t>(rs.coord_rank);
  std::vector<std::vector<Frac>> aug(rows, std::vector<Frac>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      aug[i][j] = Frac::make(rs.simple_roots[i].exponents[j], 1);
    bool is_omitted = false;
    for (int k : omitted) is_omitted |= static_cast<std::size_t>(k) == i + 1;
    aug[i][cols] = Frac::make(is_omitted ? 1 : 0, 1);
  }

  std::vector<int> pivot_col(rows, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && aug[piv][col].sign() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[rank]);
    const Frac inv = Frac::make(1, 1) / aug[rank][col];
    for (std::size_t j = col; j <= cols; ++j) aug[rank][j] = aug[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug[i][col].sign() == 0) continue;
      const Frac factor = aug[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        aug[i][j] = aug[i][j] - factor * aug[rank][j];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (aug[i][cols].sign() != 0) throw std::runtime_error("inconsistent system");

  std::vector<Frac> lambda(cols, Frac{0, 1});
  for (std::size_t i = 0; i < rank; ++i) lambda[pivot_col[i]] = aug[i][cols];
  return lambda;
}

inline Frac dot(const sgs::Character& chi, const std::vector<Frac>& lambda) {
  Frac acc{0, 1};
  for (std::size_t j = 0; j < chi.exponents.size(); ++j)
    acc = acc + Frac::make(chi.exponents[j], 1) * lambda[j];
  return acc;
}

/// dim P = torus rank + #{roots alpha with <alpha, lambda> >= 0}.
inline long long parabolic_dim_oracle(const sgs::GroupDescriptor& g,
                                      const std::vector<int>& omitted) {
  const sgs::RootSystem rs = g.root_system();
  const auto lambda = defining_cocharacter(rs, omitted);
  long long count = 0;
  for (const auto& root : rs.roots)
    if (dot(root, lambda).sign() >= 0) ++count;
  return g.torus_rank() + count;
}

} // namespace oracles

#endif
