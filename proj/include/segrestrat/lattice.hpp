#ifndef SEGRESTRAT_LATTICE_HPP
#define SEGRESTRAT_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "segrestrat/error.hpp"

namespace sgs {

using Int = long long;

// All lattice arithmetic is exact; silent wraparound is a hard error.
inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in multiplication");
  return out;
}

/// A character of the diagonal torus, as an exponent vector in the epsilon basis.
struct Character {
  std::vector<Int> exponents;

  Character() = default;
  explicit Character(std::vector<Int> e) : exponents(std::move(e)) {
    if (exponents.empty()) fail(errc::invalid_argument, "character must have rank >= 1");
  }

  static Character zero(std::size_t rank) { return Character(std::vector<Int>(rank, 0)); }

  std::size_t rank() const { return exponents.size(); }

  Character operator+(const Character& other) const;
  Character operator-() const;
  Character scaled(Int k) const;

  bool operator==(const Character& other) const = default;
};

/// A cocharacter (one-parameter subgroup of the torus), dual to Character.
struct Cocharacter {
  std::vector<Int> degrees;

  Cocharacter() = default;
  explicit Cocharacter(std::vector<Int> d) : degrees(std::move(d)) {
    if (degrees.empty()) fail(errc::invalid_argument, "cocharacter must have rank >= 1");
  }

  std::size_t rank() const { return degrees.size(); }

  bool operator==(const Cocharacter& other) const = default;
};

/// The canonical pairing <chi, lambda> = sum_i l_i * d_i.
Int pairing(const Character& chi, const Cocharacter& lam);

std::string to_string(const Character& chi);

} // namespace sgs

#endif
