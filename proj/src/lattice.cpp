#include "segrestrat/lattice.hpp"

#include <sstream>

namespace sgs {

namespace {

void check_same_rank(std::size_t a, std::size_t b) {
  if (a != b)
    fail(errc::dimension_mismatch,
         "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Character Character::operator+(const Character& other) const {
  check_same_rank(rank(), other.rank());
  std::vector<Int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    out[i] = checked_add(exponents[i], other.exponents[i]);
  return Character(std::move(out));
}

Character Character::operator-() const {
  std::vector<Int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_sub(0, exponents[i]);
  return Character(std::move(out));
}

Character Character::scaled(Int k) const {
  std::vector<Int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_mul(k, exponents[i]);
  return Character(std::move(out));
}

Int pairing(const Character& chi, const Cocharacter& lam) {
  check_same_rank(chi.rank(), lam.rank());
  Int acc = 0;
  for (std::size_t i = 0; i < chi.rank(); ++i)
    acc = checked_add(acc, checked_mul(chi.exponents[i], lam.degrees[i]));
  return acc;
}

std::string to_string(const Character& chi) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < chi.rank(); ++i) {
    if (i) out << ',';
    out << chi.exponents[i];
  }
  out << ')';
  return out.str();
}

} // namespace sgs
