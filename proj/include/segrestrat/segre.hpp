#ifndef SEGRESTRAT_SEGRE_HPP
#define SEGRESTRAT_SEGRE_HPP

#include "segrestrat/parabolic.hpp"

namespace sgs {

/// Torus-coordinate cocharacter reproducing the block pairing: the degree of
/// each block is placed on its first coordinate, remaining coordinates zero.
/// Any block-constant character is insensitive to the choice.
Cocharacter expand_to_torus(const NumericalType& d);

/// <[sigma], det iota>: the degree of the restricted vertical tangent bundle
/// of one P-reduction of the given numerical type. This is the value of a
/// single reduction, not a minimum over reductions.
Int segre_value(const NumericalType& d);

} // namespace sgs

#endif
