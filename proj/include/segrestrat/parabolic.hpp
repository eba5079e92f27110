#ifndef SEGRESTRAT_PARABOLIC_HPP
#define SEGRESTRAT_PARABOLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "segrestrat/rootdata.hpp"

namespace sgs {

/// A standard parabolic subgroup, given by the set of simple roots omitted
/// from the Levi (1-based indices). All omitted = Borel; none omitted = G
/// itself, representable but rejected by the Segre operations.
struct ParabolicType {
  GroupDescriptor group;
  std::vector<int> omitted; // sorted, 1-based simple-root indices

  static ParabolicType from_omitted(const GroupDescriptor& g, std::vector<int> omitted);

  /// Type A: block sizes r_1,...,r_t with sum r.
  static ParabolicType from_flag_signature(const GroupDescriptor& g,
                                           const std::vector<int>& blocks);

  /// Types B/C/D: strictly increasing isotropic flag dimensions <= n.
  /// For type D with a maximal (dimension n) step, `lagrangian_class`
  /// selects one of the two non-conjugate families.
  static ParabolicType from_isotropic_flag(const GroupDescriptor& g,
                                           const std::vector<int>& dims,
                                           int lagrangian_class = 1);

  static ParabolicType borel(const GroupDescriptor& g);

  bool is_proper() const { return !omitted.empty(); }

  /// Type A only: recover the block sizes from the omitted set.
  std::vector<int> flag_signature() const;

  std::string describe() const;

  bool operator==(const ParabolicType& other) const = default;
};

/// One factor of the Levi. GL factors carry a degree; the residual
/// symplectic/orthogonal factor of an isotropic-flag parabolic does not
/// (its character lattice is trivial).
struct LeviBlock {
  GroupFamily family;
  int param; // GL: block size; Sp: 2n; SO: r
  bool carries_degree;

  std::string name() const;
};

std::vector<LeviBlock> levi_blocks(const ParabolicType& p);

/// Roots of g whose root spaces lie in g/p (negatives of the roots of the
/// unipotent radical); |result| = dim G/P. Sorted lexicographically.
std::vector<Character> quotient_roots(const ParabolicType& p);

/// Roots of p itself (positive roots plus the Levi's negative roots).
std::vector<Character> parabolic_roots(const ParabolicType& p);

/// det of the isotropy representation of P on g/p: the sum of quotient_roots.
Character isotropy_det_char(const ParabolicType& p);

Int parabolic_dim(const ParabolicType& p); // torus rank + |roots of p|

/// The degree of a P-bundle: one integer per degree-carrying Levi block.
struct NumericalType {
  ParabolicType parabolic;
  std::vector<Int> block_degrees;

  static NumericalType make(const ParabolicType& p, std::vector<Int> degrees);
};

/// Number of degree entries a numerical type on p must have.
std::size_t degree_slot_count(const ParabolicType& p);

/// Total degree of the induced G-bundle, i.e. the image degree evaluated on
/// det. Empty for groups with trivial character lattice.
std::optional<Int> degree_pushforward(const NumericalType& d);

} // namespace sgs

#endif
