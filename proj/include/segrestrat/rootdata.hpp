#ifndef SEGRESTRAT_ROOTDATA_HPP
#define SEGRESTRAT_ROOTDATA_HPP

#include <string>
#include <vector>

#include "segrestrat/lattice.hpp"

namespace sgs {

enum class RootType { A, B, C, D };

/// A classical root system written in the epsilon basis of the diagonal torus.
/// For type A the coordinate length is the torus rank r of the ambient GL_r
/// (the system itself is A_{r-1}); for B/C/D it equals the rank n.
struct RootSystem {
  RootType type;
  int rank;       // Cartan rank: r-1 for A (with coord_rank r), n for B/C/D
  int coord_rank; // length of the exponent vectors
  std::vector<Character> roots;
  std::vector<Character> simple_roots;

  /// Coefficients of each root in the simple-root base, indexed parallel
  /// to `roots`. Every root is an all-nonnegative or all-nonpositive
  /// combination.
  std::vector<std::vector<Int>> simple_coords;

  bool is_positive(std::size_t root_index) const;
  int root_index_of(const Character& c) const; // -1 if absent
};

RootSystem build_root_system(RootType type, int coord_rank);

const char* root_type_name(RootType t);

enum class GroupFamily { GL, SL, SLmod, PGL, Sp, PSp, SO, Spin };

/// Fundamental group of one of the supported groups: free part of rank
/// `free_rank` plus a cyclic torsion factor of order `torsion` (0 = none).
struct Pi1Group {
  int free_rank = 0;
  Int torsion = 0;

  bool trivial() const { return free_rank == 0 && torsion == 0; }
  std::string to_string() const;
};

/// A named classical reductive group from the closed enumeration
/// GL(r), SL(r), SL(r)/mu(m), PGL(r), Sp(2n), PSp(2n), SO(r), Spin(r).
struct GroupDescriptor {
  GroupFamily family;
  int r; // GL/SL/SLmod/PGL/SO/Spin: the r in the name; Sp/PSp: 2n
  int m = 0; // SLmod only: order of the central subgroup, m | r

  static GroupDescriptor parse(const std::string& name);
  static GroupDescriptor make(GroupFamily family, int r, int m = 0);

  std::string name() const;
  Int dim() const;
  Int dim_center() const;
  int torus_rank() const;  // rank of a maximal torus
  int coord_rank() const;  // epsilon-coordinate length (r for type A, n for B/C/D)
  Pi1Group pi1() const;
  RootType root_type() const;
  RootSystem root_system() const;
  bool is_type_a() const;

  bool operator==(const GroupDescriptor& other) const = default;
};

RootSystem root_system_of(const GroupDescriptor& g);

/// (g-1) * dim G + dim Z(G); requires genus >= 2.
Int moduli_dimension(const GroupDescriptor& g, int genus);

/// An element of pi1 of a fixed group, torsion residues kept reduced.
struct TopologicalType {
  GroupDescriptor group;
  Int value = 0;

  static TopologicalType make(const GroupDescriptor& g, Int value);
  std::string to_string() const;
};

} // namespace sgs

#endif
