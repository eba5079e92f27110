#ifndef SEGRESTRAT_FUNCTOR_HPP
#define SEGRESTRAT_FUNCTOR_HPP

#include <optional>
#include <string>

#include "segrestrat/strata.hpp"

namespace sgs {

/// The surjective homomorphisms with finite central kernel treated here.
enum class IsogenyKind {
  adjoint,             // GL(r) -> PGL(r)
  central_quotient,    // SL(r) -> SL(r)/mu(m)
  quotient_to_adjoint, // SL(r)/mu(m) -> PGL(r)
  adjoint_symplectic,  // Sp(2n) -> PSp(2n)
  cover                // Spin(r) -> SO(r)
};

const char* to_string(IsogenyKind k);
IsogenyKind isogeny_kind_parse(const std::string& name);

struct Isogeny {
  IsogenyKind kind;
  GroupDescriptor source;
  GroupDescriptor target;

  /// r is the defining rank parameter (2n for the symplectic/adjoint pair,
  /// r for Spin->SO); m only for the SL(r)/mu(m) kinds.
  static Isogeny make(IsogenyKind kind, int r, int m = 0);

  /// Whether the paper's surjectivity argument applies to the induced map
  /// on moduli for the given source topological type.
  bool moduli_map_surjective(Int delta) const;
};

struct PushforwardResult {
  TopologicalType value; // standard covering-space convention
  /// For SL(r)/mu(m) -> PGL(r) the literature also uses an indexing by
  /// Z_{r/m} with pushforward delta -> m*delta; recorded for comparison.
  std::optional<Int> alternate_convention;
};

PushforwardResult pi1_pushforward(const Isogeny& iso, Int delta);

/// Image parabolic: same omitted simple-root set on the target group.
ParabolicType parabolic_image(const Isogeny& iso, const ParabolicType& p);

/// Transfer a stratum record along the isogeny. s is preserved; the
/// nonemptiness status transfers fully when the moduli map is surjective,
/// and only forward (yes -> yes) otherwise. Dimensions are recomputed from
/// the target family's catalog when covered.
StratumRecord transfer_stratum(const Isogeny& iso, const StratumRecord& rec,
                               const CurveContext& ctx);

} // namespace sgs

#endif
