#ifndef SEGRESTRAT_STRATA_HPP
#define SEGRESTRAT_STRATA_HPP

#include <optional>
#include <vector>

#include "segrestrat/parabolic.hpp"

namespace sgs {

struct CurveContext {
  int genus;

  explicit CurveContext(int g) : genus(g) {
    if (g < 2) fail(errc::domain, "curve genus must be >= 2");
  }
};

enum class Nonempty { yes, no, unknown };
enum class DimKind { exact, upper_bound, unknown };

const char* to_string(Nonempty n);
const char* to_string(DimKind k);

/// Catalog entry for one stratum M_X(G, delta; P, s).
struct StratumRecord {
  GroupDescriptor group;
  Int delta = 0;
  ParabolicType parabolic;
  Int s = 0;
  Nonempty nonempty = Nonempty::unknown;
  std::optional<Int> dim;
  DimKind dim_is = DimKind::unknown;
};

/// Upper bound genus * dim(G/P) valid for every bundle.
Int hn_upper_bound(const ParabolicType& p, const CurveContext& ctx);

/// GL_r, maximal parabolic stabilising C^n, vector-bundle degree d.
StratumRecord glr_stratum(int r, int n, Int d, Int s, const CurveContext& ctx);

/// PGL_r, image of the same parabolic, delta taken mod r.
StratumRecord pglr_stratum(int r, int n, Int delta_mod_r, Int s, const CurveContext& ctx);

/// SO_2n (or its Spin cover), Lagrangian parabolic, delta in Z_2.
StratumRecord so2n_stratum(int n, Int delta, Int s, const CurveContext& ctx);

struct SigmaSet {
  std::vector<Int> nonempty;     // s with status yes
  std::vector<Int> unknown_band; // s between the proven bound and the ceiling
};

/// Covered (group, parabolic) families: GL/PGL with a maximal type-A
/// parabolic (parameter n), SO(2n)/Spin(2n) with the Lagrangian parabolic.
/// Other families raise unsupported_family.
SigmaSet sigma_set(const GroupDescriptor& g, Int delta, int n, const CurveContext& ctx);

enum class ClosureRel { below, above, same, incomparable };

const char* to_string(ClosureRel r);

/// Closure order within one family: the smaller congruent s lies in the
/// closure of the larger. `modulus` and `residue` encode the family
/// congruence (modulus 0 or 1 = no constraint).
ClosureRel closure_order(Int s1, Int s2, Int modulus, Int residue);

} // namespace sgs

#endif
