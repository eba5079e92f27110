#include "segrestrat/functor.hpp"

namespace sgs {

namespace {

Int nonneg_mod(Int a, Int m) { return ((a % m) + m) % m; }

} // namespace

const char* to_string(IsogenyKind k) {
  switch (k) {
    case IsogenyKind::adjoint: return "adjoint";
    case IsogenyKind::central_quotient: return "central-quotient";
    case IsogenyKind::quotient_to_adjoint: return "quotient-to-adjoint";
    case IsogenyKind::adjoint_symplectic: return "adjoint-symplectic";
    case IsogenyKind::cover: return "cover";
  }
  return "?";
}

IsogenyKind isogeny_kind_parse(const std::string& name) {
  if (name == "adjoint") return IsogenyKind::adjoint;
  if (name == "central-quotient") return IsogenyKind::central_quotient;
  if (name == "quotient-to-adjoint") return IsogenyKind::quotient_to_adjoint;
  if (name == "adjoint-symplectic") return IsogenyKind::adjoint_symplectic;
  if (name == "cover") return IsogenyKind::cover;
  fail(errc::parse, "unknown isogeny kind: '" + name + "'");
}

Isogeny Isogeny::make(IsogenyKind kind, int r, int m) {
  switch (kind) {
    case IsogenyKind::adjoint:
      return {kind, GroupDescriptor::make(GroupFamily::GL, r),
              GroupDescriptor::make(GroupFamily::PGL, r)};
    case IsogenyKind::central_quotient:
      return {kind, GroupDescriptor::make(GroupFamily::SL, r),
              GroupDescriptor::make(GroupFamily::SLmod, r, m)};
    case IsogenyKind::quotient_to_adjoint:
      return {kind, GroupDescriptor::make(GroupFamily::SLmod, r, m),
              GroupDescriptor::make(GroupFamily::PGL, r)};
    case IsogenyKind::adjoint_symplectic:
      return {kind, GroupDescriptor::make(GroupFamily::Sp, r),
              GroupDescriptor::make(GroupFamily::PSp, r)};
    case IsogenyKind::cover:
      return {kind, GroupDescriptor::make(GroupFamily::Spin, r),
              GroupDescriptor::make(GroupFamily::SO, r)};
  }
  fail(errc::internal, "unreachable");
}

bool Isogeny::moduli_map_surjective(Int) const {
  switch (kind) {
    case IsogenyKind::adjoint:            // Tsen: every PGL_r-bundle lifts
    case IsogenyKind::adjoint_symplectic: // onto the trivial PSp component
    case IsogenyKind::cover:              // onto the trivial SO component
      return true;
    case IsogenyKind::central_quotient:
    case IsogenyKind::quotient_to_adjoint:
      return false;
  }
  return false;
}

PushforwardResult pi1_pushforward(const Isogeny& iso, Int delta) {
  const TopologicalType source_type = TopologicalType::make(iso.source, delta);
  PushforwardResult out;
  switch (iso.kind) {
    case IsogenyKind::adjoint:
      out.value = TopologicalType::make(iso.target, nonneg_mod(source_type.value, iso.target.r));
      return out;
    case IsogenyKind::central_quotient:
      out.value = TopologicalType::make(iso.target, 0);
      return out;
    case IsogenyKind::quotient_to_adjoint: {
      const Int r = iso.source.r;
      const Int m = iso.source.m;
      // standard covering convention: pi1(SL_r/mu_m) = Z_m, delta -> (r/m)*delta
      out.value = TopologicalType::make(iso.target, nonneg_mod((r / m) * source_type.value, r));
      out.alternate_convention = nonneg_mod(m * source_type.value, r);
      return out;
    }
    case IsogenyKind::adjoint_symplectic:
    case IsogenyKind::cover:
      out.value = TopologicalType::make(iso.target, 0);
      return out;
  }
  fail(errc::internal, "unreachable");
}

ParabolicType parabolic_image(const Isogeny& iso, const ParabolicType& p) {
  if (!(p.group == iso.source))
    fail(errc::invalid_argument, "parabolic does not belong to the isogeny source " +
                                     iso.source.name());
  if (!p.is_proper())
    fail(errc::degenerate_parabolic, "image of the degenerate parabolic is not tracked");
  return ParabolicType::from_omitted(iso.target, p.omitted);
}

StratumRecord transfer_stratum(const Isogeny& iso, const StratumRecord& rec,
                               const CurveContext& ctx) {
  if (!(rec.group == iso.source))
    fail(errc::invalid_argument, "stratum record does not belong to the isogeny source");

  StratumRecord out;
  out.group = iso.target;
  out.delta = pi1_pushforward(iso, rec.delta).value.value;
  out.parabolic = parabolic_image(iso, rec.parabolic);
  out.s = rec.s;

  if (iso.moduli_map_surjective(rec.delta)) {
    out.nonempty = rec.nonempty;
  } else {
    out.nonempty = rec.nonempty == Nonempty::yes ? Nonempty::yes : Nonempty::unknown;
  }

  // Dimensions come from the target family's catalogued formula, if any.
  out.dim_is = DimKind::unknown;
  if (out.nonempty == Nonempty::yes) {
    const Int g1 = ctx.genus - 1;
    if (iso.target.family == GroupFamily::PGL && out.parabolic.omitted.size() == 1) {
      const Int r = iso.target.r;
      const Int n = out.parabolic.omitted.front();
      out.dim = checked_add(checked_mul(r * r - n * (r - n) - 1, g1), out.s);
      out.dim_is = DimKind::exact;
    } else if (iso.target.family == GroupFamily::SO && iso.target.r % 2 == 0 &&
               out.parabolic.omitted.size() == 1 &&
               out.parabolic.omitted.front() >= iso.target.r / 2 - 1) {
      const Int n = iso.target.r / 2;
      out.dim = checked_add(n * (3 * n - 1) * g1 / 2, out.s);
      out.dim_is = DimKind::exact;
    }
  }
  return out;
}

} // namespace sgs
