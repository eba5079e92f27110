#include "segrestrat/strata.hpp"

#include <algorithm>

namespace sgs {

namespace {

Int nonneg_mod(Int a, Int m) { return ((a % m) + m) % m; }

/// Largest eps in {0,...,r-1} with base + eps = target (mod r).
Int residue_gap(Int base, Int target, Int r) { return nonneg_mod(target - base, r); }

ParabolicType maximal_type_a_parabolic(const GroupDescriptor& g, int n) {
  return ParabolicType::from_flag_signature(g, {n, g.r - n});
}

} // namespace

const char* to_string(Nonempty n) {
  switch (n) {
    case Nonempty::yes: return "yes";
    case Nonempty::no: return "no";
    case Nonempty::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(DimKind k) {
  switch (k) {
    case DimKind::exact: return "exact";
    case DimKind::upper_bound: return "upper-bound";
    case DimKind::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ClosureRel r) {
  switch (r) {
    case ClosureRel::below: return "below";
    case ClosureRel::above: return "above";
    case ClosureRel::same: return "same";
    case ClosureRel::incomparable: return "incomparable";
  }
  return "?";
}

Int hn_upper_bound(const ParabolicType& p, const CurveContext& ctx) {
  return checked_mul(ctx.genus, static_cast<Int>(quotient_roots(p).size()));
}

StratumRecord glr_stratum(int r, int n, Int d, Int s, const CurveContext& ctx) {
  if (r < 2 || n < 1 || n > r - 1)
    fail(errc::domain, "glr stratum requires r >= 2 and 1 <= n <= r-1");
  const Int g1 = ctx.genus - 1;
  const Int base = checked_mul(checked_mul(static_cast<Int>(n), r - n), g1);
  const Int proven_bound = base + (n - 1);
  const Int eps_bound = base + residue_gap(base, nonneg_mod(n * d, r), r);
  const bool congruent = nonneg_mod(s, r) == nonneg_mod(n * d, r);

  StratumRecord rec;
  rec.group = GroupDescriptor::make(GroupFamily::GL, r);
  rec.delta = d;
  rec.parabolic = maximal_type_a_parabolic(rec.group, n);
  rec.s = s;
  if (!congruent || s <= 0) {
    rec.nonempty = Nonempty::no;
    rec.dim_is = DimKind::unknown;
  } else if (s <= proven_bound) {
    rec.nonempty = Nonempty::yes;
    rec.dim = checked_add(checked_mul(static_cast<Int>(r) * r - n * (r - n), g1), s + 1);
    rec.dim_is = DimKind::exact;
  } else if (s > std::max(proven_bound, eps_bound)) {
    rec.nonempty = Nonempty::no;
    rec.dim_is = DimKind::unknown;
  } else {
    rec.nonempty = Nonempty::unknown;
    rec.dim_is = DimKind::unknown;
  }
  return rec;
}

StratumRecord pglr_stratum(int r, int n, Int delta_mod_r, Int s, const CurveContext& ctx) {
  if (r < 2 || n < 1 || n > r - 1)
    fail(errc::domain, "pglr stratum requires r >= 2 and 1 <= n <= r-1");
  const Int delta = nonneg_mod(delta_mod_r, r);
  StratumRecord rec = glr_stratum(r, n, delta, s, ctx);
  rec.group = GroupDescriptor::make(GroupFamily::PGL, r);
  rec.delta = delta;
  rec.parabolic = maximal_type_a_parabolic(rec.group, n);
  if (rec.nonempty == Nonempty::yes) {
    const Int g1 = ctx.genus - 1;
    rec.dim = checked_add(checked_mul(static_cast<Int>(r) * r - n * (r - n) - 1, g1), s);
    rec.dim_is = DimKind::exact;
  }
  return rec;
}

StratumRecord so2n_stratum(int n, Int delta, Int s, const CurveContext& ctx) {
  if (n < 2) fail(errc::domain, "SO(2n) stratum requires n >= 2");
  const Int g1 = ctx.genus - 1;
  const Int nn = n;
  const Int proven_bound = (nn - 1) * nn * g1 / 2 + 2;
  const bool congruent = (nn - 1 <= 1) || s % (nn - 1) == 0;

  StratumRecord rec;
  rec.group = GroupDescriptor::make(GroupFamily::SO, 2 * n);
  rec.delta = nonneg_mod(delta, 2);
  rec.parabolic = ParabolicType::from_isotropic_flag(rec.group, {n});
  rec.s = s;
  const Int hn = hn_upper_bound(rec.parabolic, ctx);
  if (!congruent || s <= 0) {
    rec.nonempty = Nonempty::no;
  } else if (s <= proven_bound) {
    rec.nonempty = Nonempty::yes;
    rec.dim = checked_add(nn * (3 * nn - 1) * g1 / 2, s);
    rec.dim_is = DimKind::exact;
  } else if (s > hn) {
    rec.nonempty = Nonempty::no;
  } else {
    rec.nonempty = Nonempty::unknown;
  }
  return rec;
}

SigmaSet sigma_set(const GroupDescriptor& g, Int delta, int n, const CurveContext& ctx) {
  SigmaSet out;
  auto record_for = [&](Int s) -> StratumRecord {
    switch (g.family) {
      case GroupFamily::GL: return glr_stratum(g.r, n, delta, s, ctx);
      case GroupFamily::PGL: return pglr_stratum(g.r, n, delta, s, ctx);
      case GroupFamily::SO:
        if (g.r % 2 == 0) return so2n_stratum(g.r / 2, delta, s, ctx);
        fail(errc::unsupported_family,
             "no stratum formulas for odd orthogonal groups are catalogued");
      case GroupFamily::Spin:
        if (g.r % 2 == 0) {
          if (delta != 0) fail(errc::domain, "pi1(Spin) is trivial; delta must be 0");
          return so2n_stratum(g.r / 2, 0, s, ctx);
        }
        fail(errc::unsupported_family,
             "no stratum formulas for odd spin groups are catalogued");
      default:
        fail(errc::unsupported_family,
             "no stratum formulas for " + g.name() + " are catalogued");
    }
  };

  ParabolicType p = g.is_type_a() ? ParabolicType::from_flag_signature(g, {n, g.r - n})
                                  : ParabolicType::from_isotropic_flag(g, {g.r / 2});
  const Int hn = hn_upper_bound(p, ctx);
  for (Int s = 1; s <= hn; ++s) {
    const StratumRecord rec = record_for(s);
    if (rec.nonempty == Nonempty::yes) out.nonempty.push_back(s);
    else if (rec.nonempty == Nonempty::unknown) out.unknown_band.push_back(s);
  }
  return out;
}

ClosureRel closure_order(Int s1, Int s2, Int modulus, Int residue) {
  if (modulus > 1) {
    const Int res = nonneg_mod(residue, modulus);
    if (nonneg_mod(s1, modulus) != res || nonneg_mod(s2, modulus) != res)
      return ClosureRel::incomparable;
  }
  if (s1 == s2) return ClosureRel::same;
  if (s1 <= 0 || s2 <= 0) return ClosureRel::incomparable;
  return s1 < s2 ? ClosureRel::below : ClosureRel::above;
}

} // namespace sgs
