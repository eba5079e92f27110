#include "segrestrat.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "segrestrat/functor.hpp"
#include "segrestrat/gl3borel.hpp"
#include "segrestrat/segre.hpp"

using json = nlohmann::json;

struct sgs_group {
  sgs::GroupDescriptor desc;
};

struct sgs_parabolic {
  sgs::ParabolicType type;
};

namespace {

thread_local std::string g_last_error;

sgs_status status_of(sgs::errc code) {
  switch (code) {
    case sgs::errc::parse: return SGS_ERR_PARSE;
    case sgs::errc::dimension_mismatch: return SGS_ERR_DIMENSION;
    case sgs::errc::domain: return SGS_ERR_DOMAIN;
    case sgs::errc::degenerate_parabolic: return SGS_ERR_DEGENERATE_PARABOLIC;
    case sgs::errc::unsupported_family: return SGS_ERR_UNSUPPORTED_FAMILY;
    case sgs::errc::overflow: return SGS_ERR_OVERFLOW;
    case sgs::errc::invalid_argument: return SGS_ERR_INVALID_ARGUMENT;
    case sgs::errc::internal: return SGS_ERR_INTERNAL;
  }
  return SGS_ERR_INTERNAL;
}

template <typename Fn>
sgs_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SGS_OK;
  } catch (const sgs::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SGS_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out_json, const json& result, const json& warnings = json::array()) {
  json payload;
  payload["result"] = result;
  payload["warnings"] = warnings;
  *out_json = copy_out(payload.dump());
}

const char* family_name(sgs::GroupFamily f) {
  switch (f) {
    case sgs::GroupFamily::GL: return "GL";
    case sgs::GroupFamily::SL: return "SL";
    case sgs::GroupFamily::SLmod: return "SL/mu";
    case sgs::GroupFamily::PGL: return "PGL";
    case sgs::GroupFamily::Sp: return "Sp";
    case sgs::GroupFamily::PSp: return "PSp";
    case sgs::GroupFamily::SO: return "SO";
    case sgs::GroupFamily::Spin: return "Spin";
  }
  return "?";
}

json group_payload(const sgs::GroupDescriptor& g) {
  json out;
  out["name"] = g.name();
  out["family"] = family_name(g.family);
  out["dim"] = g.dim();
  out["dim_center"] = g.dim_center();
  out["torus_rank"] = g.torus_rank();
  out["coord_rank"] = g.coord_rank();
  out["pi1"] = g.pi1().to_string();
  out["root_type"] = sgs::root_type_name(g.root_type());
  return out;
}

json character_payload(const sgs::Character& c) { return json(c.exponents); }

json parabolic_payload(const sgs::ParabolicType& p) {
  json out;
  out["group"] = p.group.name();
  out["omitted_simple_roots"] = p.omitted;
  out["description"] = p.describe();
  out["proper"] = p.is_proper();
  json blocks = json::array();
  for (const auto& b : sgs::levi_blocks(p)) {
    json jb;
    jb["name"] = b.name();
    jb["carries_degree"] = b.carries_degree;
    blocks.push_back(jb);
  }
  out["levi_blocks"] = blocks;
  if (p.is_proper()) {
    out["dim"] = sgs::parabolic_dim(p);
    out["codim"] = sgs::quotient_roots(p).size();
  }
  return out;
}

json stratum_payload(const sgs::StratumRecord& rec) {
  json out;
  out["group"] = rec.group.name();
  out["delta"] = rec.delta;
  out["parabolic"] = rec.parabolic.describe();
  out["s"] = rec.s;
  out["nonempty"] = sgs::to_string(rec.nonempty);
  if (rec.dim) out["dim"] = *rec.dim;
  out["dim_kind"] = sgs::to_string(rec.dim_is);
  return out;
}

json gl3_point_payload(const sgs::gl3::BorelPoint& pt) {
  json out;
  out["d"] = pt.d;
  out["delta"] = pt.delta;
  out["s_bound"] = pt.s_bound;
  out["color"] = sgs::gl3::to_string(pt.color);
  if (pt.dim_upper) out["dim_upper"] = *pt.dim_upper;
  if (pt.dim_exact) out["dim_exact"] = *pt.dim_exact;
  out["stratum_s"] = pt.stratum.serialize();
  if (pt.has_parents) {
    out["closure_parents"] = json::array({pt.closure_parents[0], pt.closure_parents[1]});
  }
  if (!pt.note.empty()) out["note"] = pt.note;
  return out;
}

/// Rebuild the catalogued parabolic for the sigma/stratum families.
sgs::ParabolicType catalog_parabolic(const sgs::GroupDescriptor& g, int n) {
  if (g.is_type_a()) return sgs::ParabolicType::from_flag_signature(g, {n, g.r - n});
  return sgs::ParabolicType::from_isotropic_flag(g, {g.r / 2});
}

sgs::StratumRecord stratum_for(const sgs::GroupDescriptor& g, int n, long long delta,
                               long long s, const sgs::CurveContext& ctx) {
  switch (g.family) {
    case sgs::GroupFamily::GL: return sgs::glr_stratum(g.r, n, delta, s, ctx);
    case sgs::GroupFamily::PGL: return sgs::pglr_stratum(g.r, n, delta, s, ctx);
    case sgs::GroupFamily::SO:
    case sgs::GroupFamily::Spin:
      if (g.r % 2 != 0)
        sgs::fail(sgs::errc::unsupported_family,
                  "no stratum formulas for odd orthogonal groups are catalogued");
      if (g.family == sgs::GroupFamily::Spin && delta != 0)
        sgs::fail(sgs::errc::domain, "pi1(Spin) is trivial; delta must be 0");
      return sgs::so2n_stratum(g.r / 2, delta, s, ctx);
    default:
      sgs::fail(sgs::errc::unsupported_family,
                "no stratum formulas for " + g.name() + " are catalogued");
  }
}

} // namespace

extern "C" {

const char* sgs_version(void) { return SGS_VERSION; }

const char* sgs_last_error(void) { return g_last_error.c_str(); }

void sgs_string_free(char* s) { delete[] s; }

sgs_status sgs_group_parse(const char* name, sgs_group** out) {
  return guarded([&] {
    if (!name || !out) sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out = new sgs_group{sgs::GroupDescriptor::parse(name)};
  });
}

void sgs_group_free(sgs_group* g) { delete g; }

sgs_status sgs_group_json(const sgs_group* g, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    emit(out_json, group_payload(g->desc));
  });
}

sgs_status sgs_roots_json(const sgs_group* g, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const sgs::RootSystem rs = g->desc.root_system();
    json result;
    result["type"] = sgs::root_type_name(rs.type);
    result["rank"] = rs.rank;
    result["coord_rank"] = rs.coord_rank;
    json simple = json::array();
    for (const auto& s : rs.simple_roots) simple.push_back(character_payload(s));
    result["simple_roots"] = simple;
    json roots = json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      json jr;
      jr["coords"] = character_payload(rs.roots[i]);
      jr["positive"] = rs.is_positive(i);
      jr["simple_coeffs"] = rs.simple_coords[i];
      roots.push_back(jr);
    }
    result["roots"] = roots;
    emit(out_json, result);
  });
}

sgs_status sgs_parabolic_from_flag(const sgs_group* g, const int* blocks, size_t count,
                                   sgs_parabolic** out) {
  return guarded([&] {
    if (!g || !out || (!blocks && count))
      sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out = new sgs_parabolic{sgs::ParabolicType::from_flag_signature(
        g->desc, std::vector<int>(blocks, blocks + count))};
  });
}

sgs_status sgs_parabolic_from_isotropic(const sgs_group* g, const int* dims, size_t count,
                                        int lagrangian_class, sgs_parabolic** out) {
  return guarded([&] {
    if (!g || !out || (!dims && count)) sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out = new sgs_parabolic{sgs::ParabolicType::from_isotropic_flag(
        g->desc, std::vector<int>(dims, dims + count), lagrangian_class)};
  });
}

sgs_status sgs_parabolic_from_omitted(const sgs_group* g, const int* omitted, size_t count,
                                      sgs_parabolic** out) {
  return guarded([&] {
    if (!g || !out || (!omitted && count))
      sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out = new sgs_parabolic{sgs::ParabolicType::from_omitted(
        g->desc, std::vector<int>(omitted, omitted + count))};
  });
}

sgs_status sgs_parabolic_borel(const sgs_group* g, sgs_parabolic** out) {
  return guarded([&] {
    if (!g || !out) sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out = new sgs_parabolic{sgs::ParabolicType::borel(g->desc)};
  });
}

void sgs_parabolic_free(sgs_parabolic* p) { delete p; }

sgs_status sgs_parabolic_json(const sgs_parabolic* p, char** out_json) {
  return guarded([&] {
    if (!p || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    emit(out_json, parabolic_payload(p->type));
  });
}

sgs_status sgs_isotropy_json(const sgs_parabolic* p, char** out_json) {
  return guarded([&] {
    if (!p || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto qr = sgs::quotient_roots(p->type);
    json result;
    result["parabolic"] = p->type.describe();
    result["det_char"] = character_payload(sgs::isotropy_det_char(p->type));
    json roots = json::array();
    for (const auto& r : qr) roots.push_back(character_payload(r));
    result["quotient_roots"] = roots;
    result["codim"] = qr.size();
    emit(out_json, result);
  });
}

sgs_status sgs_segre_value(const sgs_parabolic* p, const long long* degrees, size_t count,
                           long long* out_value) {
  return guarded([&] {
    if (!p || !out_value || (!degrees && count))
      sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto nt = sgs::NumericalType::make(
        p->type, std::vector<sgs::Int>(degrees, degrees + count));
    *out_value = sgs::segre_value(nt);
  });
}

sgs_status sgs_segre_json(const sgs_parabolic* p, const long long* degrees, size_t count,
                          char** out_json) {
  return guarded([&] {
    if (!p || !out_json || (!degrees && count))
      sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto nt = sgs::NumericalType::make(
        p->type, std::vector<sgs::Int>(degrees, degrees + count));
    json result;
    result["parabolic"] = p->type.describe();
    result["group"] = p->type.group.name();
    result["block_degrees"] = nt.block_degrees;
    result["segre_value"] = sgs::segre_value(nt);
    if (const auto total = sgs::degree_pushforward(nt)) result["total_degree"] = *total;
    emit(out_json, result);
  });
}

sgs_status sgs_hn_upper_bound(const sgs_parabolic* p, int genus, long long* out_value) {
  return guarded([&] {
    if (!p || !out_value) sgs::fail(sgs::errc::invalid_argument, "null argument");
    *out_value = sgs::hn_upper_bound(p->type, sgs::CurveContext(genus));
  });
}

sgs_status sgs_stratum_json(const char* group_name, int n, long long delta, long long s,
                            int genus, char** out_json) {
  return guarded([&] {
    if (!group_name || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto g = sgs::GroupDescriptor::parse(group_name);
    const sgs::CurveContext ctx(genus);
    const auto rec = stratum_for(g, n, delta, s, ctx);
    json result = stratum_payload(rec);
    result["hn_upper_bound"] = sgs::hn_upper_bound(rec.parabolic, ctx);
    emit(out_json, result);
  });
}

sgs_status sgs_sigma_json(const char* group_name, int n, long long delta, int genus,
                          char** out_json) {
  return guarded([&] {
    if (!group_name || !out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto g = sgs::GroupDescriptor::parse(group_name);
    const sgs::CurveContext ctx(genus);
    const auto sigma = sgs::sigma_set(g, delta, n, ctx);
    json result;
    result["group"] = g.name();
    result["delta"] = delta;
    result["genus"] = genus;
    result["nonempty"] = sigma.nonempty;
    result["unknown_band"] = sigma.unknown_band;
    emit(out_json, result);
  });
}

sgs_status sgs_transfer_json(const char* kind, int r, int m, int n, const int* omitted,
                             size_t omitted_count, long long delta, long long s, int genus,
                             const char* source_status, char** out_json) {
  return guarded([&] {
    if (!kind || !out_json || (!omitted && omitted_count))
      sgs::fail(sgs::errc::invalid_argument, "null argument");
    const auto iso = sgs::Isogeny::make(sgs::isogeny_kind_parse(kind), r, m);
    const sgs::CurveContext ctx(genus);

    sgs::StratumRecord src;
    if (omitted_count) {
      src.group = iso.source;
      src.delta = delta;
      src.parabolic = sgs::ParabolicType::from_omitted(
          iso.source, std::vector<int>(omitted, omitted + omitted_count));
      src.s = s;
      src.nonempty = sgs::Nonempty::unknown;
    } else if (iso.source.family == sgs::GroupFamily::GL) {
      src = sgs::glr_stratum(iso.source.r, n, delta, s, ctx);
    } else if (iso.source.is_type_a()) {
      src.group = iso.source;
      src.delta = delta;
      src.parabolic = catalog_parabolic(iso.source, n);
      src.s = s;
      src.nonempty = sgs::Nonempty::unknown;
    } else {
      src.group = iso.source;
      src.delta = delta;
      src.parabolic = catalog_parabolic(iso.source, n);
      src.s = s;
      src.nonempty = sgs::Nonempty::unknown;
    }
    if (source_status) {
      const std::string st = source_status;
      if (st == "yes") src.nonempty = sgs::Nonempty::yes;
      else if (st == "no") src.nonempty = sgs::Nonempty::no;
      else if (st == "unknown") src.nonempty = sgs::Nonempty::unknown;
      else sgs::fail(sgs::errc::parse, "source status must be yes, no or unknown");
    }

    const auto push = sgs::pi1_pushforward(iso, delta);
    const auto dst = sgs::transfer_stratum(iso, src, ctx);

    json result;
    result["isogeny"] = sgs::to_string(iso.kind);
    result["source"] = stratum_payload(src);
    result["target"] = stratum_payload(dst);
    result["delta_pushforward"] = push.value.value;
    result["moduli_map_surjective"] = iso.moduli_map_surjective(delta);
    json warnings = json::array();
    if (push.alternate_convention) {
      result["delta_pushforward_alternate"] = *push.alternate_convention;
      if (*push.alternate_convention != push.value.value)
        warnings.push_back(
            "pi1 pushforward conventions disagree: covering-space convention gives " +
            std::to_string(push.value.value) + ", index-multiplication convention gives " +
            std::to_string(*push.alternate_convention));
    }
    emit(out_json, result, warnings);
  });
}

sgs_status sgs_gl3_classify_json(long long d1, long long d2, long long d3, long long delta,
                                 int genus, char** out_json) {
  return guarded([&] {
    if (!out_json) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const sgs::CurveContext ctx(genus);
    const auto pt = sgs::gl3::classify({d1, d2, d3}, delta, ctx);
    json result = gl3_point_payload(pt);
    const auto ceiling = sgs::gl3::hirschowitz_ceiling(delta, ctx);
    result["ceiling"] = {{"value", ceiling.value}, {"sharp", ceiling.sharp}};
    emit(out_json, result);
  });
}

sgs_status sgs_gl3_figure(long long delta, int genus, long long d1_min, long long d1_max,
                          long long d3_min, long long d3_max, const char* format,
                          char** out_text) {
  return guarded([&] {
    if (!format || !out_text) sgs::fail(sgs::errc::invalid_argument, "null argument");
    const sgs::CurveContext ctx(genus);
    const sgs::gl3::Window window{d1_min, d1_max, d3_min, d3_max};
    const auto model = sgs::gl3::figure_data(delta, ctx, window);
    const std::string fmt = format;
    if (fmt == "csv") {
      *out_text = copy_out(sgs::gl3::figure_csv(model));
    } else if (fmt == "svg") {
      *out_text = copy_out(sgs::gl3::figure_svg(model));
    } else if (fmt == "json") {
      json result;
      result["delta"] = model.delta;
      result["genus"] = model.genus;
      result["window"] = {{"d1_min", window.d1_min},
                          {"d1_max", window.d1_max},
                          {"d3_min", window.d3_min},
                          {"d3_max", window.d3_max}};
      result["ceiling"] = {{"value", model.ceiling.value}, {"sharp", model.ceiling.sharp}};
      result["level_lines"] = model.level_lines;
      json points = json::array();
      for (const auto& pt : model.points) points.push_back(gl3_point_payload(pt));
      result["points"] = points;
      emit(out_text, result);
    } else {
      sgs::fail(sgs::errc::parse, "figure format must be csv, svg or json");
    }
  });
}

} // extern "C"
