#include "segrestrat/rootdata.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace sgs {

namespace {

std::vector<Int> eps(int rank, int i, Int ci) {
  std::vector<Int> v(rank, 0);
  v[i] = ci;
  return v;
}

std::vector<Int> eps2(int rank, int i, Int ci, int j, Int cj) {
  std::vector<Int> v(rank, 0);
  v[i] = ci;
  v[j] = cj;
  return v;
}

} // namespace

bool RootSystem::is_positive(std::size_t root_index) const {
  for (Int c : simple_coords[root_index])
    if (c != 0) return c > 0;
  return false;
}

int RootSystem::root_index_of(const Character& c) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == c) return static_cast<int>(i);
  return -1;
}

RootSystem build_root_system(RootType type, int coord_rank) {
  if (coord_rank < 1) fail(errc::invalid_argument, "root system needs coordinate rank >= 1");
  const int n = coord_rank;

  RootSystem rs;
  rs.type = type;
  rs.coord_rank = n;
  rs.rank = (type == RootType::A) ? n - 1 : n;

  std::vector<std::vector<Int>> roots;
  switch (type) {
    case RootType::A:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) roots.push_back(eps2(n, i, 1, j, -1));
      break;
    case RootType::B:
    case RootType::C:
    case RootType::D:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          roots.push_back(eps2(n, i, 1, j, -1));
          roots.push_back(eps2(n, i, -1, j, 1));
          roots.push_back(eps2(n, i, 1, j, 1));
          roots.push_back(eps2(n, i, -1, j, -1));
        }
      if (type == RootType::B)
        for (int i = 0; i < n; ++i) {
          roots.push_back(eps(n, i, 1));
          roots.push_back(eps(n, i, -1));
        }
      if (type == RootType::C)
        for (int i = 0; i < n; ++i) {
          roots.push_back(eps(n, i, 2));
          roots.push_back(eps(n, i, -2));
        }
      break;
  }
  for (auto& r : roots) rs.roots.emplace_back(std::move(r));

  std::vector<std::vector<Int>> simple;
  switch (type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) simple.push_back(eps2(n, i, 1, i + 1, -1));
      break;
    case RootType::B:
      for (int i = 0; i + 1 < n; ++i) simple.push_back(eps2(n, i, 1, i + 1, -1));
      simple.push_back(eps(n, n - 1, 1));
      break;
    case RootType::C:
      for (int i = 0; i + 1 < n; ++i) simple.push_back(eps2(n, i, 1, i + 1, -1));
      simple.push_back(eps(n, n - 1, 2));
      break;
    case RootType::D:
      if (n >= 2) {
        for (int i = 0; i + 1 < n; ++i) simple.push_back(eps2(n, i, 1, i + 1, -1));
        simple.push_back(eps2(n, n - 2, 1, n - 1, 1));
      }
      break;
  }
  for (auto& s : simple) rs.simple_roots.emplace_back(std::move(s));

  // Expand every root in the simple-root base by closing upward from the
  // simple roots (height induction), then negating for the negative roots.
  const std::size_t nroots = rs.roots.size();
  const std::size_t nsimple = rs.simple_roots.size();
  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t i = 0; i < nroots; ++i) index[rs.roots[i].exponents] = i;

  rs.simple_coords.assign(nroots, {});
  for (std::size_t k = 0; k < nsimple; ++k) {
    auto it = index.find(rs.simple_roots[k].exponents);
    if (it == index.end()) fail(errc::internal, "simple root not in root set");
    std::vector<Int> unit(nsimple, 0);
    unit[k] = 1;
    rs.simple_coords[it->second] = std::move(unit);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nroots; ++i) {
      if (rs.simple_coords[i].empty()) continue;
      for (std::size_t k = 0; k < nsimple; ++k) {
        std::vector<Int> sum = rs.roots[i].exponents;
        for (int c = 0; c < n; ++c) sum[c] += rs.simple_roots[k].exponents[c];
        auto it = index.find(sum);
        if (it == index.end() || !rs.simple_coords[it->second].empty()) continue;
        std::vector<Int> coeffs = rs.simple_coords[i];
        coeffs[k] += 1;
        rs.simple_coords[it->second] = std::move(coeffs);
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < nroots; ++i) {
    if (!rs.simple_coords[i].empty()) continue;
    std::vector<Int> neg = rs.roots[i].exponents;
    for (auto& c : neg) c = -c;
    auto it = index.find(neg);
    if (it == index.end() || rs.simple_coords[it->second].empty())
      fail(errc::internal, "root not reachable from the simple-root base");
    std::vector<Int> coeffs = rs.simple_coords[it->second];
    for (auto& c : coeffs) c = -c;
    rs.simple_coords[i] = std::move(coeffs);
  }

  return rs;
}

const char* root_type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
  }
  return "?";
}

std::string Pi1Group::to_string() const {
  if (free_rank == 1 && torsion == 0) return "Z";
  if (trivial()) return "1";
  if (free_rank == 0) return "Z_" + std::to_string(torsion);
  return "Z^" + std::to_string(free_rank) +
         (torsion ? " x Z_" + std::to_string(torsion) : "");
}

GroupDescriptor GroupDescriptor::make(GroupFamily family, int r, int m) {
  GroupDescriptor g{family, r, m};
  switch (family) {
    case GroupFamily::GL:
      if (r < 1) fail(errc::parse, "GL(r) requires r >= 1");
      break;
    case GroupFamily::SL:
    case GroupFamily::PGL:
      if (r < 2) fail(errc::parse, "SL/PGL(r) requires r >= 2");
      break;
    case GroupFamily::SLmod:
      if (r < 2) fail(errc::parse, "SL(r)/mu(m) requires r >= 2");
      if (m < 1 || r % m != 0) fail(errc::parse, "SL(r)/mu(m) requires m | r, m >= 1");
      break;
    case GroupFamily::Sp:
    case GroupFamily::PSp:
      if (r < 2 || r % 2 != 0) fail(errc::parse, "Sp/PSp(2n) requires an even argument >= 2");
      break;
    case GroupFamily::SO:
    case GroupFamily::Spin:
      if (r < 3) fail(errc::parse, "SO/Spin(r) requires r >= 3");
      break;
  }
  return g;
}

GroupDescriptor GroupDescriptor::parse(const std::string& name) {
  static const std::regex form(
      R"(^\s*(GL|SL|PGL|Sp|PSp|SO|Spin)\((\d+)\)\s*(?:/\s*mu\((\d+)\)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(name, m, form))
    fail(errc::parse, "unrecognised group name: '" + name + "'");
  const std::string fam = m[1];
  const int r = std::stoi(m[2]);
  const bool has_mu = m[3].matched;
  if (has_mu && fam != "SL")
    fail(errc::parse, "only SL(r)/mu(m) admits a central quotient suffix");
  if (fam == "GL") return make(GroupFamily::GL, r);
  if (fam == "SL")
    return has_mu ? make(GroupFamily::SLmod, r, std::stoi(m[3])) : make(GroupFamily::SL, r);
  if (fam == "PGL") return make(GroupFamily::PGL, r);
  if (fam == "Sp") return make(GroupFamily::Sp, r);
  if (fam == "PSp") return make(GroupFamily::PSp, r);
  if (fam == "SO") return make(GroupFamily::SO, r);
  return make(GroupFamily::Spin, r);
}

std::string GroupDescriptor::name() const {
  std::ostringstream out;
  switch (family) {
    case GroupFamily::GL: out << "GL(" << r << ")"; break;
    case GroupFamily::SL: out << "SL(" << r << ")"; break;
    case GroupFamily::SLmod: out << "SL(" << r << ")/mu(" << m << ")"; break;
    case GroupFamily::PGL: out << "PGL(" << r << ")"; break;
    case GroupFamily::Sp: out << "Sp(" << r << ")"; break;
    case GroupFamily::PSp: out << "PSp(" << r << ")"; break;
    case GroupFamily::SO: out << "SO(" << r << ")"; break;
    case GroupFamily::Spin: out << "Spin(" << r << ")"; break;
  }
  return out.str();
}

Int GroupDescriptor::dim() const {
  const Int rr = r;
  switch (family) {
    case GroupFamily::GL: return rr * rr;
    case GroupFamily::SL:
    case GroupFamily::SLmod:
    case GroupFamily::PGL: return rr * rr - 1;
    case GroupFamily::Sp:
    case GroupFamily::PSp: {
      const Int n = rr / 2;
      return n * (2 * n + 1);
    }
    case GroupFamily::SO:
    case GroupFamily::Spin: return rr * (rr - 1) / 2;
  }
  fail(errc::internal, "unreachable");
}

Int GroupDescriptor::dim_center() const { return family == GroupFamily::GL ? 1 : 0; }

int GroupDescriptor::torus_rank() const {
  switch (family) {
    case GroupFamily::GL: return r;
    case GroupFamily::SL:
    case GroupFamily::SLmod:
    case GroupFamily::PGL: return r - 1;
    case GroupFamily::Sp:
    case GroupFamily::PSp: return r / 2;
    case GroupFamily::SO:
    case GroupFamily::Spin: return r / 2;
  }
  fail(errc::internal, "unreachable");
}

int GroupDescriptor::coord_rank() const { return is_type_a() ? r : r / 2; }

bool GroupDescriptor::is_type_a() const {
  return family == GroupFamily::GL || family == GroupFamily::SL ||
         family == GroupFamily::SLmod || family == GroupFamily::PGL;
}

Pi1Group GroupDescriptor::pi1() const {
  switch (family) {
    case GroupFamily::GL: return {1, 0};
    case GroupFamily::SL: return {0, 0};
    case GroupFamily::SLmod: return {0, m == 1 ? 0 : m};
    case GroupFamily::PGL: return {0, r};
    case GroupFamily::Sp: return {0, 0};
    case GroupFamily::PSp: return {0, 2};
    case GroupFamily::SO: return {0, 2};
    case GroupFamily::Spin: return {0, 0};
  }
  fail(errc::internal, "unreachable");
}

RootType GroupDescriptor::root_type() const {
  switch (family) {
    case GroupFamily::GL:
    case GroupFamily::SL:
    case GroupFamily::SLmod:
    case GroupFamily::PGL: return RootType::A;
    case GroupFamily::Sp:
    case GroupFamily::PSp: return RootType::C;
    case GroupFamily::SO:
    case GroupFamily::Spin: return r % 2 == 0 ? RootType::D : RootType::B;
  }
  fail(errc::internal, "unreachable");
}

RootSystem GroupDescriptor::root_system() const {
  return build_root_system(root_type(), coord_rank());
}

RootSystem root_system_of(const GroupDescriptor& g) { return g.root_system(); }

Int moduli_dimension(const GroupDescriptor& g, int genus) {
  if (genus < 2) fail(errc::domain, "moduli dimension requires genus >= 2");
  return checked_add(checked_mul(genus - 1, g.dim()), g.dim_center());
}

TopologicalType TopologicalType::make(const GroupDescriptor& g, Int value) {
  const Pi1Group p = g.pi1();
  TopologicalType t{g, value};
  if (p.free_rank == 1) return t;
  if (p.torsion > 0) {
    t.value = ((value % p.torsion) + p.torsion) % p.torsion;
    return t;
  }
  if (value != 0)
    fail(errc::domain, "pi1(" + g.name() + ") is trivial; topological type must be 0");
  return t;
}

std::string TopologicalType::to_string() const {
  return std::to_string(value) + " in " + group.pi1().to_string();
}

} // namespace sgs
