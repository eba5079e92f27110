#include "segrestrat/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgs {

namespace {

int simple_rank(const GroupDescriptor& g) {
  return g.is_type_a() ? g.coord_rank() - 1 : g.coord_rank();
}

/// Recover the isotropic flag dimensions (ascending) from the omitted set.
/// For type D, omitting exactly one of {n-1, n} is a Lagrangian step of
/// dimension n; omitting both is a step of dimension n-1 (residual SO(2)).
std::vector<int> isotropic_dims(const ParabolicType& p) {
  const int n = p.group.coord_rank();
  std::vector<int> dims;
  if (p.group.root_type() == RootType::D) {
    bool has_nm1 = false, has_n = false;
    for (int k : p.omitted) {
      if (k == n - 1) has_nm1 = true;
      else if (k == n) has_n = true;
      else dims.push_back(k);
    }
    if (has_nm1 && has_n) dims.push_back(n - 1);
    else if (has_nm1 || has_n) dims.push_back(n);
  } else {
    dims = p.omitted;
  }
  return dims;
}

} // namespace

ParabolicType ParabolicType::from_omitted(const GroupDescriptor& g, std::vector<int> omitted) {
  std::sort(omitted.begin(), omitted.end());
  omitted.erase(std::unique(omitted.begin(), omitted.end()), omitted.end());
  const int rank = simple_rank(g);
  for (int k : omitted)
    if (k < 1 || k > rank)
      fail(errc::invalid_argument,
           "simple root index " + std::to_string(k) + " out of range for " + g.name());
  return ParabolicType{g, std::move(omitted)};
}

ParabolicType ParabolicType::from_flag_signature(const GroupDescriptor& g,
                                                 const std::vector<int>& blocks) {
  if (!g.is_type_a())
    fail(errc::invalid_argument, "flag signatures apply to type A groups only");
  if (blocks.empty()) fail(errc::invalid_argument, "empty flag signature");
  int sum = 0;
  for (int b : blocks) {
    if (b < 1) fail(errc::invalid_argument, "flag block sizes must be positive");
    sum += b;
  }
  if (sum != g.r)
    fail(errc::invalid_argument, "flag blocks sum to " + std::to_string(sum) +
                                     ", expected " + std::to_string(g.r));
  std::vector<int> omitted;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    acc += blocks[i];
    omitted.push_back(acc);
  }
  return ParabolicType{g, std::move(omitted)};
}

ParabolicType ParabolicType::from_isotropic_flag(const GroupDescriptor& g,
                                                 const std::vector<int>& dims,
                                                 int lagrangian_class) {
  if (g.is_type_a())
    fail(errc::invalid_argument, "isotropic flags apply to types B/C/D only");
  if (dims.empty()) fail(errc::invalid_argument, "empty isotropic flag");
  if (lagrangian_class != 1 && lagrangian_class != 2)
    fail(errc::invalid_argument, "lagrangian class must be 1 or 2");
  const int n = g.coord_rank();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1 || dims[i] > n)
      fail(errc::invalid_argument, "isotropic dimension out of range 1.." + std::to_string(n));
    if (i > 0 && dims[i] <= dims[i - 1])
      fail(errc::invalid_argument, "isotropic flag dimensions must be strictly increasing");
  }
  const bool is_d = g.root_type() == RootType::D;
  if (lagrangian_class == 2 && !(is_d && dims.back() == n))
    fail(errc::invalid_argument,
         "lagrangian class 2 applies only to a maximal isotropic step in type D");
  std::vector<int> omitted;
  for (int a : dims) {
    if (!is_d || a <= n - 2) {
      omitted.push_back(a);
    } else if (a == n) {
      omitted.push_back(lagrangian_class == 1 ? n : n - 1);
    } else { // a == n - 1 in type D: stabiliser omits both end nodes
      omitted.push_back(n - 1);
      omitted.push_back(n);
    }
  }
  return from_omitted(g, std::move(omitted));
}

ParabolicType ParabolicType::borel(const GroupDescriptor& g) {
  std::vector<int> all(simple_rank(g));
  std::iota(all.begin(), all.end(), 1);
  return ParabolicType{g, std::move(all)};
}

std::vector<int> ParabolicType::flag_signature() const {
  if (!group.is_type_a())
    fail(errc::invalid_argument, "flag signature defined for type A groups only");
  std::vector<int> blocks;
  int prev = 0;
  for (int c : omitted) {
    blocks.push_back(c - prev);
    prev = c;
  }
  blocks.push_back(group.r - prev);
  return blocks;
}

std::string ParabolicType::describe() const {
  if (!is_proper()) return "G";
  std::ostringstream out;
  if (group.is_type_a()) {
    const auto blocks = flag_signature();
    bool borel = true;
    for (int b : blocks) borel &= b == 1;
    if (borel) return "Borel";
    out << "flag ";
    for (std::size_t i = 0; i < blocks.size(); ++i) out << (i ? "," : "") << blocks[i];
  } else {
    const int n = group.coord_rank();
    const auto dims = isotropic_dims(*this);
    out << "isotropic-flag ";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    if (group.root_type() == RootType::D && !dims.empty() && dims.back() == n) {
      const bool class2 = std::find(omitted.begin(), omitted.end(), n) == omitted.end();
      out << (class2 ? " (lagrangian-2)" : " (lagrangian-1)");
    }
  }
  return out.str();
}

std::string LeviBlock::name() const {
  switch (family) {
    case GroupFamily::GL: return "GL(" + std::to_string(param) + ")";
    case GroupFamily::Sp: return "Sp(" + std::to_string(param) + ")";
    case GroupFamily::SO: return "SO(" + std::to_string(param) + ")";
    default: return "?";
  }
}

std::vector<LeviBlock> levi_blocks(const ParabolicType& p) {
  std::vector<LeviBlock> out;
  if (p.group.is_type_a()) {
    if (!p.is_proper()) {
      out.push_back({GroupFamily::GL, p.group.r, true});
      return out;
    }
    for (int b : p.flag_signature()) out.push_back({GroupFamily::GL, b, true});
    return out;
  }
  const int n = p.group.coord_rank();
  const auto dims = isotropic_dims(p);
  int prev = 0;
  for (int a : dims) {
    out.push_back({GroupFamily::GL, a - prev, true});
    prev = a;
  }
  const RootType t = p.group.root_type();
  const int rem = n - prev;
  if (t == RootType::C) {
    if (rem > 0) out.push_back({GroupFamily::Sp, 2 * rem, false});
  } else if (t == RootType::B) {
    if (rem > 0) out.push_back({GroupFamily::SO, 2 * rem + 1, false});
  } else {
    if (rem >= 2) out.push_back({GroupFamily::SO, 2 * rem, false});
    else if (rem == 1) out.push_back({GroupFamily::SO, 2, false});
  }
  return out;
}

std::vector<Character> quotient_roots(const ParabolicType& p) {
  if (!p.is_proper())
    fail(errc::degenerate_parabolic, "P = G has no quotient roots; choose a proper parabolic");
  const RootSystem rs = p.group.root_system();
  std::vector<Character> out;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.is_positive(i)) continue;
    bool in_levi = true;
    for (int k : p.omitted)
      if (rs.simple_coords[i][k - 1] != 0) {
        in_levi = false;
        break;
      }
    if (!in_levi) out.push_back(rs.roots[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const Character& a, const Character& b) { return a.exponents < b.exponents; });
  return out;
}

std::vector<Character> parabolic_roots(const ParabolicType& p) {
  const RootSystem rs = p.group.root_system();
  std::vector<Character> out;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.is_positive(i)) {
      out.push_back(rs.roots[i]);
      continue;
    }
    bool in_levi = true;
    for (int k : p.omitted)
      if (rs.simple_coords[i][k - 1] != 0) {
        in_levi = false;
        break;
      }
    if (in_levi) out.push_back(rs.roots[i]);
  }
  return out;
}

Character isotropy_det_char(const ParabolicType& p) {
  const auto qr = quotient_roots(p);
  Character acc = Character::zero(p.group.coord_rank());
  for (const auto& root : qr) acc = acc + root;
  return acc;
}

Int parabolic_dim(const ParabolicType& p) {
  return checked_add(p.group.torus_rank(), static_cast<Int>(parabolic_roots(p).size()));
}

std::size_t degree_slot_count(const ParabolicType& p) {
  std::size_t count = 0;
  for (const auto& b : levi_blocks(p))
    if (b.carries_degree) ++count;
  return count;
}

NumericalType NumericalType::make(const ParabolicType& p, std::vector<Int> degrees) {
  const std::size_t expected = degree_slot_count(p);
  if (degrees.size() != expected)
    fail(errc::dimension_mismatch,
         "numerical type needs " + std::to_string(expected) + " block degrees, got " +
             std::to_string(degrees.size()));
  return NumericalType{p, std::move(degrees)};
}

std::optional<Int> degree_pushforward(const NumericalType& d) {
  if (d.parabolic.group.family != GroupFamily::GL) return std::nullopt;
  Int total = 0;
  for (Int deg : d.block_degrees) total = checked_add(total, deg);
  return total;
}

} // namespace sgs
