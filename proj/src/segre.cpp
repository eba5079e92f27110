#include "segrestrat/segre.hpp"

namespace sgs {

Cocharacter expand_to_torus(const NumericalType& d) {
  const auto blocks = levi_blocks(d.parabolic);
  std::vector<Int> coords(d.parabolic.group.coord_rank(), 0);
  std::size_t offset = 0;
  std::size_t slot = 0;
  for (const auto& b : blocks) {
    if (b.carries_degree) {
      coords[offset] = d.block_degrees[slot++];
      offset += static_cast<std::size_t>(b.param);
    }
    // the residual classical block occupies the remaining coordinates
  }
  return Cocharacter(std::move(coords));
}

Int segre_value(const NumericalType& d) {
  if (!d.parabolic.is_proper())
    fail(errc::degenerate_parabolic, "Segre value undefined for P = G");
  return pairing(isotropy_det_char(d.parabolic), expand_to_torus(d));
}

} // namespace sgs
