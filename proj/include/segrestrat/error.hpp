#ifndef SEGRESTRAT_ERROR_HPP
#define SEGRESTRAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgs {

enum class errc {
  parse = 1,
  dimension_mismatch,
  domain,
  degenerate_parabolic,
  unsupported_family,
  overflow,
  invalid_argument,
  internal
};

/// Library-wide exception; carries a machine-readable error code.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace sgs

#endif
