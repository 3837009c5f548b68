#pragma once

#include <stdexcept>
#include <string>

namespace convdiv {

enum class Errc {
  invalid_argument,
  not_convex,
  degenerate_area,
  too_few_vertices,
  cut_misses_interior,
  rho_out_of_range,
  tolerance_not_reached,
  not_affine_between_breakpoints,
  infeasible_n,
  construction_failed,
  verification_failed,
  unsupported,
  schema_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace convdiv
