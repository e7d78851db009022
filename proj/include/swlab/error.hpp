#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swlab {

enum class Errc {
  non_prime,
  reducible_modulus,
  modulus_too_small,
  guard_exceeded,
  ring_mismatch,
  not_a_unit,
  infinite_ring,
  not_a_field,
  dimension_mismatch,
  not_integers,
  out_of_range,
  degree_mismatch,
  empty_stream,
  owner_mismatch,
  not_homogeneous,
  bad_parameters,
  not_a_group,
  parse_error,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::non_prime: return "NonPrime";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::modulus_too_small: return "ModulusTooSmall";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::infinite_ring: return "InfiniteRing";
    case Errc::not_a_field: return "NotAField";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_integers: return "NotIntegers";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::empty_stream: return "EmptyStream";
    case Errc::owner_mismatch: return "OwnerMismatch";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::not_a_group: return "NotAGroup";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()`
/// identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Multiplier applied to every size guard, read once from SWLAB_GUARD_SCALE.
/// Missing, unparsable or < 1 values give 1.
inline double guard_scale() {
  static const double scale = [] {
    const char* raw = std::getenv("SWLAB_GUARD_SCALE");
    if (raw == nullptr) return 1.0;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v >= 1.0)) return 1.0;
    return v;
  }();
  return scale;
}

inline void check_guard(double value, double bound, std::string_view what) {
  if (value > bound * guard_scale()) {
    fail(Errc::guard_exceeded, std::string(what) + " (" + std::to_string(value) + " > " +
                                   std::to_string(bound * guard_scale()) + ")");
  }
}

}  // namespace swlab
