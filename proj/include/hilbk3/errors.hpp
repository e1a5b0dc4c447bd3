#pragma once

#include <stdexcept>
#include <string>

namespace hilbk3 {

// Failure categories surfaced by the library. The CLI maps them to exit
// codes: parameter/usage problems -> 2, broken internal invariants -> 3.
enum class errc {
  square_radicand,     // operation needs a non-square radicand
  zero_class,          // divisor class must be nonzero
  not_applicable,      // a stated hypothesis of the operation fails
  parameter_violation, // argument outside the documented domain
  internal,            // an invariant the implementation guarantees broke
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool ok, errc kind, const std::string& what) {
  if (!ok) raise(kind, what);
}

// Always-on consistency check; never compiled out.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) raise(errc::internal, what);
}

} // namespace hilbk3
