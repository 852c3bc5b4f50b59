#pragma once

#include <stdexcept>
#include <string>

namespace ettri {

// Mirrors the status codes of the public C API (include/ettri.h).
enum class errc {
    ok = 0,
    invalid_argument = 1,  // caller violated a precondition
    unsatisfiable = 2,     // no integral parametrization for a plane class
    overflow = 3,          // a count exceeded 64-bit range
    limit_exceeded = 4,    // brute-force oracle asked to run past its limit
    bad_geometry = 5,      // degenerate or non-equilateral triangle input
    internal = 6,          // invariant breach
};

class EtError : public std::runtime_error {
public:
    EtError(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw EtError(code, what); }

} // namespace ettri
