#ifndef HOMREP_ERROR_HPP
#define HOMREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homrep {

/// Error categories; the CLI maps each to a distinct process exit code.
enum class Errc {
    ok = 0,
    check_failed = 1,
    file_not_found = 2,
    schema_violation = 3,
    field_mismatch = 4,
    size_bound = 5,
    bad_argument = 6,
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Internal consistency assertion. Failure always means a bug, not bad input.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw Error(Errc::internal, "internal invariant violated: " + what);
}

} // namespace homrep

#endif
