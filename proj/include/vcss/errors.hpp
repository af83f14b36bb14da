#ifndef VCSS_ERRORS_HPP
#define VCSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vcss {

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceExhausted : std::runtime_error {
    explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct CaseMismatch : std::runtime_error {
    explicit CaseMismatch(const std::string& what) : std::runtime_error(what) {}
};

// A check that is guaranteed by structuredness of the host failed; either the
// host is not structured or there is a bug upstream.
struct InternalCheck : std::logic_error {
    explicit InternalCheck(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalCheck(what);
}

} // namespace vcss

#endif
