#ifndef CUSPIDAL_ERRORS_HPP_
#define CUSPIDAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cuspidal {

// Caller passed something outside an operation's domain (CLI exit code 1).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The zero ideal is not representable.
class ZeroIdealError : public UsageError {
public:
    ZeroIdealError() : UsageError("zero ideal") {}
};

// A configured search or discriminant bound was exceeded; no answer is given
// rather than a possibly wrong one (CLI exit code 2).
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that always holds came out false: an implementation bug
// (CLI exit code 3).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define CUSPIDAL_CHECK(cond, msg)                                              \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::cuspidal::InternalError(std::string(msg) + " [" #cond "]"); \
    } while (0)

}  // namespace cuspidal

#endif  // CUSPIDAL_ERRORS_HPP_
