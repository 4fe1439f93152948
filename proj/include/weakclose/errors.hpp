#ifndef WEAKCLOSE_ERRORS_HPP
#define WEAKCLOSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weakclose {

// Input could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, long line)
        : std::runtime_error(std::move(message)), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A caller violated an operation's domain (bad vertex id, bad parameter).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A stated precondition between modules was violated.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Unknown problem id / class name.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configurable resource cap was exceeded. Carries partial progress.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string message, long long partial_count)
        : std::runtime_error(std::move(message)), partial_count_(partial_count) {}
    long long partial_count() const { return partial_count_; }

private:
    long long partial_count_;
};

// Oracle invoked above its hard scale cap.
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem-backed internal invariant failed; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {
inline void check_invariant(bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("internal invariant violated: ") + what);
}
} // namespace detail

} // namespace weakclose

#endif
