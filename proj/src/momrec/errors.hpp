#pragma once

#include <stdexcept>
#include <string>

namespace momrec {

enum class ErrorKind {
    usage,      // bad arguments, malformed input, arity/degree-cap violations
    degree,     // requested order exceeds the data that is available
    accuracy,   // a numerical routine could not meet its accuracy contract
    numerical,  // eigen-iteration or factorization failure
    data,       // input data violates a structural assumption (e.g. non-PSD)
    solver,     // solver reported failure
    io          // file read/write problems
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Process exit code / C-API status for this kind of failure.
    int code() const {
        switch (kind_) {
            case ErrorKind::solver:
            case ErrorKind::numerical: return 3;
            case ErrorKind::accuracy: return 4;
            default: return 2;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void throw_degree(const std::string& msg) { throw Error(ErrorKind::degree, msg); }

}  // namespace momrec
