#ifndef SPECGRAPH_ERRORS_HPP
#define SPECGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specgraph {

enum class ErrorCode {
    InvalidArgument,
    InvalidGraph,
    Parse,
    Io,
    Dimension,
    NoConvergence,
    DegenerateEigenvalue,
};

/// Single exception type for the whole library; the code maps 1:1 onto the
/// C API status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace specgraph

#endif
