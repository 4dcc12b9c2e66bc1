#pragma once

#include <stdexcept>
#include <string>

namespace gwalk {

enum class ErrorCode {
    invalid_argument = 1,
    parse,
    io,
    out_of_range,
    undefined_estimate,
    no_convergence,
    mismatch,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gwalk
