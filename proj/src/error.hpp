#pragma once

#include <stdexcept>
#include <string>

namespace tc {

// Status values shared with the C API (and, where meaningful, with CLI
// exit codes: parse=2, absent=3, size guard=4).
enum class Status : int {
    Ok = 0,
    Parse = 2,
    Absent = 3,
    SizeGuard = 4,
    Argument = 5,
    Internal = 6,
};

class Error : public std::runtime_error {
  public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const { return status_; }

  private:
    Status status_;
};

inline Error parse_error(std::size_t position, const std::string& expected) {
    return Error(Status::Parse,
                 "parse error at position " + std::to_string(position) + ": expected " + expected);
}

inline Error argument_error(const std::string& message) {
    return Error(Status::Argument, message);
}

inline Error size_guard_error(const std::string& message) {
    return Error(Status::SizeGuard, message);
}

inline Error internal_error(const std::string& message) {
    return Error(Status::Internal, "internal error: " + message);
}

}  // namespace tc
