#pragma once

#include <stdexcept>
#include <string>

namespace casefs {

// The three error classes the wire binding distinguishes:
//   NotFound   -> 404  unknown or deleted object/type
//   Conflict   -> 409  operation conflicts with current repository state
//   Validation -> 422  request violates the data model rules
enum class ErrorCode {
    NotFound,
    Conflict,
    Validation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Error notFound(std::string message) {
    return Error(ErrorCode::NotFound, std::move(message));
}
inline Error conflict(std::string message) {
    return Error(ErrorCode::Conflict, std::move(message));
}
inline Error validation(std::string message) {
    return Error(ErrorCode::Validation, std::move(message));
}

}  // namespace casefs
