#pragma once

#include <stdexcept>
#include <string>

namespace liss {

enum class ErrorCode {
    InvalidArgument,
    MixedDomain,
    DegenerateDelta,
    InvalidConic,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

struct MixedDomainError : Error {
    explicit MixedDomainError(const std::string& what) : Error(ErrorCode::MixedDomain, what) {}
};

struct DegenerateDeltaError : Error {
    explicit DegenerateDeltaError(const std::string& what) : Error(ErrorCode::DegenerateDelta, what) {}
};

struct InvalidConicError : Error {
    explicit InvalidConicError(const std::string& what) : Error(ErrorCode::InvalidConic, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

} // namespace liss
