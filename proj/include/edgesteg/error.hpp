#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edgesteg {

enum class ErrorKind {
    Io,
    MalformedFile,
    UnsupportedFormat,
    ZeroDimension,
    ParamOutOfRange,
    ImageTooSmall,
    ImageTooNarrow,
    CapacityExceeded,
    BadMagic,
    UnsupportedVersion,
    CorruptHeader,
    TruncatedPayload,
    DimensionMismatch,
};

/// Stable identifier of an error kind, e.g. "BadMagic".
std::string_view error_name(ErrorKind kind) noexcept;

/// One-line hint telling the user what to do about an error of this kind.
std::string_view error_remedy(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

class CapacityExceeded : public Error {
public:
    CapacityExceeded(std::size_t available, std::size_t required);

    std::size_t available() const noexcept { return available_; }
    std::size_t required() const noexcept { return required_; }

private:
    std::size_t available_;
    std::size_t required_;
};

} // namespace edgesteg
