#include "edgesteg/error.hpp"

namespace edgesteg {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Io: return "IoError";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ZeroDimension: return "ZeroDimension";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::ImageTooSmall: return "ImageTooSmall";
    case ErrorKind::ImageTooNarrow: return "ImageTooNarrow";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::CorruptHeader: return "CorruptHeader";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    }
    return "UnknownError";
}

std::string_view error_remedy(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Io: return "check that the path exists and is readable/writable";
    case ErrorKind::MalformedFile: return "the file is not a complete BMP; re-export it";
    case ErrorKind::UnsupportedFormat:
        return "convert the image to a 24-bit uncompressed BMP without alpha or palette";
    case ErrorKind::ZeroDimension: return "the image has no pixels; use a non-empty image";
    case ErrorKind::ParamOutOfRange:
        return "use sigma 1.0..3.0 and thresholds 0 <= low <= high <= 255";
    case ErrorKind::ImageTooSmall: return "use an image of at least 3x3 pixels";
    case ErrorKind::ImageTooNarrow: return "use an image at least 27 pixels wide";
    case ErrorKind::CapacityExceeded:
        return "use a smaller payload, a larger image, or lower thresholds";
    case ErrorKind::BadMagic: return "this image does not carry a hidden payload";
    case ErrorKind::UnsupportedVersion: return "the carrier was written by a newer tool version";
    case ErrorKind::CorruptHeader: return "the carrier header was damaged; obtain an intact copy";
    case ErrorKind::TruncatedPayload:
        return "the carrier was modified or is not the image that was sent";
    case ErrorKind::DimensionMismatch: return "compare images of identical size";
    }
    return "";
}

CapacityExceeded::CapacityExceeded(std::size_t available, std::size_t required)
    : Error(ErrorKind::CapacityExceeded,
            "payload needs " + std::to_string(required) + " bytes but only " +
                std::to_string(available) + " bytes are available"),
      available_(available),
      required_(required) {}

} // namespace edgesteg
