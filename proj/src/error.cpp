#include "pistego/error.hpp"

namespace pistego {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::DecodeError: return "DecodeError";
    case ErrorKind::EncodeError: return "EncodeError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadGroupLength: return "BadGroupLength";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorKind::TruncatedStream: return "TruncatedStream";
    case ErrorKind::InsufficientCapacity: return "InsufficientCapacity";
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

CapacityError::CapacityError(std::uint64_t required_bits, std::uint64_t available_bits)
    : StegoError(ErrorKind::InsufficientCapacity,
                 "insufficient capacity: " + std::to_string(required_bits) +
                     " bits required, " + std::to_string(available_bits) + " available"),
      required_(required_bits),
      available_(available_bits) {}

}  // namespace pistego
