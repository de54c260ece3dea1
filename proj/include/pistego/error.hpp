#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pistego {

enum class ErrorKind {
  UnsupportedFormat,
  DecodeError,
  EncodeError,
  DimensionMismatch,
  BadGroupLength,
  PreconditionViolation,
  PayloadTooLarge,
  TruncatedStream,
  InsufficientCapacity,
  EmptyImage,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class StegoError : public std::runtime_error {
 public:
  StegoError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by embed when the framed payload does not fit the cover.
class CapacityError : public StegoError {
 public:
  CapacityError(std::uint64_t required_bits, std::uint64_t available_bits);

  std::uint64_t required_bits() const noexcept { return required_; }
  std::uint64_t available_bits() const noexcept { return available_; }

 private:
  std::uint64_t required_;
  std::uint64_t available_;
};

}  // namespace pistego
