#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace thinlab {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kNotMonic,
  kNotIntegral,
  kImprimitive,
  kOffQuadric,
  kNotOrthogonal,
  kNotCartanRoot,
  kNotClosed,
  kNotConverged,
  kCapExceeded,
  kSchemaViolation,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base exception for every failure raised by the library. The code lets
// callers (the runner in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// An enumeration tried to grow past its configured limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap)
      : Error(ErrorCode::kCapExceeded,
              "resource cap exceeded: " + cap_name + " > " + std::to_string(cap)),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

}  // namespace thinlab
