#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssc {

// Base for all library errors. Callers that only need "did it fail" catch this.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroNormRow : Error {
  std::size_t row;
  explicit ZeroNormRow(std::size_t r)
      : Error("row " + std::to_string(r) + " has near-zero L2 norm"), row(r) {}
};

struct NonPositiveTemperature : Error {
  explicit NonPositiveTemperature(double t)
      : Error("temperature must be > 0, got " + std::to_string(t)) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NoValidAnchor : Error {
  NoValidAnchor() : Error("no anchor has a nonempty positive set and positive weight") {}
};

struct OddRowCount : Error {
  using Error::Error;
};

struct LabelOutOfRange : Error {
  using Error::Error;
};

struct TauOutOfRange : Error {
  explicit TauOutOfRange(double tau)
      : Error("tau must lie in (0,1), got " + std::to_string(tau)) {}
};

struct TraceMismatch : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct FormatVersionMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct BadMagic : Error {
  using Error::Error;
};

struct CountMismatch : Error {
  using Error::Error;
};

struct TruncatedFile : Error {
  using Error::Error;
};

struct InsufficientClassCount : Error {
  using Error::Error;
};

struct NonFiniteLoss : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct UnknownParameter : Error {
  using Error::Error;
};

}  // namespace ssc
