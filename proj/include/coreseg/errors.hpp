#pragma once

#include <stdexcept>
#include <string>

namespace coreseg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
struct IoError : Error {
  using Error::Error;
};

// File was readable but its contents are not a supported image.
struct FormatError : Error {
  using Error::Error;
};

struct BoundsError : Error {
  using Error::Error;
};

// Ground-truth or configuration document violates its schema.
struct SchemaError : Error {
  using Error::Error;
};

// Synthesis parameters out of range.
struct SpecError : Error {
  using Error::Error;
};

// No foreground pixel where at least one is required.
struct EmptyInk : Error {
  using Error::Error;
};

}  // namespace coreseg
