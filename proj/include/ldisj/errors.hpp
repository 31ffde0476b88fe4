#pragma once

#include <stdexcept>
#include <string>

namespace ldisj {

// Requested size exceeds a configured cap (register width, k, exact-mode scale).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Qubit or bit index outside the object it addresses.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Register width or bit-string length inconsistent with the parameter k.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unparseable external text: gate tapes, word files, bit strings.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A procedure ran out of input before its schedule completed.
class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldisj
