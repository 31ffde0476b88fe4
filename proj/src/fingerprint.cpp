#include <stdexcept>
#include <string>

#include "ldisj/errors.hpp"
#include "ldisj/recognizer.hpp"

namespace ldisj {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t find_prime(int k) {
  if (k < 1 || k > kMaxRecognizerK) {
    throw CapacityError("fingerprint prime requested for k = " + std::to_string(k) +
                        ", supported range is [1, " + std::to_string(kMaxRecognizerK) + "]");
  }
  const std::uint64_t low = std::uint64_t{1} << (4 * k);
  const std::uint64_t high = low << 1;
  for (std::uint64_t n = low + 1; n < high; ++n) {
    if (is_prime(n)) return n;
  }
  // Bertrand's postulate rules this out.
  throw std::logic_error("no prime between 2^{4k} and 2^{4k+1}");
}

FingerprintChecker::FingerprintChecker(int k, std::uint64_t prime, std::uint64_t point)
    : prime_(prime), point_(point) {
  if (k < 1 || k > kMaxRecognizerK) {
    throw CapacityError("fingerprint check for k = " + std::to_string(k) + " not supported");
  }
  const std::uint64_t low = std::uint64_t{1} << (4 * k);
  if (prime <= low || prime >= (low << 1) || !is_prime(prime)) {
    throw std::invalid_argument(std::to_string(prime) + " is not a prime in (2^{4k}, 2^{4k+1})");
  }
  if (point >= prime) {
    throw std::invalid_argument("evaluation point " + std::to_string(point) + " not below prime");
  }
  // prime, point, running value, running power, last x value, last y value
  live_cells_ = 6 * cells_for_value(prime);
}

void FingerprintChecker::on_bit(int bit) {
  if (bit) acc_ = (acc_ + point_power_) % prime_;
  point_power_ = point_power_ * point_ % prime_;
}

void FingerprintChecker::on_block_end(std::size_t block) {
  const std::uint64_t value = acc_;
  acc_ = 0;
  point_power_ = 1;
  const bool first_repetition = repetition_of(block) == 0;
  switch (role_of(block)) {
    case BlockRole::X:
      if (!first_repetition && value != x_value_) passed_ = false;
      x_value_ = value;
      break;
    case BlockRole::Y:
      if (!first_repetition && value != y_value_) passed_ = false;
      y_value_ = value;
      break;
    case BlockRole::Z:
      if (value != x_value_) passed_ = false;
      break;
  }
}

bool a2_fingerprint_check(TokenStream& stream, int k, std::uint64_t point, std::uint64_t prime) {
  FingerprintChecker checker(k, prime, point);
  FormatChecker format;
  while (auto token = stream.next()) {
    const BlockEvent event = format.feed(*token);
    if (format.failed()) throw FormatError("fingerprint check needs a well-formed word");
    if (event.kind == BlockEvent::Kind::HeaderEnd && *format.k() != k) {
      throw FormatError("word header encodes k = " + std::to_string(*format.k()));
    }
    if (event.kind == BlockEvent::Kind::Bit) checker.on_bit(event.bit);
    if (event.kind == BlockEvent::Kind::BlockEnd) checker.on_block_end(event.block);
  }
  if (!format.accepted()) throw StreamError("word ended before its last block");
  return checker.passed();
}

}  // namespace ldisj
