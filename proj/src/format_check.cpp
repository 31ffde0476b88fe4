#include <string>

#include "ldisj/errors.hpp"
#include "ldisj/recognizer.hpp"

namespace ldisj {

namespace {

// Beyond this k a well-formed word would not fit in memory; block sizes stay
// representable in 64 bits.
constexpr int kHeaderLimit = 31;

}  // namespace

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw FormatError("bit string contains '" + std::string(1, c) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

void DisjInstance::validate() const {
  if (k < 1 || k > kHeaderLimit) throw ShapeError("k = " + std::to_string(k) + " out of range");
  const std::size_t length = block_length(k);
  if (x.size() != length || y.size() != length) {
    throw ShapeError("instance strings must have length 2^{2k} = " + std::to_string(length));
  }
  for (auto b : x) {
    if (b > 1) throw ShapeError("x entries must be 0 or 1");
  }
  for (auto b : y) {
    if (b > 1) throw ShapeError("y entries must be 0 or 1");
  }
}

std::string DisjInstance::encode() const {
  validate();
  const std::string xs = format_bits(x);
  const std::string ys = format_bits(y);
  std::string word(static_cast<std::size_t>(k), '1');
  word.reserve(ldisj_word_length(k));
  word += '#';
  for (std::size_t r = 0; r < repetition_count(k); ++r) {
    word += xs;
    word += '#';
    word += ys;
    word += '#';
    word += xs;
    word += '#';
  }
  return word;
}

std::string encode_blocks(int k, std::span<const Bits> blocks) {
  if (k < 0) throw ShapeError("k must be non-negative");
  std::string word(static_cast<std::size_t>(k), '1');
  word += '#';
  for (const auto& block : blocks) {
    word += format_bits(block);
    word += '#';
  }
  return word;
}

BlockEvent FormatChecker::feed(Token token) {
  BlockEvent event;
  switch (phase_) {
    case Phase::Header:
      if (token == Token::One) {
        if (++k_ > kHeaderLimit) phase_ = Phase::Failed;
      } else if (token == Token::Hash && k_ >= 1) {
        block_length_ = ldisj::block_length(k_);
        block_count_ = ldisj::block_count(k_);
        counter_cells_ = cells_for_value(static_cast<std::uint64_t>(k_)) +
                         cells_for_value(block_length_) + cells_for_value(block_count_);
        phase_ = Phase::Blocks;
        event.kind = BlockEvent::Kind::HeaderEnd;
      } else {
        phase_ = Phase::Failed;
      }
      break;
    case Phase::Blocks:
      if (is_bit(token)) {
        if (offset_ == block_length_) {
          phase_ = Phase::Failed;
          break;
        }
        event = {BlockEvent::Kind::Bit, block_, offset_, bit_value(token)};
        ++offset_;
      } else {
        if (offset_ != block_length_) {
          phase_ = Phase::Failed;
          break;
        }
        event = {BlockEvent::Kind::BlockEnd, block_, offset_, 0};
        offset_ = 0;
        if (++block_ == block_count_) phase_ = Phase::Done;
      }
      break;
    case Phase::Done:
      phase_ = Phase::Failed;
      break;
    case Phase::Failed:
      break;
  }
  return event;
}

std::optional<int> FormatChecker::k() const {
  if (phase_ == Phase::Blocks || phase_ == Phase::Done || block_length_ != 0) return k_;
  return std::nullopt;
}

std::size_t FormatChecker::live_cells() const {
  if (block_length_ == 0) return cells_for_value(static_cast<std::uint64_t>(k_));
  return counter_cells_;
}

FormatResult a1_format_check(TokenStream& stream) {
  FormatChecker checker;
  while (auto token = stream.next()) checker.feed(*token);
  if (!checker.accepted()) return {false, std::nullopt};
  return {true, checker.k()};
}

}  // namespace ldisj
