#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldisj/recognizer.hpp"
#include "ldisj/stream.hpp"

namespace ldisj {

struct DisjOracleResult {
  bool disjoint = true;
  // Number of positions with x_i = y_i = 1.
  std::size_t collisions = 0;
};

// ShapeError on length mismatch.
DisjOracleResult disj_oracle(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

// Block-by-block disjointness scan. During repetition r it buffers bits
// [r * 2^k, (r + 1) * 2^k) of the x block, then matches them against the same
// slice of the y block. The buffer never holds more than 2^k bits.
class BlockScanner {
 public:
  explicit BlockScanner(int k);

  void on_bit(std::size_t block, std::size_t offset, int bit);
  void on_block_end(std::size_t block);

  bool collision_found() const { return collision_; }
  // Buffered bits, one cell each.
  std::size_t live_cells() const { return buffered_; }

 private:
  std::size_t slice_length_;
  std::vector<std::uint8_t> buffer_;
  std::size_t buffered_ = 0;
  bool collision_ = false;
};

struct BlockwiseOutcome {
  bool well_formed = false;
  bool fingerprints_match = false;
  bool collision_found = false;
  std::optional<int> k;

  bool accepts() const { return well_formed && fingerprints_match && !collision_found; }
};

// Single pass: format and fingerprint checks plus the block scan. Charges
// "format", "fingerprint" and "block-buffer" components on `meter`.
BlockwiseOutcome run_blockwise_recognizer(TokenStream& stream,
                                          const CompanionChecks::PointSource& point_source,
                                          SpaceMeter* meter = nullptr);

Verdict blockwise_recognize(TokenStream& stream, std::uint64_t seed, SpaceMeter* meter = nullptr);

enum class RecognizerKind { Quantum, Blockwise };
std::string_view recognizer_name(RecognizerKind kind);

struct ExactResult {
  double acceptance = 0.0;
  // Randomness branches evaluated (point, iteration pairs or points).
  std::size_t branches = 0;
  // "joint" (every (t, j) pair through the full recognizer), "factored"
  // (independent point and iteration marginals), or "format" (rejected before
  // any randomness was drawn).
  std::string method;
};

// Acceptance probability over every evaluation point and iteration count and
// over the final measurement. Joint enumeration for k <= 2, factored for k = 3;
// CapacityError beyond kMaxExactK.
ExactResult exact_verdict_distribution(std::string_view word, RecognizerKind kind);
ExactResult exact_verdict_distribution(const DisjInstance& instance, RecognizerKind kind);

// Fraction of evaluation points for which the fingerprint checks pass on a
// well-formed word.
double fingerprint_pass_fraction(std::string_view word, int k);

}  // namespace ldisj
