#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldisj/qcore.hpp"
#include "ldisj/stream.hpp"

namespace ldisj {

using Bits = std::vector<std::uint8_t>;

Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

// Largest k the recognizers accept (fingerprint prime below 2^29).
inline constexpr int kMaxRecognizerK = 7;
// Largest k for exact probability evaluation.
inline constexpr int kMaxExactK = 3;

// Word geometry for parameter k: 1^k # then 3 * 2^k blocks of 2^{2k} bits,
// each followed by '#'. Block b belongs to repetition b / 3 and plays the role
// x, y, z for b % 3 = 0, 1, 2.
constexpr std::size_t block_length(int k) { return std::size_t{1} << (2 * k); }
constexpr std::size_t repetition_count(int k) { return std::size_t{1} << k; }
constexpr std::size_t block_count(int k) { return 3 * repetition_count(k); }
constexpr std::size_t ldisj_word_length(int k) {
  return static_cast<std::size_t>(k) + 1 + block_count(k) * (block_length(k) + 1);
}

enum class BlockRole { X = 0, Y = 1, Z = 2 };
constexpr std::size_t repetition_of(std::size_t block) { return block / 3; }
constexpr BlockRole role_of(std::size_t block) { return static_cast<BlockRole>(block % 3); }

struct DisjInstance {
  int k = 1;
  Bits x;
  Bits y;

  // ShapeError unless k >= 1 and |x| = |y| = 2^{2k} with 0/1 entries.
  void validate() const;
  // 1^k#(x#y#x#)^{2^k}
  std::string encode() const;
};

// 1^k#B_0#B_1#...#B_{m-1}# for arbitrary blocks; used for words that break
// the repetition structure.
std::string encode_blocks(int k, std::span<const Bits> blocks);

// What a token meant, as seen by the format checker.
struct BlockEvent {
  enum class Kind { None, HeaderEnd, Bit, BlockEnd };
  Kind kind = Kind::None;
  std::size_t block = 0;
  std::size_t offset = 0;
  int bit = 0;
};

// Deterministic format check: accepts exactly the words
// 1^k#B_0#...#B_{3*2^k - 1}# with k >= 1 and every |B| = 2^{2k}.
// Counters only; once a violation is seen it absorbs all later tokens.
class FormatChecker {
 public:
  BlockEvent feed(Token token);

  bool failed() const { return phase_ == Phase::Failed; }
  bool accepted() const { return phase_ == Phase::Done; }
  std::optional<int> k() const;
  std::size_t live_cells() const;

 private:
  enum class Phase { Header, Blocks, Done, Failed };

  Phase phase_ = Phase::Header;
  int k_ = 0;
  std::size_t block_ = 0;
  std::size_t offset_ = 0;
  std::size_t block_length_ = 0;
  std::size_t block_count_ = 0;
  std::size_t counter_cells_ = 0;
};

struct FormatResult {
  bool well_formed = false;
  std::optional<int> k;
};

FormatResult a1_format_check(TokenStream& stream);

// Smallest prime strictly between 2^{4k} and 2^{4k+1}, by trial division.
// CapacityError for k outside [1, kMaxRecognizerK].
std::uint64_t find_prime(int k);
bool is_prime(std::uint64_t n);

// Equality tests on polynomial fingerprints F_B(point) = sum_i B_i point^i mod prime,
// accumulated bit by bit. Checks F_x == F_z within each repetition and
// F_x, F_y against the previous repetition.
class FingerprintChecker {
 public:
  // std::invalid_argument unless prime is a prime in (2^{4k}, 2^{4k+1}) and point < prime.
  FingerprintChecker(int k, std::uint64_t prime, std::uint64_t point);

  void on_bit(int bit);
  void on_block_end(std::size_t block);

  bool passed() const { return passed_; }
  std::size_t live_cells() const { return live_cells_; }

 private:
  std::uint64_t prime_;
  std::uint64_t point_;
  std::uint64_t acc_ = 0;
  std::uint64_t point_power_ = 1;
  std::uint64_t x_value_ = 0;
  std::uint64_t y_value_ = 0;
  bool passed_ = true;
  std::size_t live_cells_;
};

// Input must be well-formed for k.
bool a2_fingerprint_check(TokenStream& stream, int k, std::uint64_t point, std::uint64_t prime);

// Streaming search over the index register. With `iterations` = j it applies
// one search iteration per repetition 0..j-1 as the bits of x, y, z arrive,
// then flags x and copies (x_i and y_i) into the result qubit during
// repetition j. Later blocks are ignored.
class SearchProcedure {
 public:
  SearchProcedure(int k, int iterations);

  void on_bit(std::size_t block, std::size_t offset, int bit);
  void on_block_end(std::size_t block);

  // True once the y block of repetition j has been read.
  bool complete() const { return complete_; }
  // Probability that measuring the result qubit gives 1; StreamError if incomplete.
  double one_probability() const;
  const QuantumRegister& state() const { return register_; }
  int iterations() const { return iterations_; }
  std::size_t live_cells() const { return live_cells_; }

 private:
  int k_;
  int iterations_;
  QuantumRegister register_;
  bool complete_ = false;
  std::size_t live_cells_;
};

// Probability that the search procedure measures 1 on a well-formed word.
// StreamError if the word ends before repetition j's y block.
double a3_one_probability(TokenStream& stream, int k, int iterations);
// One sampled run: returns 1 - b for the measured bit b.
int a3_quantum_run(TokenStream& stream, int k, int iterations, std::mt19937_64& rng);
// Probability of measuring 1, averaged over j in [0, 2^k - 1]. CapacityError for k > kMaxExactK.
double a3_exact_output_distribution(const DisjInstance& instance);
// 1/2 - sin(4 m theta) / (4 m sin 2 theta), m = 2^k, sin^2 theta = collisions / 2^{2k};
// continuous limits 0 and 1 at collisions = 0 and collisions = 2^{2k}.
double search_rejection_closed_form(int k, std::size_t collisions);
// sin^2((2j + 1) theta) for the same theta.
double search_iteration_closed_form(int k, std::size_t collisions, int iterations);

enum class Decision { Accept, Reject };
enum class Channel { Format, Fingerprint, Search, BlockScan };
std::string_view channel_name(Channel channel);

struct Verdict {
  Decision decision = Decision::Reject;
  Channel channel = Channel::Format;

  bool accepts() const { return decision == Decision::Accept; }
  // Same run read as a recognizer of the complement language.
  bool complement_accepts() const { return !accepts(); }
};

// Format check and fingerprint check running side by side. Fingerprints start
// at the end of the header, once k is known; point_source picks the
// evaluation point from [0, prime).
class CompanionChecks {
 public:
  using PointSource = std::function<std::uint64_t(int k, std::uint64_t prime)>;

  explicit CompanionChecks(PointSource point_source);

  // Returns the format event, or Kind::None once the format check has failed.
  BlockEvent feed(Token token);

  const FormatChecker& format() const { return format_; }
  bool fingerprints_match() const { return fingerprint_ && fingerprint_->passed(); }
  // True once the header has been read and k is within kMaxRecognizerK.
  bool active() const { return fingerprint_.has_value(); }
  std::size_t format_cells() const { return format_.live_cells(); }
  std::size_t fingerprint_cells() const { return fingerprint_ ? fingerprint_->live_cells() : 0; }

 private:
  PointSource point_source_;
  FormatChecker format_;
  std::optional<FingerprintChecker> fingerprint_;
};

struct RandomChoices {
  std::uint64_t point = 0;
  int iterations = 0;
};
using ChoiceSource = std::function<RandomChoices(int k, std::uint64_t prime)>;

// Everything but the final measurement of one quantum run.
struct QuantumOutcome {
  bool well_formed = false;
  bool fingerprints_match = false;
  std::optional<int> k;
  double one_probability = 0.0;

  // Acceptance probability over the final measurement only.
  double acceptance() const;
};

// Single pass over `stream`; choices are drawn when the header ends.
// Charges "format", "fingerprint" and "search" components on `meter`.
QuantumOutcome run_quantum_recognizer(TokenStream& stream, const ChoiceSource& choices,
                                      SpaceMeter* meter = nullptr);

// Accepts members of the disjointness language with probability 1 and rejects
// non-members with probability >= 1/4. Point, iteration count and measurement
// are drawn from a generator seeded with `seed`.
Verdict recognize_ldisj(TokenStream& stream, std::uint64_t seed, SpaceMeter* meter = nullptr);

}  // namespace ldisj
