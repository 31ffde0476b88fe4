#include "ldisj/classical.hpp"

#include <random>
#include <string>

#include "ldisj/errors.hpp"

namespace ldisj {

DisjOracleResult disj_oracle(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) {
    throw ShapeError("disjointness inputs have lengths " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()));
  }
  DisjOracleResult result;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) ++result.collisions;
  }
  result.disjoint = result.collisions == 0;
  return result;
}

BlockScanner::BlockScanner(int k) : slice_length_(repetition_count(k)), buffer_(slice_length_) {}

void BlockScanner::on_bit(std::size_t block, std::size_t offset, int bit) {
  const std::size_t start = repetition_of(block) * slice_length_;
  if (offset < start || offset >= start + slice_length_) return;
  switch (role_of(block)) {
    case BlockRole::X:
      buffer_[offset - start] = static_cast<std::uint8_t>(bit);
      ++buffered_;
      break;
    case BlockRole::Y:
      if (bit && buffer_[offset - start]) collision_ = true;
      break;
    case BlockRole::Z:
      break;
  }
}

void BlockScanner::on_block_end(std::size_t block) {
  if (role_of(block) == BlockRole::Y) buffered_ = 0;
}

BlockwiseOutcome run_blockwise_recognizer(TokenStream& stream,
                                          const CompanionChecks::PointSource& point_source,
                                          SpaceMeter* meter) {
  CompanionChecks checks(point_source);
  std::optional<BlockScanner> scanner;

  while (auto token = stream.next()) {
    const BlockEvent event = checks.feed(*token);
    switch (event.kind) {
      case BlockEvent::Kind::HeaderEnd:
        if (checks.active()) scanner.emplace(*checks.format().k());
        break;
      case BlockEvent::Kind::Bit:
        if (scanner) scanner->on_bit(event.block, event.offset, event.bit);
        break;
      case BlockEvent::Kind::BlockEnd:
        if (scanner) scanner->on_block_end(event.block);
        break;
      case BlockEvent::Kind::None:
        break;
    }
    if (meter) {
      const std::size_t format_cells = checks.format_cells();
      const std::size_t fingerprint_cells = checks.fingerprint_cells();
      const std::size_t buffer_cells = scanner ? scanner->live_cells() : 0;
      meter->charge_component("format", format_cells);
      meter->charge_component("fingerprint", fingerprint_cells);
      meter->charge_component("block-buffer", buffer_cells);
      meter->charge_cells(format_cells + fingerprint_cells + buffer_cells);
    }
  }
  if (meter) meter->input_length = stream.size();

  BlockwiseOutcome outcome;
  outcome.well_formed = checks.format().accepted();
  outcome.k = checks.format().k();
  if (!outcome.well_formed) return outcome;
  if (!checks.active()) {
    throw CapacityError("word encodes k = " + std::to_string(*outcome.k) +
                        ", recognizer supports k <= " + std::to_string(kMaxRecognizerK));
  }
  outcome.fingerprints_match = checks.fingerprints_match();
  outcome.collision_found = scanner->collision_found();
  return outcome;
}

Verdict blockwise_recognize(TokenStream& stream, std::uint64_t seed, SpaceMeter* meter) {
  std::mt19937_64 rng(seed);
  const BlockwiseOutcome outcome = run_blockwise_recognizer(
      stream,
      [&rng](int, std::uint64_t prime) {
        return std::uniform_int_distribution<std::uint64_t>(0, prime - 1)(rng);
      },
      meter);
  if (!outcome.well_formed) return {Decision::Reject, Channel::Format};
  if (!outcome.fingerprints_match) return {Decision::Reject, Channel::Fingerprint};
  return {outcome.collision_found ? Decision::Reject : Decision::Accept, Channel::BlockScan};
}

std::string_view recognizer_name(RecognizerKind kind) {
  return kind == RecognizerKind::Quantum ? "quantum" : "blockwise";
}

double fingerprint_pass_fraction(std::string_view word, int k) {
  const std::uint64_t prime = find_prime(k);
  std::uint64_t passes = 0;
  for (std::uint64_t point = 0; point < prime; ++point) {
    TokenStream stream(word);
    if (a2_fingerprint_check(stream, k, point, prime)) ++passes;
  }
  return static_cast<double>(passes) / static_cast<double>(prime);
}

ExactResult exact_verdict_distribution(std::string_view word, RecognizerKind kind) {
  TokenStream format_stream(word);
  const FormatResult format = a1_format_check(format_stream);
  if (!format.well_formed) return {0.0, 0, "format"};
  const int k = *format.k;
  if (k > kMaxExactK) {
    throw CapacityError("exact evaluation supports k <= " + std::to_string(kMaxExactK) +
                        ", word encodes k = " + std::to_string(k));
  }
  const std::uint64_t prime = find_prime(k);
  const auto iterations = static_cast<int>(repetition_count(k));

  if (kind == RecognizerKind::Blockwise) {
    double accepted = 0.0;
    for (std::uint64_t point = 0; point < prime; ++point) {
      TokenStream stream(word);
      const auto outcome =
          run_blockwise_recognizer(stream, [point](int, std::uint64_t) { return point; });
      if (outcome.accepts()) accepted += 1.0;
    }
    return {accepted / static_cast<double>(prime), prime, "joint"};
  }

  if (k <= 2) {
    double total = 0.0;
    for (std::uint64_t point = 0; point < prime; ++point) {
      for (int j = 0; j < iterations; ++j) {
        TokenStream stream(word);
        const auto outcome = run_quantum_recognizer(
            stream, [point, j](int, std::uint64_t) { return RandomChoices{point, j}; });
        total += outcome.acceptance();
      }
    }
    const std::size_t branches = prime * static_cast<std::size_t>(iterations);
    return {total / static_cast<double>(branches), branches, "joint"};
  }

  // Point and iteration count are drawn independently and the search
  // procedure never reads the point, so the acceptance probability factors.
  const double pass_fraction = fingerprint_pass_fraction(word, k);
  double search_accept = 0.0;
  for (int j = 0; j < iterations; ++j) {
    TokenStream stream(word);
    search_accept += 1.0 - a3_one_probability(stream, k, j);
  }
  search_accept /= iterations;
  return {pass_fraction * search_accept, prime + static_cast<std::size_t>(iterations),
          "factored"};
}

ExactResult exact_verdict_distribution(const DisjInstance& instance, RecognizerKind kind) {
  const std::string word = instance.encode();
  return exact_verdict_distribution(word, kind);
}

}  // namespace ldisj
