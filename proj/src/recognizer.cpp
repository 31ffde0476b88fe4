#include "ldisj/recognizer.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ldisj/errors.hpp"

namespace ldisj {

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::Format:
      return "A1";
    case Channel::Fingerprint:
      return "A2";
    case Channel::Search:
      return "A3";
    case Channel::BlockScan:
      return "blockwise";
  }
  return "unknown";
}

CompanionChecks::CompanionChecks(PointSource point_source)
    : point_source_(std::move(point_source)) {}

BlockEvent CompanionChecks::feed(Token token) {
  if (format_.failed()) return {};
  const BlockEvent event = format_.feed(token);
  if (format_.failed()) return {};
  switch (event.kind) {
    case BlockEvent::Kind::HeaderEnd: {
      const int k = *format_.k();
      if (k <= kMaxRecognizerK) {
        const std::uint64_t prime = find_prime(k);
        fingerprint_.emplace(k, prime, point_source_(k, prime));
      }
      break;
    }
    case BlockEvent::Kind::Bit:
      if (fingerprint_) fingerprint_->on_bit(event.bit);
      break;
    case BlockEvent::Kind::BlockEnd:
      if (fingerprint_) fingerprint_->on_block_end(event.block);
      break;
    case BlockEvent::Kind::None:
      break;
  }
  return event;
}

double QuantumOutcome::acceptance() const {
  if (!well_formed || !fingerprints_match) return 0.0;
  return std::clamp(1.0 - one_probability, 0.0, 1.0);
}

QuantumOutcome run_quantum_recognizer(TokenStream& stream, const ChoiceSource& choices,
                                      SpaceMeter* meter) {
  int iterations = 0;
  CompanionChecks checks([&](int k, std::uint64_t prime) {
    const RandomChoices drawn = choices(k, prime);
    iterations = drawn.iterations;
    return drawn.point;
  });
  std::optional<SearchProcedure> search;

  while (auto token = stream.next()) {
    const BlockEvent event = checks.feed(*token);
    switch (event.kind) {
      case BlockEvent::Kind::HeaderEnd:
        if (checks.active()) {
          const int k = *checks.format().k();
          search.emplace(k, iterations);
          if (meter) meter->charge_qubits(static_cast<std::size_t>(search_register_qubits(k)));
        }
        break;
      case BlockEvent::Kind::Bit:
        if (search) search->on_bit(event.block, event.offset, event.bit);
        break;
      case BlockEvent::Kind::BlockEnd:
        if (search) search->on_block_end(event.block);
        break;
      case BlockEvent::Kind::None:
        break;
    }
    if (meter) {
      const std::size_t format_cells = checks.format_cells();
      const std::size_t fingerprint_cells = checks.fingerprint_cells();
      const std::size_t search_cells = search ? search->live_cells() : 0;
      meter->charge_component("format", format_cells);
      meter->charge_component("fingerprint", fingerprint_cells);
      meter->charge_component("search", search_cells);
      meter->charge_cells(format_cells + fingerprint_cells + search_cells);
    }
  }
  if (meter) meter->input_length = stream.size();

  QuantumOutcome outcome;
  outcome.well_formed = checks.format().accepted();
  outcome.k = checks.format().k();
  if (!outcome.well_formed) return outcome;
  if (!checks.active()) {
    throw CapacityError("word encodes k = " + std::to_string(*outcome.k) +
                        ", recognizer supports k <= " + std::to_string(kMaxRecognizerK));
  }
  outcome.fingerprints_match = checks.fingerprints_match();
  outcome.one_probability = search->one_probability();
  return outcome;
}

Verdict recognize_ldisj(TokenStream& stream, std::uint64_t seed, SpaceMeter* meter) {
  std::mt19937_64 rng(seed);
  const QuantumOutcome outcome = run_quantum_recognizer(
      stream,
      [&rng](int k, std::uint64_t prime) {
        RandomChoices drawn;
        drawn.point = std::uniform_int_distribution<std::uint64_t>(0, prime - 1)(rng);
        drawn.iterations =
            std::uniform_int_distribution<int>(0, static_cast<int>(repetition_count(k)) - 1)(rng);
        return drawn;
      },
      meter);
  if (!outcome.well_formed) return {Decision::Reject, Channel::Format};
  if (!outcome.fingerprints_match) return {Decision::Reject, Channel::Fingerprint};
  const bool measured_one =
      std::bernoulli_distribution(std::clamp(outcome.one_probability, 0.0, 1.0))(rng);
  return {measured_one ? Decision::Reject : Decision::Accept, Channel::Search};
}

}  // namespace ldisj
