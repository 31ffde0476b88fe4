#include "ldisj/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "json.hpp"

#include "ldisj/errors.hpp"

namespace ldisj {

namespace {

constexpr double kExactTolerance = 1e-12;
constexpr double kBoundTolerance = 1e-9;
constexpr double kRejectionBound = 0.25;

std::string_view decision_component(RecognizerKind kind) {
  return kind == RecognizerKind::Quantum ? "search" : "block-buffer";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Fills the instance-derived columns shared by exact and trial rows.
ReportRow base_row(std::string_view word, RecognizerKind kind) {
  ReportRow row;
  row.n = word.size();
  row.recognizer = std::string(recognizer_name(kind));
  if (const auto instance = decode_word(word)) {
    const auto oracle = disj_oracle(instance->x, instance->y);
    row.k = instance->k;
    row.disj_value = oracle.disjoint ? 1 : 0;
    row.collisions = oracle.collisions;
    if (kind == RecognizerKind::Quantum) {
      row.closed_form = search_rejection_closed_form(instance->k, oracle.collisions);
    }
  } else {
    TokenStream stream(word);
    row.k = a1_format_check(stream).k;
  }
  const SpaceMeter meter = measure_space(word, kind, 0);
  row.classical_cells_peak = meter.classical_cells_peak;
  row.decision_cells_peak = meter.component_peak(decision_component(kind));
  row.qubits_peak = meter.qubits_peak;
  return row;
}

bool is_member(const ReportRow& row) { return row.disj_value.value_or(0) == 1; }

}  // namespace

DisjInstance generate_instance(int k, std::size_t collisions, std::uint64_t seed) {
  if (k < 1 || k > kMaxRecognizerK) {
    throw CapacityError("instance generation supports k in [1, " +
                        std::to_string(kMaxRecognizerK) + "]");
  }
  const std::size_t length = block_length(k);
  if (collisions > length) {
    throw std::invalid_argument("t = " + std::to_string(collisions) + " exceeds 2^{2k} = " +
                                std::to_string(length));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> positions(length);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  std::shuffle(positions.begin(), positions.end(), rng);

  DisjInstance instance{k, Bits(length, 0), Bits(length, 0)};
  std::uniform_int_distribution<int> disjoint_pair(0, 2);
  for (std::size_t n = 0; n < length; ++n) {
    const std::size_t i = positions[n];
    if (n < collisions) {
      instance.x[i] = 1;
      instance.y[i] = 1;
      continue;
    }
    switch (disjoint_pair(rng)) {
      case 1:
        instance.y[i] = 1;
        break;
      case 2:
        instance.x[i] = 1;
        break;
      default:
        break;
    }
  }
  return instance;
}

std::string corrupted_word(const DisjInstance& instance, std::size_t block, std::size_t offset) {
  instance.validate();
  if (block >= block_count(instance.k) || offset >= block_length(instance.k)) {
    throw IndexError("corruption position out of range");
  }
  std::vector<Bits> blocks;
  for (std::size_t r = 0; r < repetition_count(instance.k); ++r) {
    blocks.push_back(instance.x);
    blocks.push_back(instance.y);
    blocks.push_back(instance.x);
  }
  blocks[block][offset] ^= 1;
  return encode_blocks(instance.k, blocks);
}

std::optional<DisjInstance> decode_word(std::string_view word) {
  TokenStream stream(word);
  const FormatResult format = a1_format_check(stream);
  if (!format.well_formed) return std::nullopt;
  const int k = *format.k;
  const std::size_t length = block_length(k);
  auto block_text = [&](std::size_t block) {
    return word.substr(static_cast<std::size_t>(k) + 1 + block * (length + 1), length);
  };
  const std::string_view x = block_text(0);
  const std::string_view y = block_text(1);
  for (std::size_t block = 0; block < block_count(k); ++block) {
    if (block_text(block) != (role_of(block) == BlockRole::Y ? y : x)) return std::nullopt;
  }
  return DisjInstance{k, parse_bits(x), parse_bits(y)};
}

SpaceMeter measure_space(std::string_view word, RecognizerKind kind, std::uint64_t seed) {
  SpaceMeter meter;
  TokenStream stream(word);
  if (kind == RecognizerKind::Quantum) {
    recognize_ldisj(stream, seed, &meter);
  } else {
    blockwise_recognize(stream, seed, &meter);
  }
  return meter;
}

ReportRow exact_row(std::string_view word, RecognizerKind kind, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  ReportRow row = base_row(word, kind);
  const ExactResult exact = exact_verdict_distribution(word, kind);
  row.mode = "exact";
  row.method = exact.method;
  row.branches = exact.branches;
  row.acceptance = exact.acceptance;
  row.complement_acceptance = 1.0 - exact.acceptance;
  row.bound_ok = is_member(row) ? exact.acceptance >= 1.0 - kExactTolerance
                                : row.complement_acceptance >= kRejectionBound - kBoundTolerance;
  if (timing) row.wall_ms = elapsed_ms(start);
  return row;
}

ReportRow trial_row(std::string_view word, RecognizerKind kind, std::size_t trials,
                    std::uint64_t seed, TrialTally* tally, bool timing) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  ReportRow row = base_row(word, kind);
  TrialTally counts;
  std::mt19937_64 seeds(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TokenStream stream(word);
    const std::uint64_t trial_seed = seeds();
    const Verdict verdict = kind == RecognizerKind::Quantum ? recognize_ldisj(stream, trial_seed)
                                                            : blockwise_recognize(stream, trial_seed);
    ++counts.trials;
    if (verdict.accepts()) {
      ++counts.accepted;
    } else if (verdict.channel == Channel::Format) {
      ++counts.rejected_format;
    } else if (verdict.channel == Channel::Fingerprint) {
      ++counts.rejected_fingerprint;
    } else {
      ++counts.rejected_decision;
    }
  }
  row.mode = "trials";
  row.method = "sampled";
  row.seed = seed;
  row.trials = trials;
  row.acceptance = static_cast<double>(counts.accepted) / static_cast<double>(trials);
  row.complement_acceptance = 1.0 - row.acceptance;
  const double slack = 3.0 * std::sqrt(kRejectionBound * (1.0 - kRejectionBound) /
                                       static_cast<double>(trials));
  row.bound_ok = is_member(row) ? counts.accepted == trials
                                : row.complement_acceptance >= kRejectionBound - slack;
  if (timing) row.wall_ms = elapsed_ms(start);
  if (tally) *tally = counts;
  return row;
}

std::vector<ReportRow> sweep(std::span<const int> ks, std::optional<std::size_t> t_low,
                             std::optional<std::size_t> t_high,
                             std::span<const RecognizerKind> recognizers, std::uint64_t seed,
                             bool timing) {
  std::vector<ReportRow> rows;
  for (const int k : ks) {
    if (k < 1 || k > kMaxExactK) {
      throw CapacityError("sweep supports k in [1, " + std::to_string(kMaxExactK) + "]");
    }
    const std::size_t low = t_low.value_or(0);
    const std::size_t high = t_high.value_or(block_length(k));
    if (low > high || high > block_length(k)) {
      throw std::invalid_argument("t range [" + std::to_string(low) + ", " +
                                  std::to_string(high) + "] invalid for k = " + std::to_string(k));
    }
    for (std::size_t t = low; t <= high; ++t) {
      const std::string word = generate_instance(k, t, seed).encode();
      for (const auto kind : recognizers) rows.push_back(exact_row(word, kind, timing));
    }
  }
  return rows;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  std::string text(buffer);
  if (text.find_first_of(".eni") == std::string::npos) text += ".0";
  return text;
}

namespace {

template <class T>
std::string optional_text(const std::optional<T>& value) {
  if (!value) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_number(*value);
  } else {
    return std::to_string(*value);
  }
}

std::vector<std::string> row_fields(const ReportRow& row) {
  return {optional_text(row.k),
          std::to_string(row.n),
          optional_text(row.disj_value),
          optional_text(row.collisions),
          row.recognizer,
          row.mode,
          row.method,
          optional_text(row.branches),
          optional_text(row.seed),
          optional_text(row.trials),
          format_number(row.acceptance),
          format_number(row.complement_acceptance),
          optional_text(row.closed_form),
          row.bound_ok ? "true" : "false",
          std::to_string(row.classical_cells_peak),
          std::to_string(row.decision_cells_peak),
          std::to_string(row.qubits_peak),
          optional_text(row.wall_ms)};
}

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ReportRow> rows, std::string_view comment) {
  out << "# " << comment << '\n';
  for (std::size_t c = 0; c < kReportColumns.size(); ++c) {
    out << (c ? "," : "") << kReportColumns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    const auto fields = row_fields(row);
    for (std::size_t c = 0; c < fields.size(); ++c) out << (c ? "," : "") << fields[c];
    out << '\n';
  }
}

void write_json(std::ostream& out, std::span<const ReportRow> rows, std::string_view command,
                std::string_view generated) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["generated"] = generated;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["k"] = optional_json(row.k);
    j["n"] = row.n;
    j["disj_value"] = optional_json(row.disj_value);
    j["t"] = optional_json(row.collisions);
    j["recognizer"] = row.recognizer;
    j["mode"] = row.mode;
    j["method"] = row.method;
    j["branches"] = optional_json(row.branches);
    j["seed"] = optional_json(row.seed);
    j["trials"] = optional_json(row.trials);
    j["acceptance"] = row.acceptance;
    j["complement_acceptance"] = row.complement_acceptance;
    j["closed_form"] = optional_json(row.closed_form);
    j["bound_ok"] = row.bound_ok;
    j["classical_cells_peak"] = row.classical_cells_peak;
    j["decision_cells_peak"] = row.decision_cells_peak;
    j["qubits_peak"] = row.qubits_peak;
    j["wall_ms"] = optional_json(row.wall_ms);
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace ldisj
