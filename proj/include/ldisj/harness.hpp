#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldisj/classical.hpp"
#include "ldisj/recognizer.hpp"

namespace ldisj {

// Instance with exactly `collisions` positions where x_i = y_i = 1, placed
// uniformly at random; every other position is drawn uniformly from the three
// disjoint pairs (0,0), (0,1), (1,0). collisions = 0 yields a member.
// std::invalid_argument if collisions > 2^{2k}; CapacityError if k > kMaxRecognizerK.
DisjInstance generate_instance(int k, std::size_t collisions, std::uint64_t seed);

// Encoding of `instance` with one bit flipped in block `block` (0-based over
// all 3 * 2^k blocks). The result is well-formed but breaks the repetition
// structure, so it is not in the language.
std::string corrupted_word(const DisjInstance& instance, std::size_t block, std::size_t offset);

// The instance a word encodes, if the word is exactly 1^k#(x#y#x#)^{2^k}.
std::optional<DisjInstance> decode_word(std::string_view word);

// One report line. Exact rows carry method and branches; trial rows carry
// seed and trials.
struct ReportRow {
  std::optional<int> k;
  std::size_t n = 0;
  std::optional<int> disj_value;
  std::optional<std::size_t> collisions;
  std::string recognizer;
  std::string mode;
  std::string method;
  std::optional<std::size_t> branches;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  double acceptance = 0.0;
  double complement_acceptance = 0.0;
  std::optional<double> closed_form;
  bool bound_ok = false;
  std::size_t classical_cells_peak = 0;
  std::size_t decision_cells_peak = 0;
  std::size_t qubits_peak = 0;
  std::optional<double> wall_ms;
};

inline constexpr std::array<std::string_view, 18> kReportColumns = {
    "k",          "n",       "disj_value", "t",          "recognizer",
    "mode",       "method",  "branches",   "seed",       "trials",
    "acceptance", "complement_acceptance", "closed_form", "bound_ok",
    "classical_cells_peak", "decision_cells_peak", "qubits_peak", "wall_ms"};

struct TrialTally {
  std::size_t trials = 0;
  std::size_t accepted = 0;
  std::size_t rejected_format = 0;
  std::size_t rejected_fingerprint = 0;
  std::size_t rejected_decision = 0;
};

// Space peaks of one seeded run; the "decision" cells are those of the
// search procedure (quantum) or the block buffer (blockwise).
SpaceMeter measure_space(std::string_view word, RecognizerKind kind, std::uint64_t seed);

ReportRow exact_row(std::string_view word, RecognizerKind kind, bool timing = false);
ReportRow trial_row(std::string_view word, RecognizerKind kind, std::size_t trials,
                    std::uint64_t seed, TrialTally* tally = nullptr, bool timing = false);

// Exact rows for every (k, t, recognizer) in the given order; the instance for
// (k, t) is generate_instance(k, t, seed).
std::vector<ReportRow> sweep(std::span<const int> ks, std::optional<std::size_t> t_low,
                             std::optional<std::size_t> t_high,
                             std::span<const RecognizerKind> recognizers, std::uint64_t seed,
                             bool timing = false);

std::string format_number(double value);
// First line is "# <comment>", then the header row, then one line per row.
void write_csv(std::ostream& out, std::span<const ReportRow> rows, std::string_view comment);
void write_json(std::ostream& out, std::span<const ReportRow> rows, std::string_view command,
                std::string_view generated);

// Exit status: 0 success, 1 usage error, 2 capacity or scale error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ldisj
