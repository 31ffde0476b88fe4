// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ldisj/classical.hpp"
#include "ldisj/harness.hpp"
#include "ldisj/qcore.hpp"
#include "ldisj/recognizer.hpp"
#include "dense_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace ldisj;
using ldisj::testing::Amplitudes;
using ldisj::testing::max_abs_diff;
using ldisj::testing::random_bits;
using ldisj::testing::random_state;

// Collects failures for one criterion; `detail` ends up on the summary line.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

bool run_criterion(int number, const std::string& name, double budget_s,
                   const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < budget_s, "runtime " + fmt(seconds) + " s over budget " + fmt(budget_s) + " s");
  const bool ok = check.failed == 0;
  std::printf("criterion %d %-34s %s  %.2fs  %s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
              seconds, check.detail.c_str());
  for (const auto& f : check.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

std::vector<Bits> repeated_blocks(const DisjInstance& instance) {
  std::vector<Bits> blocks;
  for (std::size_t r = 0; r < repetition_count(instance.k); ++r) {
    blocks.push_back(instance.x);
    blocks.push_back(instance.y);
    blocks.push_back(instance.x);
  }
  return blocks;
}

std::string label(int k, std::size_t t) {
  return "k=" + std::to_string(k) + " t=" + std::to_string(t);
}

void one_sided_acceptance(Check& c) {
  double worst = 0.0;
  std::size_t count = 0;
  for (int k = 1; k <= 2; ++k) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto instance = generate_instance(k, 0, 1000 * k + seed);
      const double acceptance = exact_verdict_distribution(instance, RecognizerKind::Quantum).acceptance;
      worst = std::max(worst, std::abs(1.0 - acceptance));
      c.expect(std::abs(1.0 - acceptance) <= 1e-12, label(k, 0) + " acceptance " + fmt(acceptance));
      ++count;
    }
  }
  c.detail = std::to_string(count) + " members, max |1 - acceptance| = " + fmt(worst);
}

void rejection_bound(Check& c) {
  double weakest = 1.0;
  std::size_t count = 0;
  for (int k = 1; k <= 2; ++k) {
    for (std::size_t t = 1; t <= block_length(k); ++t) {
      const auto instance = generate_instance(k, t, 500 + t);
      const double rejection =
          1.0 - exact_verdict_distribution(instance, RecognizerKind::Quantum).acceptance;
      weakest = std::min(weakest, rejection);
      c.expect(rejection >= 0.25 - 1e-9, label(k, t) + " rejection " + fmt(rejection));
      ++count;
    }
    // Members and non-members with one block altered, in every block position.
    std::mt19937_64 rng(70 + k);
    for (const std::size_t t : {std::size_t{0}, std::size_t{1}}) {
      const auto base = generate_instance(k, t, 900 + k);
      for (std::size_t block = 0; block < block_count(k); ++block) {
        auto blocks = repeated_blocks(base);
        blocks[block][rng() % block_length(k)] ^= 1;
        const double rejection =
            1.0 - exact_verdict_distribution(encode_blocks(k, blocks), RecognizerKind::Quantum).acceptance;
        weakest = std::min(weakest, rejection);
        c.expect(rejection >= 0.25 - 1e-9,
                 label(k, t) + " altered block " + std::to_string(block) + " rejection " + fmt(rejection));
        ++count;
      }
    }
  }
  c.detail = std::to_string(count) + " non-members, min rejection = " + fmt(weakest);
}

void grover_closed_form(Check& c) {
  double worst_avg = 0.0;
  double worst_j = 0.0;
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t t = 1; t < block_length(k); ++t) {
      const auto instance = generate_instance(k, t, 300 + t);
      const std::string word = instance.encode();
      double sum = 0.0;
      for (int j = 0; j < static_cast<int>(repetition_count(k)); ++j) {
        TokenStream stream(word);
        const double p = a3_one_probability(stream, k, j);
        sum += p;
        const double err = std::abs(p - search_iteration_closed_form(k, t, j));
        worst_j = std::max(worst_j, err);
        c.expect(err <= 1e-9, label(k, t) + " j=" + std::to_string(j) + " error " + fmt(err));
      }
      const double average = a3_exact_output_distribution(instance);
      c.expect(std::abs(average - sum / static_cast<double>(repetition_count(k))) <= 1e-12,
               label(k, t) + " average mismatch");
      const double err = std::abs(average - search_rejection_closed_form(k, t));
      worst_avg = std::max(worst_avg, err);
      c.expect(err <= 1e-9, label(k, t) + " average error " + fmt(err));
    }
  }
  c.detail = "max error average " + fmt(worst_avg) + ", per-j " + fmt(worst_j);
}

// Points where two 4-bit strings have equal fingerprints mod 17, by direct evaluation.
std::size_t common_roots(const Bits& a, const Bits& b, std::uint64_t prime) {
  std::size_t roots = 0;
  for (std::uint64_t point = 0; point < prime; ++point) {
    roots += ldisj::testing::horner_fingerprint(a, point, prime) ==
             ldisj::testing::horner_fingerprint(b, point, prime);
  }
  return roots;
}

void fingerprint_soundness(Check& c) {
  const int k = 1;
  const std::uint64_t p = find_prime(k);
  c.expect(p == 17, "prime " + std::to_string(p));
  std::size_t worst = 0;
  std::size_t words = 0;
  const Bits y = parse_bits("0110");
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      if (a == b) continue;
      Bits xa(4);
      Bits xb(4);
      for (int i = 0; i < 4; ++i) {
        xa[i] = (a >> i) & 1u;
        xb[i] = (b >> i) & 1u;
      }
      const std::size_t roots = common_roots(xa, xb, p);
      // Each family violates exactly one test of the chain.
      std::vector<std::vector<Bits>> families = {
          {xa, y, xb, xa, y, xa},  // x vs z in repetition 0
          {xa, y, xa, xb, y, xb},  // x of repetition 0 vs x of repetition 1
          {y, xa, y, y, xb, y},    // y of repetition 0 vs y of repetition 1
      };
      for (const auto& blocks : families) {
        const std::string word = encode_blocks(k, blocks);
        std::size_t passes = 0;
        for (std::uint64_t point = 0; point < p; ++point) {
          TokenStream stream(word);
          passes += a2_fingerprint_check(stream, k, point, p);
        }
        c.expect(passes == roots, "pass count differs from root count");
        c.expect(passes <= 3, "pattern passes on " + std::to_string(passes) + " points");
        worst = std::max(worst, passes);
        ++words;
      }
    }
  }
  c.detail = std::to_string(words) + " single-test violations, max passing points " +
             std::to_string(worst) + "/17 (bound 3/17 <= 1/4)";
}

void oracle_equivalence(Check& c) {
  std::size_t members = 0;
  double max_non_member = 0.0;
  for (unsigned xs = 0; xs < 16; ++xs) {
    for (unsigned ys = 0; ys < 16; ++ys) {
      DisjInstance instance{1, Bits(4), Bits(4)};
      for (int i = 0; i < 4; ++i) {
        instance.x[i] = (xs >> i) & 1u;
        instance.y[i] = (ys >> i) & 1u;
      }
      const bool disjoint = disj_oracle(instance.x, instance.y).disjoint;
      members += disjoint;
      const double q = exact_verdict_distribution(instance, RecognizerKind::Quantum).acceptance;
      const bool certain = std::abs(q - 1.0) <= 1e-12;
      c.expect(certain == disjoint, "quantum x=" + format_bits(instance.x) + " y=" + format_bits(instance.y));
      if (!disjoint) {
        max_non_member = std::max(max_non_member, q);
        c.expect(q <= 0.75 + 1e-9, "non-member accepted with " + fmt(q));
      }
      const double b = exact_verdict_distribution(instance, RecognizerKind::Blockwise).acceptance;
      c.expect(b == (disjoint ? 1.0 : 0.0), "blockwise x=" + format_bits(instance.x) + " y=" +
                                                 format_bits(instance.y));
    }
  }
  std::mt19937_64 rng(55);
  std::size_t random_count = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int n = 0; n < 100; ++n) {
      const std::size_t t = n % 2 ? 0 : 1 + rng() % 4;
      const auto instance = generate_instance(k, t, rng());
      const bool disjoint = disj_oracle(instance.x, instance.y).disjoint;
      const double b = exact_verdict_distribution(instance, RecognizerKind::Blockwise).acceptance;
      c.expect(b == (disjoint ? 1.0 : 0.0), "blockwise random " + label(k, t));
      ++random_count;
    }
  }
  c.detail = "256 pairs (" + std::to_string(members) + " members, max non-member acceptance " +
             fmt(max_non_member) + "), " + std::to_string(random_count) + " random blockwise";
}

void space_separation(Check& c) {
  std::ostringstream detail;
  std::vector<double> buffers;
  std::vector<double> totals;
  for (int k = 1; k <= 6; ++k) {
    const std::string word = generate_instance(k, 0, 8).encode();
    const SpaceMeter q = measure_space(word, RecognizerKind::Quantum, 1);
    const SpaceMeter b = measure_space(word, RecognizerKind::Blockwise, 1);
    const auto slice = static_cast<double>(repetition_count(k));
    c.expect(q.qubits_peak == static_cast<std::size_t>(2 * k + 2),
             "k=" + std::to_string(k) + " qubits " + std::to_string(q.qubits_peak));
    c.expect(q.component_peak("search") == cells_for_value(repetition_count(k) - 1),
             "k=" + std::to_string(k) + " search cells");
    const double buffer = static_cast<double>(b.component_peak("block-buffer"));
    c.expect(buffer >= slice && buffer <= 8 * slice,
             "k=" + std::to_string(k) + " block buffer " + fmt(buffer));
    buffers.push_back(buffer);
    totals.push_back(static_cast<double>(q.classical_cells_peak));
    if (k <= 3) {
      detail << "; k=" << k << ": qubits " << q.qubits_peak << ", quantum cells "
             << q.classical_cells_peak << " (search " << q.component_peak("search")
             << "), blockwise cells " << b.classical_cells_peak << " (buffer " << buffer << ")";
    }
  }
  for (std::size_t n = 1; n < 3; ++n) {
    const double ratio = buffers[n] / buffers[n - 1];
    c.expect(ratio >= 1.8 && ratio <= 2.2, "buffer ratio " + fmt(ratio));
  }
  // O(k): the whole quantum bill stays within k times its k = 1 value.
  for (std::size_t n = 1; n < totals.size(); ++n) {
    c.expect(totals[n] <= totals[0] * static_cast<double>(n + 1),
             "quantum cells " + fmt(totals[n]) + " exceed " + fmt(totals[0]) + " * k at k=" +
                 std::to_string(n + 1));
  }
  c.detail = detail.str().substr(2);
}

void qcore_properties(Check& c) {
  std::mt19937_64 rng(77);
  std::size_t checks = 0;
  double worst = 0.0;
  auto record = [&](double err, const std::string& what) {
    worst = std::max(worst, err);
    c.expect(err < kTolerance, what + " error " + fmt(err));
    ++checks;
  };
  const Bits none;
  for (int n = 0; n < 1000; ++n) {
    const int k = 1 + n % 3;
    const int width = search_register_qubits(k);
    auto reg = QuantumRegister::from_amplitudes(random_state(rng, width));
    const Amplitudes before(reg.amplitudes().begin(), reg.amplitudes().end());
    const int a = static_cast<int>(rng() % width);
    const int b = static_cast<int>((a + 1 + rng() % (width - 1)) % width);
    const Bits bits = random_bits(rng, block_length(k));
    std::string what;
    switch (n % 9) {
      case 0: reg.hadamard(a); reg.hadamard(a); what = "H^2"; break;
      case 1: for (int r = 0; r < 8; ++r) reg.t_gate(a); what = "T^8"; break;
      case 2: reg.cnot(a, b); reg.cnot(a, b); what = "CNOT^2"; break;
      case 3: negate_nonzero_index(reg, k); negate_nonzero_index(reg, k); what = "S^2"; break;
      case 4: hadamard_index(reg, k); hadamard_index(reg, k); what = "U^2"; break;
      case 5: xor_flag(reg, bits); xor_flag(reg, bits); what = "V^2"; break;
      case 6: phase_flag(reg, bits); phase_flag(reg, bits); what = "W^2"; break;
      case 7: xor_result(reg, bits); xor_result(reg, bits); what = "R^2"; break;
      default: {
        search_iteration(reg, k, bits, random_bits(rng, bits.size()), bits);
        reg.t_gate(a);
        reg.cnot(b, a);
        record(std::abs(reg.norm() - 1.0), "norm");
        continue;
      }
    }
    record(max_abs_diff(reg.amplitudes(), before), what);
  }
  double worst_tape = 0.0;
  std::uniform_int_distribution<int> space_dist(1, 4);
  for (int n = 0; n < 100; ++n) {
    const int space = space_dist(rng);
    const GateTape tape{ldisj::testing::random_tape(rng, space, rng() % (std::min(20, 1 << space) + 1)), space};
    const auto expected = ldisj::testing::DenseTapeOracle(space).run(tape.instructions);
    const double err = max_abs_diff(run_tape(tape).amplitudes(), expected);
    worst_tape = std::max(worst_tape, err);
    c.expect(err <= 1e-10, "tape " + format_tape(tape) + " error " + fmt(err));
  }
  c.detail = std::to_string(checks) + " algebra checks (max " + fmt(worst) +
             "), 100 tapes vs dense oracle (max " + fmt(worst_tape) + ")";
}

void all_ones_regression(Check& c) {
  const DisjInstance instance{1, parse_bits("1111"), parse_bits("1111")};
  const std::string word = instance.encode();
  for (int j = 0; j < 2; ++j) {
    TokenStream stream(word);
    const double p = a3_one_probability(stream, 1, j);
    c.expect(std::abs(p - 1.0) <= 1e-12, "j=" + std::to_string(j) + " P(b=1) " + fmt(p));
  }
  c.expect(std::abs(a3_exact_output_distribution(instance) - 1.0) <= 1e-12, "average P(b=1)");
  std::mt19937_64 rng(8);
  std::size_t zeros = 0;
  for (int n = 0; n < 1000; ++n) {
    TokenStream stream(word);
    zeros += a3_quantum_run(stream, 1, n % 2, rng) == 0;
  }
  c.expect(zeros == 1000, "sampled A3 output 0 in " + std::to_string(zeros) + "/1000 runs");
  const double acceptance = exact_verdict_distribution(instance, RecognizerKind::Quantum).acceptance;
  c.expect(acceptance == 0.0, "acceptance " + fmt(acceptance));
  c.detail = "A3 outputs 0 on every branch (1000/1000 sampled), recognizer rejects with probability 1";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "one-sided acceptance", 10, one_sided_acceptance);
  ok &= run_criterion(2, "rejection bound", 60, rejection_bound);
  ok &= run_criterion(3, "iteration-average closed form", 300, grover_closed_form);
  ok &= run_criterion(4, "fingerprint soundness", 1, fingerprint_soundness);
  ok &= run_criterion(5, "oracle equivalence", 120, oracle_equivalence);
  ok &= run_criterion(6, "space separation", 60, space_separation);
  ok &= run_criterion(7, "qcore property suite", 60, qcore_properties);
  ok &= run_criterion(8, "all-ones discrepancy regression", 10, all_ones_regression);
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria FAILED");
  return ok ? 0 : 1;
}
