#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rowinc/qpoly.hpp"
#include "rowinc/tableau.hpp"

namespace rowinc {

// ---- brute-force generating functions --------------------------------------

QPoly sum_q_maj_row_increasing(int n, int k);
QPoly sum_q_amaj_row_increasing(int n, int k);
QPoly sum_q_maj_increasing(int n, int k);
QPoly sum_q_maj_standard(const Partition& shape);
QPoly sum_q_word_maj(int n, int k);

// ---- reports ----------------------------------------------------------------

/// First failing case of a check, in replayable text form (tableaux in the
/// two-line text format, words as letter strings).
struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string check;
  std::string range;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  /// Individual assertions evaluated.
  std::int64_t cases = 0;
  double wall_ms = 0.0;
};

struct VerifyOptions {
  /// Exhaustive tableau and word enumeration up to this n.
  int tableau_n_max = 6;
  /// Polynomial identities (no tableau enumeration) up to this n; also the
  /// largest partition size for the hook-formula check.
  int formula_n_max = 8;
  /// Exhaustive checks over prime tableaux up to this n...
  int prime_n_max = 5;
  /// ...for each of these offsets.
  std::vector<int> prime_offsets{0, 1, 4};
};

/// Brute-force maj sums over row-increasing tableaux against the closed form,
/// and the standard-tableau special case at k = 0.
VerificationReport check_maj(const VerifyOptions& opts = {});
/// Same for amaj.
VerificationReport check_amaj(const VerifyOptions& opts = {});
/// Increasing tableaux against their closed form and the hook formula for
/// shape (n-k, n-k, 1^k); the hook formula against brute-force sums for
/// every partition up to formula_n_max.
VerificationReport check_increasing(const VerifyOptions& opts = {});
/// The recurrence for the row-increasing maj polynomial, the counting
/// identity r(n,k) = s(n,k) + s(n,k-1), closed forms at q = 1, the
/// maj/amaj shift, and enumeration sizes.
VerificationReport check_recurrences(const VerifyOptions& opts = {});
/// Exhaustive contracts of collapse/expand_equal_column, the prime
/// transform, and amaj_to_maj, plus the worked examples.
VerificationReport check_bijections(const VerifyOptions& opts = {});
/// Word/tableau correspondence, word maj sums, and the q-power relations
/// between the closed forms.
VerificationReport check_schroeder(const VerifyOptions& opts = {});

/// Check names accepted by run_checks, in run order:
/// maj, amaj, sq, recurrences, bijections, schroeder.
const std::vector<std::string>& check_names();

/// Runs one named check or "all". A failing check never stops the others.
/// InputError on an unknown name.
std::vector<VerificationReport> run_checks(std::string_view which, const VerifyOptions& opts);

bool all_passed(const std::vector<VerificationReport>& reports);

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool timing = true);
std::string reports_to_csv(const std::vector<VerificationReport>& reports, bool timing = true);
std::string reports_to_text(const std::vector<VerificationReport>& reports, bool timing = true);

}  // namespace rowinc
