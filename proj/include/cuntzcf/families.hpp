#pragma once

#include <string>
#include <vector>

#include "cuntzcf/bigint.hpp"
#include "cuntzcf/surd.hpp"
#include "cuntzcf/sweeps.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

// Closed-form surds whose expansion is purely periodic with a short block.

/// (sqrt(k^2 + 4) - k) / 2 = [k, k, k, ...]
QuadraticSurd one_cycle_surd(Letter k);

/// (sqrt((jk)^2 + 4jk) - jk) / (2j) = [j, k, j, k, ...]
QuadraticSurd two_cycle_surd(Letter j, Letter k);

/// (-(ijk + i + k - j) + sqrt(D)) / (2(ij + 1)) with D = three_cycle_radicand.
QuadraticSurd three_cycle_surd(Letter i, Letter j, Letter k);
/// (ijk + i + j + k)^2 + 4
BigInt three_cycle_radicand(Letter i, Letter j, Letter k);

/// (-(ijkl + ij + kl + li - jk) + sqrt(D)) / (2(ijk + i + k)) with D = four_cycle_radicand.
QuadraticSurd four_cycle_surd(Letter i, Letter j, Letter k, Letter l);
/// T (T + 4) with T = ijkl + ij + jk + kl + li
BigInt four_cycle_radicand(Letter i, Letter j, Letter k, Letter l);

struct FamilyRow {
  std::string family;  // "one-cycle", "two-cycle", ...
  Word tuple;
  std::string surd;      // formula value, canonical text
  std::string expected;  // e.g. P(1,2)
  std::string got;
  bool oracle_agrees = true;  // formula surd == surd_from_cfe of the tuple block
  bool passed = false;
  std::string note;
};

struct ExampleReport {
  std::vector<FamilyRow> rows;
  /// Rows where a closed form or a quoted value disagrees with the
  /// expansion oracle; informational, not failures.
  std::vector<FamilyRow> discrepancies;
  BigInt radicand_123;          // D of the three-cycle family at (1,2,3)
  std::string solved_123;       // surd_from_cfe of block (1,2,3)
  BigInt poly_discriminant_123;
  BigInt field_discriminant_123;

  std::vector<FamilyRow> failures() const;
  bool ok() const { return failures().empty(); }
};

/// Sweeps one-cycle k = 1..50, two-cycle j, k <= 10, three- and four-cycle
/// nonperiodic tuples with entries <= 5 and checks each closed form against
/// classify_surd and against the expansion oracle.
ExampleReport verify_examples(Exec exec);

}  // namespace cuntzcf
