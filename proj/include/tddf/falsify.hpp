#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tddf/ops.hpp"

namespace tddf {

enum class Condition { CL, LS, LCS, NZD, TS };

std::string_view to_string(Condition c);
Condition parse_condition(std::string_view name);

/// How (TS) is read. The joint reading mirrors (LS): x<x', y<y' => T(x,y) < T(x',y').
/// The literal reading is x<y, x'<y' => T(x,y) < T(x',y').
enum class TsReading { joint, literal };

/// A violating tuple, self-checking by re-evaluation.
///
/// points layout:
///   NZD  (x, y)            values (L(x,y))
///   CL   (x, y, z)         values (L(x,y), L(x,z))
///   LS   (x, x', y, y')    values (L(x,y), L(x',y'))
///   LCS  as LS
///   TS   joint: (x, x', y, y'), literal: (x, y, x', y')
struct ConditionWitness {
  Condition condition = Condition::NZD;
  std::vector<double> points;
  std::vector<double> values;
  /// Smallest separation of the inputs that should have forced distinct values.
  double margin = 0.0;
  /// |difference| of the compared values; 0 for exact coincidence.
  double value_gap = 0.0;
  /// Values compared exactly (closed form) rather than within kWitnessTolerance.
  bool exact = true;
  TsReading reading = TsReading::joint;
};

struct Verdict {
  enum class Outcome { witness_found, no_witness_found };
  Outcome outcome = Outcome::no_witness_found;
  std::optional<ConditionWitness> witness;
  std::size_t evaluations = 0;
  bool found() const { return outcome == Outcome::witness_found; }
};

/// Searches a structured grid (0, inf, dyadic points, ln 2 multiples, the
/// operation's breakpoints) followed by seeded random points; about `budget`
/// evaluations in total. Deterministic in (budget, seed). Finding nothing is
/// not a proof. Throws std::invalid_argument for TS on an L-operation or
/// CL/LS/LCS/NZD on a t-norm.
Verdict falsify(const LOp& l, Condition c, std::size_t budget = 100000, std::uint64_t seed = 1);
Verdict falsify(const TNorm& t, Condition c, std::size_t budget = 100000, std::uint64_t seed = 1,
                TsReading reading = TsReading::joint);

/// Re-evaluates the operation at the witness points.
bool verify(const LOp& l, const ConditionWitness& w);
bool verify(const TNorm& t, const ConditionWitness& w);

}  // namespace tddf
