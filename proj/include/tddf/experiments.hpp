#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tddf/ops.hpp"
#include "tddf/report.hpp"

namespace tddf {

/// Target sets of the closure experiments. `ideal` draws f from D+ (with at
/// least one jump) and g from D+_c and asks for an output in D+_c.
enum class ClassId { delta, dplus, dplus0, dplus_c, dplus_sc, ideal };

std::string_view to_string(ClassId c);
ClassId parse_class(std::string_view name);

/// Random piecewise-linear member with 2 to 8 breakpoints on a grid of
/// quarters and values on a grid of 1/64, so every test input is exact.
/// `ideal` gives the D+ side with a forced jump.
DDF random_member(ClassId c, std::mt19937_64& rng);

/// What the characterization theorems predict for these declared flags:
/// true for closed, false for not closed, empty when a flag is unknown or the
/// theorem's standing hypothesis (T or L continuous) does not hold.
std::optional<bool> closure_predicate(const LOp& l, const TNorm& t, ClassId c);

struct ExperimentOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-3;
  double threshold = 0.0;  // jump/continuity threshold; 0 means 10 * tolerance
  std::size_t falsify_budget = 100000;
  bool fallback = true;    // use the proof constructions when random search finds nothing

  double jump_threshold() const { return threshold > 0.0 ? threshold : 10.0 * tolerance; }
};

/// Draws class members, tensors them and classifies the outputs.
TheoremReport closure_experiment(const LOp& l, const TNorm& t, ClassId c, const ExperimentOptions& opt = {});

/// Theorem ids: thm38 prop43 prop44 thm42 lem45 thm46 thm47 cor48 thm49.
std::vector<std::string> theorem_ids();

/// One theorem for one (L, T).
TheoremReport reproduce(std::string_view id, const LOp& l, const TNorm& t, const ExperimentOptions& opt = {});

/// Each id against its default (L, T) pairs, which cover both directions of
/// the characterization; one merged report per id. Throws on an unknown id.
std::vector<TheoremReport> run_suite(const std::vector<std::string>& ids, const ExperimentOptions& opt = {});

}  // namespace tddf
