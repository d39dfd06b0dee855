#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tddf/bounded_curve.hpp"
#include "tddf/classify.hpp"
#include "tddf/ddf.hpp"

namespace tddf {

enum class Outcome { reproduced, refuted, inconclusive };
std::string_view to_string(Outcome o);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct ReportInstance {
  std::string label;
  std::optional<DDF> f, g;
  std::optional<BoundedCurve> output;
  std::optional<Discontinuity> jump;
  double envelope_width = 0.0;
  Fields fields;
};

struct TheoremReport {
  std::string theorem_id;
  std::string lop, tnorm;
  Fields hypotheses;              // declared flags the predicate used
  std::optional<bool> predicate;  // the theorem's condition on the declared flags; for closures, closed
  std::size_t samples = 0, holds = 0, fails = 0, undecided = 0;
  Outcome verdict = Outcome::inconclusive;
  std::vector<ReportInstance> instances;
  std::string note;
};

/// Key-value text, one block for the report and one per instance.
std::string to_text(const TheoremReport& r);
std::string to_text(const std::vector<TheoremReport>& rs);

/// Writes f, g (ddf v1) and the output (curve v1) of every instance under
/// `dir` and records the paths in the instance fields.
void attach_witness_files(TheoremReport& r, const std::filesystem::path& dir);

/// Writes through a temporary file and a rename, so readers never see a partial file.
void write_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace tddf
