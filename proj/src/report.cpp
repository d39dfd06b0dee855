#include "tddf/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tddf {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::reproduced: return "reproduced";
    case Outcome::refuted: return "refuted-instance-found";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream os;
  os << "theorem_id: " << r.theorem_id << "\n";
  if (!r.lop.empty()) os << "L: " << r.lop << "\n";
  if (!r.tnorm.empty()) os << "T: " << r.tnorm << "\n";
  for (const auto& [k, v] : r.hypotheses) os << "hypothesis." << k << ": " << v << "\n";
  os << "predicate: " << (r.predicate ? (*r.predicate ? "holds" : "fails") : "not-applicable") << "\n";
  os << "samples: " << r.samples << "\n";
  os << "holds: " << r.holds << "\nfails: " << r.fails << "\nundecided: " << r.undecided << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    const auto& in = r.instances[i];
    os << "\ninstance: " << i + 1 << "\n";
    os << "label: " << in.label << "\n";
    if (in.jump) {
      os << "jump_location: " << format_number(in.jump->x_left);
      if (in.jump->x_right != in.jump->x_left) os << " " << format_number(in.jump->x_right);
      os << "\njump_size: " << format_number(in.jump->size) << "\n";
    }
    os << "envelope_width: " << format_number(in.envelope_width) << "\n";
    for (const auto& [k, v] : in.fields) os << k << ": " << v << "\n";
  }
  return os.str();
}

std::string to_text(const std::vector<TheoremReport>& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += "\n---\n\n";
    out += to_text(rs[i]);
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void attach_witness_files(TheoremReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    auto& in = r.instances[i];
    const std::string stem = r.theorem_id + "_" + std::to_string(i + 1);
    if (in.f) {
      const auto p = dir / (stem + "_f.ddf");
      write_atomically(p, to_text(*in.f));
      in.fields.emplace_back("witness_f", p.string());
    }
    if (in.g) {
      const auto p = dir / (stem + "_g.ddf");
      write_atomically(p, to_text(*in.g));
      in.fields.emplace_back("witness_g", p.string());
    }
    if (in.output) {
      const auto p = dir / (stem + "_out.curve");
      write_atomically(p, to_text(*in.output));
      in.fields.emplace_back("witness_curve", p.string());
    }
  }
}

}  // namespace tddf
