#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tddf/ddf.hpp"
#include "tddf/error.hpp"

namespace tddf {

std::string format_number(double v) {
  if (v == kInf) return "inf";
  // Shortest text that reads back to the same double.
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view token) {
  if (token == "inf") return kInf;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v))
    throw std::invalid_argument("not a number: '" + std::string(token) + "'");
  return v;
}

std::string to_text(const DDF& f) {
  std::ostringstream out;
  out << "ddf v1\n";
  for (const Piece& p : f.pieces())
    out << "piece " << format_number(p.x_lo) << ' ' << format_number(p.x_hi) << ' ' << format_number(p.a) << ' '
        << format_number(p.b) << '\n';
  return out.str();
}

DDF ddf_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<Piece> pieces;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (!header) {
      std::string version;
      if (word != "ddf" || !(ls >> version) || version != "v1") throw ParseError(lineno, "expected header 'ddf v1'");
      header = true;
      continue;
    }
    if (word != "piece") throw ParseError(lineno, "expected 'piece', got '" + word + "'");
    std::string tok[4];
    for (auto& t : tok)
      if (!(ls >> t)) throw ParseError(lineno, "piece needs 4 fields: x_lo x_hi a b");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing field '" + extra + "'");
    try {
      pieces.push_back({parse_number(tok[0]), parse_number(tok[1]), parse_number(tok[2]), parse_number(tok[3])});
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    const Piece& p = pieces.back();
    const double expect = pieces.size() == 1 ? 0.0 : pieces[pieces.size() - 2].x_hi;
    if (p.x_lo != expect) throw ParseError(lineno, "piece does not start where the previous one ended");
    if (!(p.x_hi > p.x_lo)) throw ParseError(lineno, "piece has an empty interval");
    if (!(p.a >= 0.0 && p.a <= 1.0)) throw ParseError(lineno, "piece value outside [0,1]");
    if (!(p.b >= 0.0)) throw ParseError(lineno, "piece slope is negative");
    if (std::isinf(p.x_hi) && p.b != 0.0) throw ParseError(lineno, "piece reaching inf must have slope 0");
    const double end = std::isinf(p.x_hi) ? p.a : p.a + p.b * (p.x_hi - p.x_lo);
    if (end > 1.0) throw ParseError(lineno, "piece exceeds 1");
    if (pieces.size() > 1) {
      const Piece& q = pieces[pieces.size() - 2];
      if (p.a < q.a + q.b * (q.x_hi - q.x_lo)) throw ParseError(lineno, "function decreases at piece start");
    }
  }
  if (!header) throw ParseError(lineno + 1, "missing header 'ddf v1'");
  try {
    return DDF::from_pieces(pieces);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

DDF read_ddf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ddf_from_text(ss.str());
}

}  // namespace tddf
