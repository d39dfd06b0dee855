// Shared fixtures for the test binaries: random piecewise-linear d.d.f.s on a
// dyadic lattice, so every interpolation the library performs is exact.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "tddf/ddf.hpp"
#include "tddf/ops.hpp"

namespace tddf::testing {

struct RandomDDF {
  bool allow_jumps = true;
  bool allow_plateaus = true;
  bool allow_defect = true;
  bool allow_jump_at_zero = true;
};

// Knots at multiples of 1/4, levels at multiples of 1/64.
inline DDF random_ddf(std::mt19937_64& rng, RandomDDF opt = {}) {
  std::uniform_int_distribution<int> nknots(1, 6), gap(1, 8), coin(0, 9);
  std::vector<Vertex> v{{0.0, 0.0}};
  int level = 0;
  const int top = opt.allow_defect && coin(rng) < 3 ? 40 + coin(rng) * 2 : 64;
  auto bump = [&](int max_step) {
    std::uniform_int_distribution<int> d(0, max_step);
    return std::min(top, level + d(rng));
  };
  if (opt.allow_jumps && opt.allow_jump_at_zero && coin(rng) < 2) {
    level = bump(16);
    v.push_back({0.0, level / 64.0});
  }
  double x = 0.0;
  const int n = nknots(rng);
  for (int k = 0; k < n; ++k) {
    x += gap(rng) / 4.0;
    int next = bump(24);
    if (!opt.allow_plateaus && next == level) next = std::min(top, level + 1);
    if (k == n - 1 && top == 64) next = 64;
    v.push_back({x, next / 64.0});
    level = next;
    if (opt.allow_jumps && coin(rng) < 3 && level < top) {
      level = bump(12);
      v.push_back({x, level / 64.0});
    }
  }
  if (!opt.allow_plateaus && level < 64) {
    x += 1.0;
    level = 64;
    v.push_back({x, 1.0});
  }
  v.push_back({kInf, level / 64.0});
  v.push_back({kInf, 1.0});
  return DDF::from_vertices(std::move(v));
}

inline std::vector<LOp> all_lops() {
  std::vector<LOp> out;
  for (const auto& n : builtin_lop_names()) out.push_back(builtin_lop(n));
  return out;
}

inline std::vector<TNorm> all_tnorms() {
  std::vector<TNorm> out;
  for (const auto& n : builtin_tnorm_names()) out.push_back(builtin_tnorm(n));
  return out;
}

}  // namespace tddf::testing
