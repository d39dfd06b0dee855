#pragma once

#include <optional>
#include <span>

#include "tddf/ops.hpp"

/// Masked max-reduction over a sample grid:
///   max { T(a_i, b_j) : L(r_i, s_j) < x }      (strict region)
///   max { T(a_i, b_j) : L(r_i, s_j) <= x }     (weak region)
/// with 0 for an empty region. Scalar reference plus an AVX2 variant picked
/// at runtime; both give bit-identical results.
namespace tddf::kernels {

enum class Region { strict, weak };
enum class KL { max, plus };
enum class KT { min, prod, luk };

struct Grid {
  std::span<const double> r, a;  // points and values of f
  std::span<const double> s, b;  // points and values of g
};

std::optional<KL> kernel_lop(const LOp& l);
std::optional<KT> kernel_tnorm(const TNorm& t);

double masked_max_scalar(KL l, KT t, const Grid& g, double x, Region region);
double masked_max_avx2(KL l, KT t, const Grid& g, double x, Region region);
/// Any (L, T) through the descriptors.
double masked_max_generic(const LOp& l, const TNorm& t, const Grid& g, double x, Region region);

bool avx2_available();
/// Uses the fastest applicable variant.
double masked_max(const LOp& l, const TNorm& t, const Grid& g, double x, Region region);

}  // namespace tddf::kernels
