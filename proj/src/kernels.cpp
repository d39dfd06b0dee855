#include "tddf/kernels.hpp"

#include <algorithm>

namespace tddf::kernels {

std::optional<KL> kernel_lop(const LOp& l) {
  if (l.kind() == LOpKind::max) return KL::max;
  if (l.kind() == LOpKind::plus) return KL::plus;
  return std::nullopt;
}

std::optional<KT> kernel_tnorm(const TNorm& t) {
  if (t.kind() == TNormKind::godel) return KT::min;
  if (t.kind() == TNormKind::product) return KT::prod;
  if (t.kind() == TNormKind::lukasiewicz) return KT::luk;
  return std::nullopt;
}

namespace {

template <KL L, KT T, Region R>
double reduce(const Grid& g, double x) {
  double best = 0.0;
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    const double ri = g.r[i], ai = g.a[i];
    for (std::size_t j = 0; j < g.s.size(); ++j) {
      const double l = L == KL::max ? std::max(ri, g.s[j]) : ri + g.s[j];
      const bool in = R == Region::strict ? l < x : l <= x;
      if (!in) continue;
      double t;
      if constexpr (T == KT::min) t = std::min(ai, g.b[j]);
      else if constexpr (T == KT::prod) t = ai * g.b[j];
      else t = std::max(ai + g.b[j] - 1.0, 0.0);
      best = std::max(best, t);
    }
  }
  return best;
}

template <KL L, KT T>
double reduce_region(const Grid& g, double x, Region region) {
  return region == Region::strict ? reduce<L, T, Region::strict>(g, x) : reduce<L, T, Region::weak>(g, x);
}

template <KL L>
double reduce_t(KT t, const Grid& g, double x, Region region) {
  switch (t) {
    case KT::min: return reduce_region<L, KT::min>(g, x, region);
    case KT::prod: return reduce_region<L, KT::prod>(g, x, region);
    case KT::luk: return reduce_region<L, KT::luk>(g, x, region);
  }
  return 0.0;
}

}  // namespace

double masked_max_scalar(KL l, KT t, const Grid& g, double x, Region region) {
  return l == KL::max ? reduce_t<KL::max>(t, g, x, region) : reduce_t<KL::plus>(t, g, x, region);
}

double masked_max_generic(const LOp& l, const TNorm& t, const Grid& g, double x, Region region) {
  double best = 0.0;
  for (std::size_t i = 0; i < g.r.size(); ++i)
    for (std::size_t j = 0; j < g.s.size(); ++j) {
      const double v = l(g.r[i], g.s[j]);
      if (region == Region::strict ? v < x : v <= x) best = std::max(best, t(g.a[i], g.b[j]));
    }
  return best;
}

double masked_max(const LOp& l, const TNorm& t, const Grid& g, double x, Region region) {
  const auto kl = kernel_lop(l);
  const auto kt = kernel_tnorm(t);
  if (!kl || !kt) return masked_max_generic(l, t, g, x, region);
  if (avx2_available()) return masked_max_avx2(*kl, *kt, g, x, region);
  return masked_max_scalar(*kl, *kt, g, x, region);
}

}  // namespace tddf::kernels
