#include <algorithm>

#include "tddf/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define TDDF_HAVE_X86 1
#endif

namespace tddf::kernels {

#ifdef TDDF_HAVE_X86

bool avx2_available() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

namespace {

template <KL L, KT T, Region R>
__attribute__((target("avx2"))) double reduce_avx2(const Grid& g, double x) {
  const std::size_t m = g.s.size();
  const std::size_t m4 = m - m % 4;
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256d best = zero;
  double tail = 0.0;
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    const __m256d ri = _mm256_set1_pd(g.r[i]);
    const __m256d ai = _mm256_set1_pd(g.a[i]);
    for (std::size_t j = 0; j < m4; j += 4) {
      const __m256d sj = _mm256_loadu_pd(g.s.data() + j);
      const __m256d bj = _mm256_loadu_pd(g.b.data() + j);
      const __m256d l = L == KL::max ? _mm256_max_pd(ri, sj) : _mm256_add_pd(ri, sj);
      const __m256d mask = R == Region::strict ? _mm256_cmp_pd(l, vx, _CMP_LT_OQ) : _mm256_cmp_pd(l, vx, _CMP_LE_OQ);
      __m256d t;
      if constexpr (T == KT::min) t = _mm256_min_pd(ai, bj);
      else if constexpr (T == KT::prod) t = _mm256_mul_pd(ai, bj);
      else t = _mm256_max_pd(_mm256_sub_pd(_mm256_add_pd(ai, bj), one), zero);
      best = _mm256_max_pd(best, _mm256_and_pd(mask, t));
    }
    const double ris = g.r[i], ais = g.a[i];
    for (std::size_t j = m4; j < m; ++j) {
      const double l = L == KL::max ? std::max(ris, g.s[j]) : ris + g.s[j];
      if (!(R == Region::strict ? l < x : l <= x)) continue;
      double t;
      if constexpr (T == KT::min) t = std::min(ais, g.b[j]);
      else if constexpr (T == KT::prod) t = ais * g.b[j];
      else t = std::max(ais + g.b[j] - 1.0, 0.0);
      tail = std::max(tail, t);
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  return std::max({tail, lanes[0], lanes[1], lanes[2], lanes[3]});
}

template <KL L, KT T>
double by_region(const Grid& g, double x, Region region) {
  return region == Region::strict ? reduce_avx2<L, T, Region::strict>(g, x) : reduce_avx2<L, T, Region::weak>(g, x);
}

template <KL L>
double by_t(KT t, const Grid& g, double x, Region region) {
  switch (t) {
    case KT::min: return by_region<L, KT::min>(g, x, region);
    case KT::prod: return by_region<L, KT::prod>(g, x, region);
    case KT::luk: return by_region<L, KT::luk>(g, x, region);
  }
  return 0.0;
}

}  // namespace

double masked_max_avx2(KL l, KT t, const Grid& g, double x, Region region) {
  if (!avx2_available()) return masked_max_scalar(l, t, g, x, region);
  return l == KL::max ? by_t<KL::max>(t, g, x, region) : by_t<KL::plus>(t, g, x, region);
}

#else

// TODO(neon): add a NEON variant; until then non-x86 builds use the scalar path.
bool avx2_available() { return false; }

double masked_max_avx2(KL l, KT t, const Grid& g, double x, Region region) {
  return masked_max_scalar(l, t, g, x, region);
}

#endif

}  // namespace tddf::kernels
