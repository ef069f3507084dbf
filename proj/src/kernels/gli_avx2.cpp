#include <immintrin.h>

#include <cmath>

#include "dgli/kernels.hpp"
#include "gli_core.hpp"

// Four pairs per iteration.  Mirrors the scalar core operation for operation
// (no FMA, same association) so results stay bit-identical with the scalar
// backend.  asin has no vector form here and is applied lane by lane.

namespace dgli::kernels {

namespace {

struct Pack3 {
    __m256d x, y, z;
};

inline Pack3 sub(Pack3 a, Pack3 b) {
    return {_mm256_sub_pd(a.x, b.x), _mm256_sub_pd(a.y, b.y),
            _mm256_sub_pd(a.z, b.z)};
}

inline __m256d dot(Pack3 a, Pack3 b) {
    return _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(a.x, b.x), _mm256_mul_pd(a.y, b.y)),
        _mm256_mul_pd(a.z, b.z));
}

inline Pack3 cross(Pack3 a, Pack3 b) {
    return {_mm256_sub_pd(_mm256_mul_pd(a.y, b.z), _mm256_mul_pd(a.z, b.y)),
            _mm256_sub_pd(_mm256_mul_pd(a.z, b.x), _mm256_mul_pd(a.x, b.z)),
            _mm256_sub_pd(_mm256_mul_pd(a.x, b.y), _mm256_mul_pd(a.y, b.x))};
}

inline __m256d asin_lanes(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    lanes[0] = std::asin(lanes[0]);
    lanes[1] = std::asin(lanes[1]);
    lanes[2] = std::asin(lanes[2]);
    lanes[3] = std::asin(lanes[3]);
    return _mm256_load_pd(lanes);
}

inline __m256d asin_term(Pack3 u, Pack3 v) {
    const __m256d eps2 = _mm256_set1_pd(detail::kDegenerateNorm2);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d half_pi = _mm256_set1_pd(detail::kPi / 2);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);

    const __m256d lu2 = dot(u, u);
    const __m256d lv2 = dot(v, v);
    const __m256d degenerate =
        _mm256_or_pd(_mm256_cmp_pd(lu2, eps2, _CMP_LT_OQ),
                     _mm256_cmp_pd(lv2, eps2, _CMP_LT_OQ));

    const __m256d np = _mm256_mul_pd(_mm256_sqrt_pd(lu2), _mm256_sqrt_pd(lv2));
    const __m256d d = dot(u, v);
    const Pack3 c = cross(u, v);
    const __m256d c2 = dot(c, c);
    const __m256d abs_d = _mm256_andnot_pd(sign_mask, d);
    const __m256d q =
        _mm256_div_pd(c2, _mm256_mul_pd(np, _mm256_add_pd(np, abs_d)));
    __m256d h = _mm256_sqrt_pd(_mm256_mul_pd(half, q));
    h = _mm256_min_pd(h, one);
    const __m256d t =
        _mm256_sub_pd(half_pi, _mm256_mul_pd(two, asin_lanes(h)));
    const __m256d signed_t = _mm256_blendv_pd(
        _mm256_xor_pd(t, sign_mask), t, _mm256_cmp_pd(d, zero, _CMP_GE_OQ));
    return _mm256_andnot_pd(degenerate, signed_t);
}

}  // namespace

void gli_batch_avx2(const PairBatch& b, double* out) {
    const std::size_t n = b.size();
    const std::size_t main = n - n % 4;
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d inv_four_pi = _mm256_set1_pd(detail::kInvFourPi);

    for (std::size_t i = 0; i < main; i += 4) {
        const Pack3 pa{_mm256_loadu_pd(&b.ax[i]), _mm256_loadu_pd(&b.ay[i]),
                       _mm256_loadu_pd(&b.az[i])};
        const Pack3 pb{_mm256_loadu_pd(&b.bx[i]), _mm256_loadu_pd(&b.by[i]),
                       _mm256_loadu_pd(&b.bz[i])};
        const Pack3 pc{_mm256_loadu_pd(&b.cx[i]), _mm256_loadu_pd(&b.cy[i]),
                       _mm256_loadu_pd(&b.cz[i])};
        const Pack3 pd{_mm256_loadu_pd(&b.dx[i]), _mm256_loadu_pd(&b.dy[i]),
                       _mm256_loadu_pd(&b.dz[i])};

        const Pack3 ab = sub(pb, pa);
        const Pack3 ac = sub(pc, pa);
        const Pack3 ad = sub(pd, pa);
        const Pack3 bc = sub(pc, pb);
        const Pack3 bd = sub(pd, pb);

        const Pack3 na = cross(ac, ad);
        const Pack3 nd = cross(ad, bd);
        const Pack3 nb = cross(bd, bc);
        const Pack3 nc = cross(bc, ac);

        const __m256d volume = dot(ab, na);
        const __m256d sign = _mm256_sub_pd(
            _mm256_and_pd(_mm256_cmp_pd(volume, zero, _CMP_GT_OQ), one),
            _mm256_and_pd(_mm256_cmp_pd(volume, zero, _CMP_LT_OQ), one));

        const __m256d sum = _mm256_add_pd(
            _mm256_add_pd(
                _mm256_add_pd(asin_term(na, nd), asin_term(nd, nb)),
                asin_term(nb, nc)),
            asin_term(nc, na));
        _mm256_storeu_pd(&out[i],
                         _mm256_mul_pd(_mm256_mul_pd(sign, sum), inv_four_pi));
    }
    for (std::size_t i = main; i < n; ++i) {
        out[i] = detail::gli_pair(b.ax[i], b.ay[i], b.az[i], b.bx[i], b.by[i],
                                  b.bz[i], b.cx[i], b.cy[i], b.cz[i], b.dx[i],
                                  b.dy[i], b.dz[i]);
    }
}

}  // namespace dgli::kernels
