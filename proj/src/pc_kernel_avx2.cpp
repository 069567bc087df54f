#include "sia/pointcount.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SIA_X86 1
#else
#define SIA_X86 0
#endif

namespace sia::pc {

bool cpu_has_avx2() {
#if SIA_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

#if SIA_X86

// Horner evaluation in 4 double lanes. Products stay below 2^52 for p < 2^26,
// so every step is exact; the reduction rounds floor(t/p) and corrects by one
// step at most.
void count_prime_avx2(PrimeKernelArgs& args) {
    const uint64_t p64 = args.p;
    const double pd = static_cast<double>(p64);
    const __m256d vp = _mm256_set1_pd(pd);
    const __m256d vpinv = _mm256_set1_pd(1.0 / pd);
    const __m256d vzero = _mm256_setzero_pd();

    int64_t chi_sum = 0;
    uint64_t x = args.x0;
    alignas(32) double xbuf[4];
    alignas(16) int32_t idx[4];
    for (; x + 4 <= args.x1; x += 4) {
        for (int l = 0; l < 4; ++l) xbuf[l] = static_cast<double>(x + static_cast<uint64_t>(l));
        __m256d vx = _mm256_load_pd(xbuf);
        __m256d t = _mm256_set1_pd(static_cast<double>(args.coeffs[args.ncoeffs - 1]));
        for (size_t i = args.ncoeffs - 1; i-- > 0;) {
            t = _mm256_add_pd(_mm256_mul_pd(t, vx), _mm256_set1_pd(static_cast<double>(args.coeffs[i])));
            __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
            t = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
            // one-step correction for the rounded reciprocal
            __m256d too_low = _mm256_cmp_pd(t, vzero, _CMP_LT_OQ);
            t = _mm256_add_pd(t, _mm256_and_pd(too_low, vp));
            __m256d too_high = _mm256_cmp_pd(t, vp, _CMP_GE_OQ);
            t = _mm256_sub_pd(t, _mm256_and_pd(too_high, vp));
        }
        __m128i vi = _mm256_cvttpd_epi32(t);
        _mm_store_si128(reinterpret_cast<__m128i*>(idx), vi);
        chi_sum += args.chi[idx[0]];
        chi_sum += args.chi[idx[1]];
        chi_sum += args.chi[idx[2]];
        chi_sum += args.chi[idx[3]];
    }
    // tail
    for (; x < args.x1; ++x) {
        uint64_t t = 0;
        for (size_t i = args.ncoeffs; i-- > 0;) t = (t * x + args.coeffs[i]) % p64;
        chi_sum += args.chi[t];
    }
    args.chi_sum = chi_sum;
}

#else

void count_prime_avx2(PrimeKernelArgs& args) { count_prime_scalar(args); }

#endif

}  // namespace sia::pc
