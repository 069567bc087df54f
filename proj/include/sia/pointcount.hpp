#ifndef SIA_POINTCOUNT_HPP
#define SIA_POINTCOUNT_HPP

#include "sia/curve.hpp"

namespace sia {

struct CountOptions {
    int threads = 1;
    enum class Simd { Auto, Scalar, Avx2 } simd = Simd::Auto;
    uint64_t budget = 100000000;  // largest field size the naive count may enumerate
};

// number of points of the smooth projective model over F_{q^ext_degree}
BigInt count_points(const CurveModel& c, unsigned ext_degree = 1, const CountOptions& opt = {});

// kernel actually selected for a prime-field count under these options
const char* selected_kernel_name(const CountOptions& opt, uint64_t p);

namespace pc {

struct PrimeKernelArgs {
    uint32_t p = 0;
    const uint32_t* coeffs = nullptr;  // ascending, reduced mod p
    size_t ncoeffs = 0;
    const int8_t* chi = nullptr;  // quadratic character table, size p (+8 pad)
    uint64_t x0 = 0, x1 = 0;
    int64_t chi_sum = 0;  // output: sum of chi(g(x)) over the range
};

// reference kernel, any odd p < 2^31
void count_prime_scalar(PrimeKernelArgs& args);
// AVX2 lane, odd p < 2^26; bit-identical results to the scalar kernel
void count_prime_avx2(PrimeKernelArgs& args);
bool cpu_has_avx2();

}  // namespace pc

}  // namespace sia

#endif
