#include "sia/pointcount.hpp"

namespace sia::pc {

void count_prime_scalar(PrimeKernelArgs& args) {
    const uint64_t p = args.p;
    int64_t chi_sum = 0;
    for (uint64_t x = args.x0; x < args.x1; ++x) {
        uint64_t t = 0;
        for (size_t i = args.ncoeffs; i-- > 0;) t = (t * x + args.coeffs[i]) % p;
        chi_sum += args.chi[t];
    }
    args.chi_sum = chi_sum;
}

}  // namespace sia::pc
