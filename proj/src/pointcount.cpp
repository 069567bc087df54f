#include "sia/pointcount.hpp"

#include "sia/errors.hpp"

#include <algorithm>
#include <cstring>
#include <thread>

namespace sia {

namespace {

using pc::PrimeKernelArgs;

bool use_avx2(const CountOptions& opt, uint64_t p) {
    if (opt.simd == CountOptions::Simd::Scalar) return false;
    bool able = pc::cpu_has_avx2() && p < (1ull << 26) && (p & 1);
    if (opt.simd == CountOptions::Simd::Avx2 && !able)
        throw std::domain_error("avx2 kernel requested but unavailable for this field");
    return able;
}

// chi table over the prime field: chi[t] in {-1, 0, +1}
std::vector<int8_t> prime_chi_table(uint64_t p) {
    std::vector<int8_t> chi(p + 8, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y <= p / 2; ++y) chi[(y * y) % p] = 1;
    for (size_t i = p; i < chi.size(); ++i) chi[i] = 0;  // gather padding
    return chi;
}

int64_t run_prime_kernels(const CountOptions& opt, uint64_t p, const std::vector<uint32_t>& coeffs,
                          const std::vector<int8_t>& chi) {
    bool avx2 = use_avx2(opt, p);
    int threads = std::max(1, opt.threads);
    auto run_range = [&](uint64_t x0, uint64_t x1, int64_t* out) {
        PrimeKernelArgs args;
        args.p = static_cast<uint32_t>(p);
        args.coeffs = coeffs.data();
        args.ncoeffs = coeffs.size();
        args.chi = chi.data();
        args.x0 = x0;
        args.x1 = x1;
        if (avx2)
            pc::count_prime_avx2(args);
        else
            pc::count_prime_scalar(args);
        *out = args.chi_sum;
    };
    if (threads == 1) {
        int64_t out = 0;
        run_range(0, p, &out);
        return out;
    }
    std::vector<int64_t> partial(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        uint64_t x0 = p * static_cast<uint64_t>(t) / static_cast<uint64_t>(threads);
        uint64_t x1 = p * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(threads);
        pool.emplace_back(run_range, x0, x1, &partial[static_cast<size_t>(t)]);
    }
    for (auto& th : pool) th.join();
    int64_t sum = 0;
    for (int64_t v : partial) sum += v;
    return sum;
}

// extension-field scalar counting: sum of chi(g(x)) via a squares table
int64_t ext_chi_sum(const FiniteField& E, const std::vector<FF>& g, const std::vector<int8_t>& chi,
                    int threads) {
    const unsigned a = E.a();
    const uint64_t p = E.p();
    const uint64_t Q = E.q();
    const std::vector<uint64_t>& mod = E.modulus();
    size_t deg = g.size();

    std::vector<uint64_t> negmod(a);
    for (unsigned j = 0; j < a; ++j) negmod[j] = (p - mod[j] % p) % p;
    auto worker = [&](uint64_t i0, uint64_t i1, int64_t* out) {
        std::vector<uint64_t> x = E.from_index(i0);
        std::vector<uint64_t> acc(a), tmp(2 * a - 1);
        int64_t sum = 0;
        for (uint64_t i = i0; i < i1; ++i) {
            // Horner: acc = g(x)
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t ci = deg; ci-- > 0;) {
                // acc = acc * x + g[ci]
                std::fill(tmp.begin(), tmp.end(), 0);
                for (unsigned ii = 0; ii < a; ++ii) {
                    uint64_t av = acc[ii];
                    if (!av) continue;
                    for (unsigned jj = 0; jj < a; ++jj) tmp[ii + jj] += av * x[jj];
                }
                for (size_t d = 2 * a - 2; d + 1 > a; --d) {
                    uint64_t c = tmp[d] % p;
                    tmp[d] = 0;
                    if (!c) continue;
                    for (unsigned jj = 0; jj < a; ++jj) tmp[d - a + jj] += negmod[jj] * c;
                }
                for (unsigned ii = 0; ii < a; ++ii) acc[ii] = (tmp[ii] + g[ci][ii]) % p;
            }
            uint64_t idx = 0;
            for (unsigned ii = a; ii-- > 0;) idx = idx * p + acc[ii];
            sum += chi[idx];
            E.next(x);
        }
        *out = sum;
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        int64_t out = 0;
        worker(0, Q, &out);
        return out;
    }
    std::vector<int64_t> partial(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        uint64_t i0 = Q / static_cast<uint64_t>(threads) * static_cast<uint64_t>(t);
        uint64_t i1 = t + 1 == threads ? Q : Q / static_cast<uint64_t>(threads) * static_cast<uint64_t>(t + 1);
        pool.emplace_back(worker, i0, i1, &partial[static_cast<size_t>(t)]);
    }
    for (auto& th : pool) th.join();
    int64_t sum = 0;
    for (int64_t v : partial) sum += v;
    return sum;
}

std::vector<int8_t> ext_chi_table(const FiniteField& E) {
    std::vector<int8_t> chi(E.q(), -1);
    chi[0] = 0;
    const unsigned a = E.a();
    const uint64_t p = E.p();
    std::vector<uint64_t> negmod(a);
    for (unsigned j = 0; j < a; ++j) negmod[j] = (p - E.modulus()[j] % p) % p;
    std::vector<uint64_t> y(a, 0), tmp(2 * a - 1);
    while (true) {
        // odometer step first: squares of y and -y coincide, 0 already set
        unsigned i = 0;
        while (i < a && ++y[i] == p) {
            y[i] = 0;
            ++i;
        }
        if (i == a) break;
        std::fill(tmp.begin(), tmp.end(), 0);
        for (unsigned ii = 0; ii < a; ++ii) {
            if (!y[ii]) continue;
            for (unsigned jj = 0; jj < a; ++jj) tmp[ii + jj] += y[ii] * y[jj];
        }
        for (size_t d = 2 * a - 2; d + 1 > a; --d) {
            uint64_t c = tmp[d] % p;
            tmp[d] = 0;
            if (!c) continue;
            for (unsigned jj = 0; jj < a; ++jj) tmp[d - a + jj] += negmod[jj] * c;
        }
        uint64_t idx = 0;
        for (unsigned ii = a; ii-- > 0;) idx = idx * p + tmp[ii] % p;
        chi[idx] = 1;
    }
    return chi;
}

}  // namespace

const char* selected_kernel_name(const CountOptions& opt, uint64_t p) {
    return use_avx2(opt, p) ? "avx2" : "scalar";
}

BigInt count_points(const CurveModel& c, unsigned ext_degree, const CountOptions& opt) {
    if (ext_degree < 1) throw std::domain_error("count_points: ext_degree >= 1 required");
    const FiniteField& base = c.field;
    {
        BigInt Q = BigInt::pow(BigInt(static_cast<int64_t>(base.q())), ext_degree);
        if (Q > BigInt(static_cast<int64_t>(opt.budget)))
            throw BudgetExceededError("count_points: field size " + Q.to_string() +
                                      " exceeds budget " + std::to_string(opt.budget));
    }
    FiniteField E = ext_degree == 1 ? base : FiniteField::make(base.p(), base.a() * ext_degree);

    // transport coefficients into E
    std::vector<FF> h, f;
    if (ext_degree == 1) {
        h = c.h;
        f = c.f;
    } else if (base.a() == 1) {
        for (const auto& v : c.h) h.push_back(E.from_int(v[0]));
        for (const auto& v : c.f) f.push_back(E.from_int(v[0]));
    } else {
        FF gen_img = E.embed_subfield_gen(base);
        for (const auto& v : c.h) h.push_back(E.embed(base, v, gen_img));
        for (const auto& v : c.f) f.push_back(E.embed(base, v, gen_img));
    }

    const int g = c.genus;
    BigInt total(0);

    if (E.p() == 2) {
        // y^2 + h y = f: per x, one solution when h(x) = 0, else 2*[Tr(f/h^2) = 0]
        auto eval = [&](const std::vector<FF>& poly, const FF& x) {
            FF acc = E.zero();
            for (size_t i = poly.size(); i-- > 0;) {
                acc = E.mul(acc, x);
                acc = E.add(acc, poly[i]);
            }
            return acc;
        };
        uint64_t affine = 0;
        FF x = E.zero();
        do {
            FF hv = eval(h, x);
            if (E.is_zero(hv)) {
                affine += 1;
            } else {
                FF w = E.mul(eval(f, x), E.pow(E.inv(hv), 2));
                if (E.trace_to_prime(w) == 0) affine += 2;
            }
        } while (E.next(x));
        total = BigInt(static_cast<int64_t>(affine));
        // points at infinity: u^2 + H u = F with H = h_{g+1}, F = f_{2g+2}
        FF H = static_cast<size_t>(g + 1) < h.size() ? h[static_cast<size_t>(g + 1)] : E.zero();
        FF Finf = static_cast<size_t>(2 * g + 2) < f.size() ? f[static_cast<size_t>(2 * g + 2)] : E.zero();
        if (E.is_zero(H)) {
            total += BigInt(1);
        } else {
            FF w = E.mul(Finf, E.pow(E.inv(H), 2));
            if (E.trace_to_prime(w) == 0) total += BigInt(2);
        }
        return total;
    }

    // odd characteristic: complete the square, g_eff = f + h^2/4
    std::vector<FF> geff = f;
    if (!h.empty()) {
        FF quarter = E.inv(E.from_int(4));
        std::vector<FF> h2(2 * h.size() - 1, E.zero());
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = 0; j < h.size(); ++j) h2[i + j] = E.add(h2[i + j], E.mul(h[i], h[j]));
        if (h2.size() > geff.size()) geff.resize(h2.size(), E.zero());
        for (size_t i = 0; i < h2.size(); ++i) geff[i] = E.add(geff[i], E.mul(h2[i], quarter));
    }
    geff.resize(static_cast<size_t>(2 * g + 3), E.zero());

    // the top padding coefficient is zero; keep the Horner loop tight
    std::vector<FF> gtrim = geff;
    while (gtrim.size() > 1 && E.is_zero(gtrim.back())) gtrim.pop_back();

    int64_t chi_sum = 0;
    if (E.a() == 1) {
        std::vector<uint32_t> coeffs;
        for (const auto& v : gtrim) coeffs.push_back(static_cast<uint32_t>(v[0]));
        auto chi = prime_chi_table(E.p());
        chi_sum = run_prime_kernels(opt, E.p(), coeffs, chi);
    } else {
        auto chi = ext_chi_table(E);
        chi_sum = ext_chi_sum(E, gtrim, chi, opt.threads);
    }
    // affine points: sum over x of (1 + chi(g_eff(x)))
    total = BigInt(static_cast<int64_t>(E.q())) + BigInt(chi_sum);

    // infinity: 1 + chi(coefficient of x^{2g+2})
    FF W = geff[static_cast<size_t>(2 * g + 2)];
    total += BigInt(1 + E.chi(W));
    return total;
}

}  // namespace sia
