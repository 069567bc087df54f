#include "sia/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace sia {

SturmChain::SturmChain(const QPoly& f) : f_(f.squarefree_part()) {
    chain_.push_back(f_);
    QPoly d = f_.derivative();
    if (!d.is_zero()) chain_.push_back(d);
    while (chain_.size() >= 2 && chain_.back().degree() > 0) {
        QPoly r = -QPoly::rem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(r.scaled(r.lc().abs().reciprocal()));  // scale to tame growth
    }
}

int SturmChain::sign_changes_at(const Rational& v) const {
    int changes = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.eval(v).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmChain::total_real_roots() const {
    Rational b = cauchy_root_bound(f_);
    return count_roots(-b, b);
}

Rational cauchy_root_bound(const QPoly& f) {
    if (f.degree() < 1) return Rational(1);
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rational a = (f.at(static_cast<size_t>(i)) / f.lc()).abs();
        if (a > m) m = a;
    }
    return m + Rational(1);
}

std::vector<QInterval> isolate_real_roots(const QPoly& f) {
    if (f.degree() < 1) return {};
    SturmChain chain(f);
    Rational b = cauchy_root_bound(chain.poly());
    std::vector<QInterval> out;
    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> stack;
    int total = chain.count_roots(-b, b);
    if (total > 0) stack.push_back({-b, b, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            // shrink a little for a tidy start, then emit
            out.push_back(QInterval(s.a, s.b));
            continue;
        }
        Rational mid = (s.a + s.b) * Rational(1, 2);
        if (chain.poly().eval(mid).is_zero()) {
            out.push_back(QInterval(mid, mid));
            // perturb the split point so the exact root lands in neither half
            Rational eps = (s.b - s.a) * Rational(1, 1024);
            Rational lo2 = mid - eps, hi2 = mid + eps;
            while (chain.count_roots(lo2, hi2) != 1) {
                eps = eps * Rational(1, 2);
                lo2 = mid - eps;
                hi2 = mid + eps;
            }
            int left = chain.count_roots(s.a, lo2);
            int right = chain.count_roots(hi2, s.b);
            if (left > 0) stack.push_back({s.a, lo2, left});
            if (right > 0) stack.push_back({hi2, s.b, right});
        } else {
            int left = chain.count_roots(s.a, mid);
            int right = s.count - left;
            if (left > 0) stack.push_back({s.a, mid, left});
            if (right > 0) stack.push_back({mid, s.b, right});
        }
    }
    std::sort(out.begin(), out.end(), [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });
    return out;
}

QInterval refine_root(const SturmChain& chain, QInterval iv, const Rational& eps) {
    if (iv.lo == iv.hi) return iv;
    while (iv.width() > eps) {
        Rational mid = iv.mid();
        Rational fm = chain.poly().eval(mid);
        if (fm.is_zero()) return QInterval(mid, mid);
        if (chain.count_roots(iv.lo, mid) == 1)
            iv = QInterval(iv.lo, mid);
        else
            iv = QInterval(mid, iv.hi);
    }
    return iv;
}

QInterval largest_real_root(const QPoly& f, const Rational& eps) {
    auto roots = isolate_real_roots(f);
    if (roots.empty()) throw std::domain_error("largest_real_root: no real roots");
    SturmChain chain(f);
    return refine_root(chain, roots.back(), eps);
}

std::vector<Rational> root_power_sums(const QPoly& f, size_t k) {
    int n = f.degree();
    if (n < 0 || !f.is_monic()) throw std::domain_error("root_power_sums: monic polynomial required");
    // e_i = (-1)^i a_{n-i}
    std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        e[static_cast<size_t>(i)] = f.at(static_cast<size_t>(n - i));
        if (i % 2) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
    }
    std::vector<Rational> p(k + 1, Rational(0));
    for (size_t m = 1; m <= k; ++m) {
        // p_m = (-1)^{m-1} m e_m + sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i}, e_i = 0 for i > n
        Rational acc(0);
        if (m <= static_cast<size_t>(n)) {
            acc = e[m] * Rational(static_cast<int64_t>(m));
            if ((m - 1) % 2) acc = -acc;
        }
        for (size_t i = 1; i < m && i <= static_cast<size_t>(n); ++i) {
            Rational term = e[i] * p[m - i];
            if ((i - 1) % 2) term = -term;
            acc += term;
        }
        p[m] = acc;
    }
    p.erase(p.begin());
    return p;
}

QPoly poly_from_power_sums(const std::vector<Rational>& p) {
    size_t n = p.size();
    // e_1 = p_1; m e_m = sum_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = Rational(1);
    for (size_t m = 1; m <= n; ++m) {
        Rational acc(0);
        for (size_t i = 1; i <= m; ++i) {
            Rational term = e[m - i] * p[i - 1];
            if ((i - 1) % 2) term = -term;
            acc += term;
        }
        e[m] = acc / Rational(static_cast<int64_t>(m));
    }
    std::vector<Rational> c(n + 1, Rational(0));
    for (size_t i = 0; i <= n; ++i) {
        c[n - i] = e[i];
        if (i % 2) c[n - i] = -c[n - i];
    }
    return QPoly(std::move(c));
}

QInterval eval_interval(const QPoly& f, const QInterval& iv) {
    QInterval r(Rational(0));
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = r * iv + f.at(i);
    }
    return r;
}

}  // namespace sia
