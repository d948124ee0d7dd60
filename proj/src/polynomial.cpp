#include "csalg/polynomial.hpp"

#include <algorithm>

namespace csalg {

int poly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_normalize(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_normalize(std::move(c));
}

QPoly poly_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return poly_normalize(std::move(d));
}

QPoly poly_rem(QPoly a, const QPoly& b) {
    a = poly_normalize(std::move(a));
    const int db = poly_degree(b);
    if (db < 0) throw InvalidArgumentError("polynomial division by zero");
    while (poly_degree(a) >= db) {
        const Rational f = a.back() / b.back();
        const int shift = poly_degree(a) - db;
        for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
        a = poly_normalize(std::move(a));
    }
    return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) {
        const Rational lead = a.back();
        for (Rational& c : a) c /= lead;
    }
    return a;
}

Rational poly_eval(const QPoly& p, const Rational& x) {
    Rational v;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

namespace {

// Integer divisors of |x| (positive only), or nullopt when x has a factor
// beyond the trial-division budget.
std::optional<std::vector<mpz_class>> divisors(mpz_class x, unsigned long trial_bound = 1000000) {
    x = abs(x);
    if (x == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class p = 2; p * p <= x;) {
        if (p > trial_bound) break;
        if (x % p == 0) {
            int e = 0;
            while (x % p == 0) { x /= p; ++e; }
            factors.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (x > 1) {
        if (x > trial_bound && !mpz_probab_prime_p(x.get_mpz_t(), 30)) return std::nullopt;
        factors.push_back({x, 1});
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Primitive integer coefficients of a rational polynomial (content removed,
// positive leading coefficient).
std::vector<mpz_class> primitive_integer(const QPoly& p) {
    mpz_class den = 1;
    for (const Rational& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> out(p.size());
    mpz_class content = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i].numerator() * (den / p[i].denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content != 0)
        for (auto& c : out) c /= content;
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

} // namespace

std::optional<Rational> find_rational_root(const QPoly& p_in) {
    const QPoly p = poly_normalize(p_in);
    if (poly_degree(p) < 1) return std::nullopt;
    if (p[0].is_zero()) return Rational(0);
    const auto ip = primitive_integer(p);
    const auto nums = divisors(ip.front());
    const auto dens = divisors(ip.back());
    if (!nums || !dens) return std::nullopt;
    for (const mpz_class& q : *dens)
        for (const mpz_class& n : *nums) {
            const Rational r(n, q);
            if (poly_eval(p, r).is_zero()) return r;
            if (poly_eval(p, -r).is_zero()) return -r;
        }
    return std::nullopt;
}

FactorClass classify_factorization(const QPoly& monic_in) {
    const QPoly f = poly_normalize(monic_in);
    const int deg = poly_degree(f);
    if (deg < 1) throw InvalidArgumentError("classify_factorization needs degree >= 1");
    if (deg == 1) return FactorClass::irreducible;

    if (poly_degree(poly_gcd(f, poly_derivative(f))) >= 1) return FactorClass::repeated;
    if (find_rational_root(f)) return FactorClass::splits;
    if (deg == 2 || deg == 3) return FactorClass::irreducible;  // squarefree, no rational root

    if (deg == 4) {
        // Monic integer quartic with no linear factor: the only remaining
        // factorization is into two monic integer quadratics
        // (x^2+ax+b)(x^2+cx+d); enumerate divisor pairs b*d = f0.
        const auto ip = primitive_integer(f);
        if (ip.back() != 1) return FactorClass::unknown;  // not monic over Z
        const mpz_class f0 = ip[0], f1 = ip[1], f2 = ip[2], f3 = ip[3];
        if (f0 == 0) return FactorClass::splits;  // handled above, defensive
        const auto bs = divisors(f0);
        if (!bs) return FactorClass::unknown;
        std::vector<mpz_class> signed_bs;
        for (const auto& b : *bs) { signed_bs.push_back(b); signed_bs.push_back(-b); }
        for (const mpz_class& b : signed_bs) {
            const mpz_class d = f0 / b;
            // a + c = f3, b + d + a c = f2, a d + b c = f1
            if (b == d) {
                // a d + b c = b (a + c) = b f3 must equal f1; then a c = f2 - 2b.
                if (b * f3 != f1) continue;
                const mpz_class s = f3, prod = f2 - 2 * b;
                // a, c are roots of t^2 - s t + prod
                mpz_class disc = s * s - 4 * prod;
                if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
                return FactorClass::splits;
            }
            // a (d - b) = f1 - f3 * b
            const mpz_class num = f1 - f3 * b;
            if (num % (d - b) != 0) continue;
            const mpz_class a = num / (d - b);
            const mpz_class c = f3 - a;
            if (b + d + a * c == f2 && a * d + b * c == f1) return FactorClass::splits;
        }
        return FactorClass::irreducible;
    }
    return FactorClass::unknown;
}

} // namespace csalg
