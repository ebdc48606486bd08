#pragma once

#include "equimetric/rat.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace equimetric {

/// Polynomial over Q of degree at most 4, coefficients stored ascending.
class QPoly {
public:
    QPoly() = default;  // zero polynomial

    explicit QPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
        if (c_.size() > 5)
            throw std::invalid_argument("QPoly: degree > 4");
    }

    /// Convenience: coefficients given leading-first.
    static QPoly from_descending(std::vector<Rat> descending) {
        std::reverse(descending.begin(), descending.end());
        return QPoly(std::move(descending));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    /// Horner evaluation, exact.
    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

private:
    std::vector<Rat> c_;
};

namespace detail {

/// Pollard rho for odd composite n; deterministic polynomial walk.
inline mpz_class pollard_rho(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n)
            return d;
    }
}

inline void push_prime(const mpz_class& p, std::vector<std::pair<mpz_class, unsigned>>& out) {
    for (auto& [q, e] : out)
        if (q == p) { ++e; return; }
    out.emplace_back(p, 1);
}

inline void factor_into(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n <= 1)
        return;
    for (unsigned long d = 2; d <= 100000ul; d = (d == 2 ? 3 : d + 2)) {
        if (mpz_class(d) * d > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            push_prime(mpz_class(d), out);
            n /= d;
        }
    }
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        push_prime(n, out);
        return;
    }
    mpz_class f = pollard_rho(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

/// All positive divisors of |n|, unsorted. n must be non-zero.
inline std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<std::pair<mpz_class, unsigned>> fac;
    factor_into(abs(n), fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

}  // namespace detail

/// All rational roots of a2 x^2 + a1 x + a0 = 0, sorted ascending, each
/// verified by exact back-substitution. Empty when the discriminant is not a
/// rational square. Degenerate cases: all coefficients zero is an error
/// (every x solves it); a2 = a1 = 0 with a0 != 0 has no solution.
inline std::vector<Rat> solve_quadratic(const Rat& a2, const Rat& a1, const Rat& a0) {
    if (a2.is_zero() && a1.is_zero()) {
        if (a0.is_zero())
            throw std::domain_error("solve_quadratic: identically zero polynomial");
        return {};
    }
    std::vector<Rat> roots;
    if (a2.is_zero()) {
        roots.push_back(-a0 / a1);
    } else {
        Rat disc = sq(a1) - Rat(4) * a2 * a0;
        if (disc.sign() < 0)
            return {};
        auto root = rat_sqrt(disc);
        if (!root)
            return {};
        roots.push_back((-a1 + *root) / (Rat(2) * a2));
        if (!root->is_zero())
            roots.push_back((-a1 - *root) / (Rat(2) * a2));
    }
    std::sort(roots.begin(), roots.end());
    for (const Rat& x : roots)
        if (!((a2 * x + a1) * x + a0).is_zero())
            throw std::logic_error("solve_quadratic: back-substitution failed");
    return roots;
}

/// All rational roots of a3 x^3 + a2 x^2 + a1 x + a0 = 0 (a3 != 0), found by
/// clearing denominators and testing p/q candidates with p dividing the
/// constant term and q the leading one. Each root is verified by exact
/// back-substitution. No Cardano: only rational roots are wanted.
inline std::vector<Rat> rational_roots_cubic(const Rat& a3, const Rat& a2,
                                             const Rat& a1, const Rat& a0) {
    if (a3.is_zero())
        throw std::invalid_argument("rational_roots_cubic: leading coefficient is zero");

    mpz_class L = a3.den();
    for (const Rat* c : {&a2, &a1, &a0})
        L = lcm(L, c->den());
    mpz_class c3 = a3.num() * (L / a3.den());
    mpz_class c2 = a2.num() * (L / a2.den());
    mpz_class c1 = a1.num() * (L / a1.den());
    mpz_class c0 = a0.num() * (L / a0.den());
    mpz_class g = gcd(gcd(c3, c2), gcd(c1, c0));
    c3 /= g; c2 /= g; c1 /= g; c0 /= g;

    std::vector<Rat> roots;
    if (c0 == 0) {
        roots.push_back(Rat(0));
        for (const Rat& x : solve_quadratic(Rat(c3), Rat(c2), Rat(c1)))
            if (!x.is_zero())
                roots.push_back(x);
    } else {
        for (const mpz_class& p : detail::divisors(c0)) {
            for (const mpz_class& q : detail::divisors(c3)) {
                if (gcd(p, q) != 1)
                    continue;
                for (int s : {1, -1}) {
                    mpz_class sp = s * p;
                    // homogeneous evaluation avoids rational temporaries
                    mpz_class v = ((c3 * sp + c2 * q) * sp + c1 * q * q) * sp + c0 * q * q * q;
                    if (v == 0)
                        roots.emplace_back(sp, q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rat& x : roots)
        if (!(((a3 * x + a2) * x + a1) * x + a0).is_zero())
            throw std::logic_error("rational_roots_cubic: back-substitution failed");
    return roots;
}

}  // namespace equimetric
