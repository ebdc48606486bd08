#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace equimetric {

/// Exact rational number in canonical lowest terms.
///
/// Invariants: gcd(|numerator|, denominator) = 1 and denominator > 0 after
/// every operation. Equality is structural on the canonical form. Backed by
/// GMP so numerators of any size are exact; there is no floating point
/// anywhere in the arithmetic.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

    /// Parses "num/den" or a bare integer: "-3/2", "5/1", "7".
    explicit Rat(std::string_view text) {
        auto fail = [&] {
            throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
        };
        if (text.empty())
            fail();
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                q_ = mpq_class(mpz_class(s));
            } else {
                mpz_class num(s.substr(0, slash));
                mpz_class den(s.substr(slash + 1));
                if (den == 0)
                    throw std::domain_error("Rat: zero denominator");
                q_ = mpq_class(num, den);
                q_.canonicalize();
            }
        } catch (const std::invalid_argument&) {
            fail();
        }
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical serialization "num/den", denominator always present: "-3/2", "5/1".
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    double approx() const { return q_.get_d(); }

    /// Height of u/v in lowest terms: max(|u|, v).
    mpz_class height() const {
        mpz_class a = abs(q_.get_num());
        return a > q_.get_den() ? a : mpz_class(q_.get_den());
    }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // gmpxx keeps arithmetic results canonical
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

inline Rat sq(const Rat& x) { return x * x; }

/// x^n for small non-negative n.
inline Rat pow_ui(const Rat& x, unsigned n) {
    Rat acc(1), base = x;
    while (n) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

inline bool is_perfect_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact rational square root: y >= 0 with y^2 = x when x is the square of a
/// rational, absent otherwise. Canonical form means numerator and denominator
/// must each be perfect squares.
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x.sign() < 0)
        throw std::domain_error("rat_sqrt: negative input");
    if (x.is_zero())
        return Rat(0);
    if (!is_perfect_square(x.num()) || !is_perfect_square(x.den()))
        return std::nullopt;
    return Rat(isqrt(x.num()), isqrt(x.den()));
}

inline bool is_rational_square(const Rat& x) {
    return x.sign() >= 0 && is_perfect_square(x.num()) && is_perfect_square(x.den());
}

}  // namespace equimetric
