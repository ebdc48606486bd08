#pragma once

#include "equimetric/rat.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace equimetric {

/// Triangle in the canonical placement: vertices (0,0), (r,0), (s,t) with
/// r > 0, s >= 0, t > 0. Degenerate triangles are not representable.
struct Triangle {
    Rat r, s, t;

    Triangle(Rat r_, Rat s_, Rat t_) : r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
        if (r.sign() <= 0 || s.sign() < 0 || t.sign() <= 0)
            throw std::domain_error("Triangle: placement requires r > 0, s >= 0, t > 0");
    }

    /// Exact area r*t/2.
    Rat area() const { return r * t / Rat(2); }

    Rat side13_sq() const { return sq(s) + sq(t); }
    Rat side23_sq() const { return sq(s - r) + sq(t); }

    bool operator==(const Triangle& o) const { return r == o.r && s == o.s && t == o.t; }
};

/// Three side lengths sorted ascending; all positive, strict triangle
/// inequality. Collinear triples are rejected here (use heron_area_sq16 on
/// raw lengths to probe degenerate input).
class SideTriple {
public:
    SideTriple(Rat a, Rat b, Rat c) : s_{std::move(a), std::move(b), std::move(c)} {
        std::sort(s_.begin(), s_.end());
        if (s_[0].sign() <= 0)
            throw std::domain_error("SideTriple: sides must be positive");
        if (s_[0] + s_[1] <= s_[2])
            throw std::domain_error("SideTriple: triangle inequality violated");
    }

    static std::optional<SideTriple> try_make(const Rat& a, const Rat& b, const Rat& c) {
        Rat lo = a, mid = b, hi = c;
        if (lo > mid) std::swap(lo, mid);
        if (mid > hi) std::swap(mid, hi);
        if (lo > mid) std::swap(lo, mid);
        if (lo.sign() <= 0 || lo + mid <= hi)
            return std::nullopt;
        return SideTriple(lo, mid, hi);
    }

    const Rat& operator[](size_t i) const { return s_.at(i); }

    Rat perimeter() const { return s_[0] + s_[1] + s_[2]; }

    bool operator==(const SideTriple& o) const { return s_ == o.s_; }
    bool operator<(const SideTriple& o) const { return s_ < o.s_; }

private:
    std::array<Rat, 3> s_;
};

/// 16 * area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c), exact. Zero for collinear
/// input, negative when the triangle inequality fails outright.
inline Rat heron_area_sq16(const Rat& a, const Rat& b, const Rat& c) {
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

inline Rat heron_area_sq16(const SideTriple& s) {
    return heron_area_sq16(s[0], s[1], s[2]);
}

/// Rational area of a side triple when it exists (i.e. when 16A^2 is a
/// rational square).
inline std::optional<Rat> heron_area(const SideTriple& s) {
    auto root = rat_sqrt(heron_area_sq16(s));
    if (!root)
        return std::nullopt;
    return *root / Rat(4);
}

/// Side lengths of a placed triangle: present exactly when both non-horizontal
/// sides are rational.
inline std::optional<SideTriple> sides(const Triangle& tri) {
    auto u = rat_sqrt(tri.side13_sq());
    if (!u)
        return std::nullopt;
    auto v = rat_sqrt(tri.side23_sq());
    if (!v)
        return std::nullopt;
    return SideTriple(tri.r, *u, *v);
}

inline Rat perimeter(const SideTriple& s) { return s.perimeter(); }

inline Rat perimeter(const Triangle& tri) {
    auto st = sides(tri);
    if (!st)
        throw std::domain_error("perimeter: triangle sides are not all rational");
    return st->perimeter();
}

inline Rat area(const Triangle& tri) { return tri.area(); }

/// Weak metric equivalence: same perimeter and same area, compared exactly
/// through the 16*area^2 invariant.
inline bool weakly_equivalent(const SideTriple& x, const SideTriple& y) {
    return x.perimeter() == y.perimeter() && heron_area_sq16(x) == heron_area_sq16(y);
}

/// Similarity after ascending sort: y = lambda * x componentwise for some
/// rational lambda > 0.
inline bool similar(const SideTriple& x, const SideTriple& y) {
    Rat lambda = y[0] / x[0];
    return y[1] == lambda * x[1] && y[2] == lambda * x[2];
}

/// Parallelogram spanned by the triangle (0,0), (base,0), (sx,sy): the fourth
/// vertex is (base+sx, sy). Perimeter counts the two distinct sides; the area
/// is twice the generating triangle's.
struct Parallelogram {
    Rat base, sx, sy;

    Parallelogram(Rat base_, Rat sx_, Rat sy_)
        : base(std::move(base_)), sx(std::move(sx_)), sy(std::move(sy_)) {
        if (base.sign() <= 0 || sy.sign() <= 0)
            throw std::domain_error("Parallelogram: base and height must be positive");
    }

    Rat side_sq() const { return sq(sx) + sq(sy); }

    std::optional<Rat> side() const { return rat_sqrt(side_sq()); }

    Rat perimeter() const {
        auto g = side();
        if (!g)
            throw std::domain_error("Parallelogram: lateral side is not rational");
        return Rat(2) * (base + *g);
    }

    Rat area() const { return base * sy; }

    std::array<Rat, 2> fourth_vertex() const { return {base + sx, sy}; }
};

}  // namespace equimetric
