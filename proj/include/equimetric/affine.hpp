#pragma once

#include "equimetric/geometry.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equimetric {

/// The four Diophantine systems. Eq2 (triangle pair) and Eq4_1
/// (triangle-parallelogram) are the alpha = beta = 1 specializations of the
/// proportional systems Eq5_1 and Eq5_2.
enum class DioSystem { Eq2, Eq4_1, Eq5_1, Eq5_2 };

inline bool is_parallelogram_system(DioSystem s) {
    return s == DioSystem::Eq4_1 || s == DioSystem::Eq5_2;
}

inline const char* to_string(DioSystem s) {
    switch (s) {
        case DioSystem::Eq2: return "Eq2";
        case DioSystem::Eq4_1: return "Eq4_1";
        case DioSystem::Eq5_1: return "Eq5_1";
        case DioSystem::Eq5_2: return "Eq5_2";
    }
    throw std::logic_error("DioSystem: bad tag");
}

inline DioSystem system_from_string(const std::string& s) {
    if (s == "Eq2") return DioSystem::Eq2;
    if (s == "Eq4_1") return DioSystem::Eq4_1;
    if (s == "Eq5_1") return DioSystem::Eq5_1;
    if (s == "Eq5_2") return DioSystem::Eq5_2;
    throw std::invalid_argument("unknown system tag \"" + s + "\"");
}

/// Upper-triangular transformation matrix
///
///   [[alpha/a, b], [0, a]]            (halved = false, det = alpha)
///   [[alpha/(2a), b], [0, a]]         (halved = true,  det = alpha/2)
///
/// The halved variant maps a triangle onto the half of an equal-area
/// parallelogram. alpha = 1, halved = false is the UL2(Q) case.
struct TransformMatrix {
    Rat a;
    Rat b;
    Rat alpha;
    bool halved;

    TransformMatrix(Rat a_, Rat b_, Rat alpha_ = Rat(1), bool halved_ = false)
        : a(std::move(a_)), b(std::move(b_)), alpha(std::move(alpha_)), halved(halved_) {
        if (a.sign() <= 0 || alpha.sign() <= 0)
            throw std::domain_error("TransformMatrix: a and alpha must be positive");
    }

    /// Top-left entry.
    Rat m00() const { return halved ? alpha / (Rat(2) * a) : alpha / a; }

    Rat det() const { return halved ? alpha / Rat(2) : alpha; }

    bool is_identity() const { return !halved && a == Rat(1) && b.is_zero() && alpha == Rat(1); }

    bool operator==(const TransformMatrix& o) const {
        return a == o.a && b == o.b && alpha == o.alpha && halved == o.halved;
    }
};

inline TransformMatrix identity_transform() { return TransformMatrix(Rat(1), Rat(0)); }

/// Image of a placed triangle; empty when the image leaves the canonical
/// placement (its apex abscissa would be negative).
inline std::optional<Triangle> try_apply(const TransformMatrix& f, const Triangle& tri) {
    Rat m00 = f.m00();
    Rat r2 = m00 * tri.r;
    Rat s2 = m00 * tri.s + f.b * tri.t;
    Rat t2 = f.a * tri.t;
    if (s2.sign() < 0)
        return std::nullopt;
    return Triangle(r2, s2, t2);
}

inline Triangle apply(const TransformMatrix& f, const Triangle& tri) {
    auto image = try_apply(f, tri);
    if (!image)
        throw std::domain_error("apply: image leaves the canonical placement (s' < 0)");
    return *image;
}

/// Matrix product; apply(compose(f,g), T) = apply(f, apply(g, T)).
inline TransformMatrix compose(const TransformMatrix& f, const TransformMatrix& g) {
    Rat m00 = f.m00() * g.m00();
    Rat a = f.a * g.a;
    Rat b = f.m00() * g.b + f.b * g.a;
    bool halved = f.halved || g.halved;
    Rat alpha = m00 * a * (halved ? Rat(2) : Rat(1));
    return TransformMatrix(a, b, alpha, halved);
}

inline TransformMatrix invert(const TransformMatrix& f) {
    // [[p, b], [0, a]]^-1 = [[1/p, -b/(p a)], [0, 1/a]]
    Rat p = f.m00();
    Rat a = Rat(1) / f.a;
    Rat b = -f.b / (p * f.a);
    Rat alpha = (Rat(1) / p) * a;  // non-halved representation
    return TransformMatrix(a, b, alpha, false);
}

/// Candidate solution of one of the four systems. The w values are stored
/// unknowns, not recomputed; residuals() re-derives every equation from them.
struct SolutionTuple {
    DioSystem system = DioSystem::Eq2;
    Rat a{1}, b{0};
    Rat r{1}, s{0}, t{1};
    std::array<Rat, 4> w{Rat(0), Rat(0), Rat(0), Rat(0)};
    Rat alpha{1}, beta{1};

    bool uses_w4() const { return !is_parallelogram_system(system); }
};

/// Left-minus-right of every equation of the tagged system, exact. Five
/// entries for the triangle systems, four for the parallelogram ones. The
/// square-root equations are checked as w_i^2 = expression, so no root
/// extraction happens here.
inline std::vector<Rat> residuals(const SolutionTuple& c) {
    if (c.a.is_zero() || c.t.is_zero())
        throw std::domain_error("residuals: malformed candidate (a = 0 or t = 0)");
    std::vector<Rat> out;
    out.push_back(sq(c.s) + sq(c.t) - sq(c.w[0]));
    out.push_back(sq(c.s - c.r) + sq(c.t) - sq(c.w[1]));
    Rat at = c.a * c.t;
    if (is_parallelogram_system(c.system)) {
        Rat half = c.alpha / (Rat(2) * c.a);
        out.push_back(sq(half * c.s + c.b * c.t) + sq(at) - sq(c.w[2]));
        out.push_back(Rat(2) * (half * c.r + c.w[2]) - c.beta * (c.r + c.w[0] + c.w[1]));
    } else {
        Rat full = c.alpha / c.a;
        out.push_back(sq(full * c.s + c.b * c.t) + sq(at) - sq(c.w[2]));
        out.push_back(sq(full * (c.s - c.r) + c.b * c.t) + sq(at) - sq(c.w[3]));
        out.push_back(full * c.r + c.w[2] + c.w[3] - c.beta * (c.r + c.w[0] + c.w[1]));
    }
    return out;
}

/// All residuals exactly zero, domain constraints included (positive a, r, t
/// and positive w values of the tagged system).
inline bool verify_solution(const SolutionTuple& c) {
    if (c.a.sign() <= 0 || c.r.sign() <= 0 || c.t.sign() <= 0)
        return false;
    if (c.alpha.sign() <= 0 || c.beta.sign() <= 0)
        return false;
    size_t nw = c.uses_w4() ? 4 : 3;
    for (size_t i = 0; i < nw; ++i)
        if (c.w[i].sign() <= 0)
            return false;
    for (const Rat& res : residuals(c))
        if (!res.is_zero())
            return false;
    return true;
}

/// Builds a tuple from (a, b) and a placement by extracting the four (or
/// three) square roots; empty when any needed length is irrational or the
/// perimeter equation fails.
inline std::optional<SolutionTuple> try_make_solution(DioSystem system, const Rat& a,
                                                      const Rat& b, const Rat& r, const Rat& s,
                                                      const Rat& t, const Rat& alpha = Rat(1),
                                                      const Rat& beta = Rat(1)) {
    if (a.sign() <= 0 || r.sign() <= 0 || t.sign() <= 0)
        return std::nullopt;
    SolutionTuple c;
    c.system = system;
    c.a = a; c.b = b; c.r = r; c.s = s; c.t = t;
    c.alpha = alpha; c.beta = beta;
    auto w1 = rat_sqrt(sq(s) + sq(t));
    auto w2 = rat_sqrt(sq(s - r) + sq(t));
    if (!w1 || !w2)
        return std::nullopt;
    c.w[0] = *w1;
    c.w[1] = *w2;
    Rat at = a * t;
    if (is_parallelogram_system(system)) {
        Rat half = alpha / (Rat(2) * a);
        auto w3 = rat_sqrt(sq(half * s + b * t) + sq(at));
        if (!w3)
            return std::nullopt;
        c.w[2] = *w3;
    } else {
        Rat full = alpha / a;
        auto w3 = rat_sqrt(sq(full * s + b * t) + sq(at));
        auto w4 = rat_sqrt(sq(full * (s - r) + b * t) + sq(at));
        if (!w3 || !w4)
            return std::nullopt;
        c.w[2] = *w3;
        c.w[3] = *w4;
    }
    for (const Rat& res : residuals(c))
        if (!res.is_zero())
            return std::nullopt;
    return c;
}

/// The unique matrix with a = t2/t1 and b = (s2 - s1/a)/t1 mapping the first
/// placement onto the second. Requires equal areas (that forces r2 = r1/a).
inline std::optional<TransformMatrix> derive_transform(const Triangle& t1, const Triangle& t2) {
    if (t1.area() != t2.area())
        throw std::domain_error("derive_transform: areas differ");
    Rat a = t2.t / t1.t;
    Rat b = (t2.s - t1.s / a) / t1.t;
    TransformMatrix f(a, b);
    if (auto image = try_apply(f, t1); image && *image == t2)
        return f;
    return std::nullopt;
}

/// Scales (r, s, t, w) by k > 0; the system is homogeneous in these, so
/// residual-zero candidates stay residual-zero.
inline SolutionTuple homogeneity_scale(const SolutionTuple& c, const Rat& k) {
    if (k.sign() <= 0)
        throw std::domain_error("homogeneity_scale: k must be positive");
    SolutionTuple out = c;
    out.r = k * c.r;
    out.s = k * c.s;
    out.t = k * c.t;
    for (auto& wi : out.w)
        wi = k * wi;
    return out;
}

/// Matrices f_i with f_i(T_i) = T_{i+1} along a chain of equal-area,
/// pairwise weakly equivalent placements. Composed products are re-verified
/// to carry T_1 onto every later triangle.
inline std::vector<TransformMatrix> transform_chain(std::span<const Triangle> chain) {
    std::vector<TransformMatrix> links;
    if (chain.size() <= 1)
        return links;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        std::optional<TransformMatrix> f;
        try {
            f = derive_transform(chain[i], chain[i + 1]);
        } catch (const std::domain_error&) {
            f = std::nullopt;
        }
        if (!f)
            throw std::domain_error("transform_chain: no transform at index " + std::to_string(i));
        links.push_back(*f);
    }
    TransformMatrix prod = links.front();
    for (size_t i = 1; i < links.size(); ++i) {
        prod = compose(links[i], prod);
        auto image = try_apply(prod, chain.front());
        if (!image || !(*image == chain[i + 1]))
            throw std::logic_error("transform_chain: composed product fails at index " +
                                   std::to_string(i));
    }
    return links;
}

}  // namespace equimetric
