#pragma once

#include "equimetric/affine.hpp"
#include "equimetric/qpoly.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace equimetric {

/// One verified family instance: the solution tuple plus the generated pair.
/// Triangle pairs carry a second side triple; triangle-parallelogram pairs
/// carry the parallelogram built from the transformed half-triangle.
struct FamilyOutput {
    std::string family;
    std::vector<std::pair<std::string, Rat>> params;
    SolutionTuple tuple;
    SideTriple sides1;
    std::optional<SideTriple> sides2;
    std::optional<Parallelogram> parallelogram2;
    std::string notes;
};

/// Sides of the source triangle recorded in a tuple: (r, w1, w2).
inline SideTriple source_sides(const SolutionTuple& c) {
    return SideTriple(c.r, c.w[0], c.w[1]);
}

/// Sides of the image triangle of a triangle-system tuple: (alpha r/a, w3, w4).
inline SideTriple image_sides(const SolutionTuple& c) {
    if (is_parallelogram_system(c.system))
        throw std::logic_error("image_sides: tuple belongs to a parallelogram system");
    return SideTriple(c.alpha * c.r / c.a, c.w[2], c.w[3]);
}

/// Parallelogram of a halved-system tuple: base alpha*r/(2a), lateral side w3,
/// height a*t.
inline Parallelogram image_parallelogram(const SolutionTuple& c) {
    if (!is_parallelogram_system(c.system))
        throw std::logic_error("image_parallelogram: tuple belongs to a triangle system");
    Rat half = c.alpha / (Rat(2) * c.a);
    return Parallelogram(half * c.r, half * c.s + c.b * c.t, c.a * c.t);
}

namespace detail {

inline void require_above_one(const Rat& x, const char* name) {
    if (x <= Rat(1))
        throw std::domain_error(std::string(name) + " must exceed 1");
}

inline void require_positive(const Rat& x, const char* name) {
    if (x.sign() <= 0)
        throw std::domain_error(std::string(name) + " must be positive");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two right triangles sharing area and perimeter.

/// Scales a solving (a-1)((m^2-1)a - 2m) = 0 for the right triangle
/// (2km, 0, k(m^2-1)). Both roots map the triangle onto a congruent copy, so
/// no two distinct right triangles share area and perimeter.
inline std::vector<Rat> right_right_roots(const Rat& m) {
    detail::require_above_one(m, "right_right_roots: m");
    return {Rat(1), Rat(2) * m / (sq(m) - Rat(1))};
}

// ---------------------------------------------------------------------------
// Two isosceles triangles.

/// Isosceles pair when the variant's discriminant (m^2+14m+1, resp. 4m^2-3)
/// is a rational square and the nontrivial root is positive. Absence is the
/// expected outcome for most m.
inline std::optional<FamilyOutput> isosceles_pair(int variant, const Rat& m) {
    detail::require_above_one(m, "isosceles_pair: m");
    Rat one(1), two(2), four(4);
    Rat r, s, t;
    std::vector<Rat> roots;
    if (variant == 1) {
        // (4km, 2km, k(m^2-1)), k = 1; (m-1)^2 a^2 + (m-1)^2 a - 4m = 0
        r = four * m;
        s = two * m;
        t = sq(m) - one;
        roots = solve_quadratic(sq(m - one), sq(m - one), -four * m);
    } else if (variant == 2) {
        // (2k(m^2-1), k(m^2-1), 2km), k = 1; a^2 + a - (m^2-1) = 0
        r = two * (sq(m) - one);
        s = sq(m) - one;
        t = two * m;
        roots = solve_quadratic(one, one, -(sq(m) - one));
    } else {
        throw std::invalid_argument("isosceles_pair: variant must be 1 or 2");
    }
    for (const Rat& a : roots) {
        if (a.sign() <= 0 || a == one)
            continue;
        auto tuple = try_make_solution(DioSystem::Eq2, a, Rat(0), r, s, t);
        if (!tuple)
            continue;
        return FamilyOutput{.family = variant == 1 ? "Isosceles1" : "Isosceles2",
                            .params = {{"m", m}},
                            .tuple = *tuple,
                            .sides1 = source_sides(*tuple),
                            .sides2 = image_sides(*tuple),
                            .parallelogram2 = std::nullopt,
                            .notes = ""};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Right triangle paired with an isosceles triangle.

/// Right/isosceles pair from the cubic
///   (m+1)(m-1)^2 a^3 - m^2(m+1) a + 2 m^2 = 0,
/// present when it has a rational root 0 < a < m/(m-1). The default k clears
/// denominators, normalizing the m = 16/11 instance to the integer pair
/// (135,352,377), (132,366,366).
inline std::optional<FamilyOutput> right_isosceles(const Rat& m,
                                                   std::optional<Rat> k_opt = std::nullopt) {
    detail::require_above_one(m, "right_isosceles: m");
    Rat k = k_opt.value_or(Rat(mpz_class(m.den() * m.den())));
    detail::require_positive(k, "right_isosceles: k");
    Rat one(1), two(2);
    Rat c3 = (m + one) * sq(m - one);
    Rat c1 = -sq(m) * (m + one);
    Rat c0 = two * sq(m);
    for (const Rat& a : rational_roots_cubic(c3, Rat(0), c1, c0)) {
        if (a.sign() <= 0 || a * (m - one) >= m)  // bound a < m/(m-1)
            continue;
        Rat r = two * k * m;
        Rat t = k * (sq(m) - one);
        Rat b = m / (a * (sq(m) - one));  // apex over the midpoint: b k(m^2-1) = km/a
        auto tuple = try_make_solution(DioSystem::Eq2, a, b, r, Rat(0), t);
        if (!tuple)
            continue;
        return FamilyOutput{.family = "RightIsosceles",
                            .params = {{"m", m}, {"k", k}},
                            .tuple = *tuple,
                            .sides1 = source_sides(*tuple),
                            .sides2 = image_sides(*tuple),
                            .parallelogram2 = std::nullopt,
                            .notes = ""};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The Choudhry two-parameter family of rational triangle pairs.

/// Pair of rational triangles for arbitrary R, S > 0, with sides
///   a1 = (R^2+1)(S^2+S+1)        a2 = (R^2+S^2)(S^2+S+1)
///   b1 = S(S+1)(R^2+S^2+S+1)     b2 = (S+1)(R^2+S^2+S+1)
///   c1 = R^2+(S^2+S+1)^2         c2 = R^2 S^2+(S^2+S+1)^2
/// and the transformation data (r,s,t,a,b) transcribed below. The two
/// triangles coincide at S = 1.
inline FamilyOutput choudhry_pair(const Rat& R, const Rat& S) {
    detail::require_positive(R, "choudhry_pair: R");
    detail::require_positive(S, "choudhry_pair: S");
    Rat one(1), two(2);
    Rat R2 = sq(R), S2 = sq(S);
    Rat u = S2 + S + one;           // S^2+S+1
    Rat v = R2 + S2 + S + one;      // R^2+S^2+S+1
    Rat a1 = (R2 + one) * u;
    Rat b1 = S * (S + one) * v;
    Rat c1 = R2 + sq(u);
    Rat a2 = (R2 + S2) * u;
    Rat b2 = (S + one) * v;
    Rat c2 = R2 * S2 + sq(u);

    Rat den1 = R2 + sq(u);          // S^4+2S^3+R^2+3S^2+2S+1
    Rat r = c1;
    Rat s = S * (S + one) * v * (S2 + R + S + one) * (S2 - R + S + one) / den1;
    Rat t = (two * S2 + two * S + two) * v * R * S * (S + one) / den1;
    Rat a = den1 / c2;
    Rat bpoly = pow_ui(R, 6) * S2 - u * (sq(S2) + S * S2 - S2 + S + one) * pow_ui(R, 4) -
                (two * S2 + Rat(3) * S + two) * pow_ui(u, 3) * R2 - pow_ui(u, 5);
    Rat b = (S - one) * bpoly / (two * S * R * den1 * c2);

    auto tuple = try_make_solution(DioSystem::Eq2, a, b, r, s, t);
    if (!tuple)
        throw std::logic_error("choudhry_pair: transcribed data fails the system at R=" +
                               R.str() + ", S=" + S.str());
    return FamilyOutput{.family = "Choudhry",
                        .params = {{"R", R}, {"S", S}},
                        .tuple = *tuple,
                        .sides1 = SideTriple(a1, b1, c1),
                        .sides2 = SideTriple(a2, b2, c2),
                        .parallelogram2 = std::nullopt,
                        .notes = ""};
}

// ---------------------------------------------------------------------------
// Right-triangle source, s = 0: the F321 families. The base solution comes
// from the first square-making m, the double from the doubled curve point;
// two further m-choices are exposed as alternates.

namespace detail {

/// Quadratic in c from the s = 0 reduction:
/// p(p^2+1)(m^2-1) c^2 - p(m^2+(p+1)m-p) c + m = 0.
inline std::vector<Rat> case321_c_roots(const Rat& m, const Rat& p) {
    Rat one(1);
    return solve_quadratic(p * (sq(p) + one) * (sq(m) - one),
                           -p * (sq(m) + (p + one) * m - p), m);
}

inline FamilyOutput build_right_family(const char* name, DioSystem system, const Rat& p,
                                       const Rat& k, const Rat& m, const Rat& c) {
    Rat one(1), two(2);
    Rat a = two * c * p;
    Rat b = c * (sq(p) - one);
    Rat r = two * k * m;
    Rat t = k * (sq(m) - one);
    auto tuple = try_make_solution(system, a, b, r, Rat(0), t);
    if (!tuple)
        throw std::logic_error(std::string(name) + ": closed-form solution fails at p=" + p.str());
    FamilyOutput out{.family = name,
                     .params = {{"p", p}, {"k", k}},
                     .tuple = *tuple,
                     .sides1 = source_sides(*tuple),
                     .sides2 = std::nullopt,
                     .parallelogram2 = std::nullopt,
                     .notes = ""};
    if (is_parallelogram_system(system))
        out.parallelogram2 = image_parallelogram(*tuple);
    else
        out.sides2 = image_sides(*tuple);
    return out;
}

}  // namespace detail

/// Base F321 family: m = (p^2+p+1)/p^2 with c = p/(p^2+1) (the other
/// root of the c-quadratic behind alt_c).
inline FamilyOutput f321_base(const Rat& p, const Rat& k, bool alt_c = false) {
    detail::require_above_one(p, "f321_base: p");
    detail::require_positive(k, "f321_base: k");
    Rat one(1);
    Rat m = (sq(p) + p + one) / sq(p);
    Rat c = alt_c ? (sq(p) + p + one) / (Rat(2) * pow_ui(p, 3) + Rat(3) * sq(p) + Rat(2) * p + one)
                  : p / (sq(p) + one);
    return detail::build_right_family("F321base", DioSystem::Eq2, p, k, m, c);
}

/// F321 family from the doubled curve point: m = p(p+1)/(p^2-p+1) with
/// c = (p+1)/(2p^2+1).
inline FamilyOutput f321_double(const Rat& p, const Rat& k, bool alt_c = false) {
    detail::require_above_one(p, "f321_double: p");
    detail::require_positive(k, "f321_double: k");
    Rat one(1), two(2);
    Rat m = p * (p + one) / (sq(p) - p + one);
    Rat c = alt_c ? (sq(p) - p + one) / (two * pow_ui(p, 3) - sq(p) + two * p - one)
                  : (p + one) / (two * sq(p) + one);
    return detail::build_right_family("F321double", DioSystem::Eq2, p, k, m, c);
}

/// The two remaining square-making m-choices for the right-source quartic,
/// with c recovered from the c-quadratic. Absent when the choice leaves the
/// triangle domain (the second choice always has m < 1) or no c-root yields a
/// solution.
inline std::optional<FamilyOutput> f321_alternate(int which, const Rat& p, const Rat& k) {
    detail::require_above_one(p, "f321_alternate: p");
    detail::require_positive(k, "f321_alternate: k");
    Rat one(1);
    Rat m;
    if (which == 1) {
        if (p == Rat(2))
            return std::nullopt;  // m = (p^2-p+1)/(p(p-2)) has a pole
        m = (sq(p) - p + one) / (p * (p - Rat(2)));
    } else if (which == 2) {
        m = (pow_ui(p, 3) - sq(p) - one) / (sq(p) * (p + one));
    } else {
        throw std::invalid_argument("f321_alternate: which must be 1 or 2");
    }
    if (m <= one)
        return std::nullopt;
    for (const Rat& c : detail::case321_c_roots(m, p)) {
        if (c.sign() <= 0)
            continue;
        try {
            FamilyOutput out = detail::build_right_family(
                which == 1 ? "F321alt1" : "F321alt2", DioSystem::Eq2, p, k, m, c);
            return out;
        } catch (const std::logic_error&) {
            continue;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scalene source, s != 0: the F322 families.

/// Base F322 family, built on
///   k = (2(m^2+1)p^2+(m+1)^2) / ((m^2+1)((m^2-1)p+(m+1)^2)).
inline FamilyOutput f322_base(const Rat& m, const Rat& p) {
    detail::require_above_one(m, "f322_base: m");
    detail::require_above_one(p, "f322_base: p");
    Rat one(1), two(2), four(4);
    Rat m2 = sq(m), p2 = sq(p);
    Rat r = two * ((m + one) * p2 - (m - one) * p + m + one) * (m2 + one) * p /
            ((m + one) * (two * (m2 + one) * p - m2 + one));
    Rat s = two * (two * (m2 + one) * p2 + sq(m + one)) * m /
            ((m2 + one) * ((m2 - one) * p + sq(m + one)));
    Rat t = (m - one) * (two * (m2 + one) * p2 + sq(m + one)) /
            (((m - one) * p + m + one) * (m2 + one));
    Rat a = two * ((m - one) * p + m + one) * (m2 + one) * p /
            ((m - one) * (two * (m2 + one) * p2 + sq(m + one)));
    Rat bpoly = sq(sq(m2) - one) * pow_ui(p, 5) +
                two * (m2 - one) * pow_ui(m2 + one, 3) * pow_ui(p, 4) +
                four * sq(m + one) * m * sq(m2 + one) * pow_ui(p, 3) -
                two * pow_ui(m + one, 4) * (sq(m2) - one) * p2 -
                pow_ui(m + one, 4) * sq(m2 + one) * p -
                pow_ui(m + one, 5) * m * (m - one);
    Rat b = bpoly /
            ((sq(m2) - one) * (two * (m2 + one) * p2 + sq(m + one)) *
             ((m2 - one) * p + sq(m + one)) * p);
    auto tuple = try_make_solution(DioSystem::Eq2, a, b, r, s, t);
    if (!tuple)
        throw std::logic_error("f322_base: closed-form solution fails at m=" + m.str() +
                               ", p=" + p.str());
    return FamilyOutput{.family = "F322base",
                        .params = {{"m", m}, {"p", p}},
                        .tuple = *tuple,
                        .sides1 = source_sides(*tuple),
                        .sides2 = image_sides(*tuple),
                        .parallelogram2 = std::nullopt,
                        .notes = ""};
}

/// F322 family from the doubled curve point, with
///   k = 2(p^2+1)p((m-1)p+m+1) / ((m-1)(2(m^2+1)p^2+(m+1)^2)).
inline FamilyOutput f322_double(const Rat& m, const Rat& p) {
    detail::require_above_one(m, "f322_double: m");
    detail::require_above_one(p, "f322_double: p");
    Rat one(1), two(2), three(3), four(4), eight(8);
    Rat m2 = sq(m), p2 = sq(p);
    Rat r = (p2 + one) * (two * (m2 + one) * p - m2 + one) /
            ((m2 - one) * p2 - sq(m - one) * p + m2 - one);
    Rat s = four * (p2 + one) * p * ((m - one) * p + m + one) * m /
            ((m - one) * (two * (m2 + one) * p2 + sq(m + one)));
    Rat t = two * (p2 + one) * p * ((m2 - one) * p + sq(m + one)) /
            (two * (m2 + one) * p2 + sq(m + one));
    Rat a = (two * (m2 + one) * p2 + sq(m + one)) / ((p2 + one) * ((m2 - one) * p + sq(m + one)));
    Rat bpoly = four * m * sq(m2 - one) * pow_ui(p, 7) -
                four * (m2 - one) * (sq(m2) - two * pow_ui(m, 3) - two * m2 - two * m + one) *
                    pow_ui(p, 6) +
                four * sq(m + one) * m * (three * m2 - two * m + three) * pow_ui(p, 5) +
                eight * m * (m2 - one) * (m2 + four * m + one) * pow_ui(p, 4) +
                four * sq(m + one) * m * (three * m2 + two * m + three) * pow_ui(p, 3) +
                three * (m - one) * pow_ui(m + one, 5) * p2 +
                four * pow_ui(m + one, 4) * m * p + (m - one) * pow_ui(m + one, 5);
    Rat b = -bpoly /
            (two * (m2 - one) * p * ((m2 - one) * p + sq(m + one)) * (p2 + one) *
             (two * (m2 + one) * p2 + sq(m + one)));
    auto tuple = try_make_solution(DioSystem::Eq2, a, b, r, s, t);
    if (!tuple)
        throw std::logic_error("f322_double: closed-form solution fails at m=" + m.str() +
                               ", p=" + p.str());
    return FamilyOutput{.family = "F322double",
                        .params = {{"m", m}, {"p", p}},
                        .tuple = *tuple,
                        .sides1 = source_sides(*tuple),
                        .sides2 = image_sides(*tuple),
                        .parallelogram2 = std::nullopt,
                        .notes = ""};
}

// ---------------------------------------------------------------------------
// Right triangle and rectangle.

/// Rational scales a of (m^2-1)a^2 - m(m+1)a + m = 0 for m > 1; non-empty
/// only when m^4-2m^3+m^2+4m is a rational square. Within reach of the
/// bounded point search on the rectangle-case curve, this never produces a
/// valid pair.
inline std::vector<Rat> right_rectangle_roots(const Rat& m) {
    detail::require_above_one(m, "right_rectangle_roots: m");
    Rat one(1);
    return solve_quadratic(sq(m) - one, -m * (m + one), m);
}

/// The quartic discriminant of the rectangle reduction: Delta(a) = m^4-2m^3+m^2+4m.
inline Rat right_rectangle_discriminant(const Rat& m) {
    return pow_ui(m, 4) - Rat(2) * pow_ui(m, 3) + sq(m) + Rat(4) * m;
}

// ---------------------------------------------------------------------------
// Isosceles triangle and rhombus.

/// Delta(b) of the rhombus reductions:
///   variant 1: (m^3+11m^2-5m+1)(m^3-5m^2+11m+1)
///   variant 2: (m^3-2m^2+2)(m^3+2m^2-2)
/// A rhombus pair would need this to be a rational square.
inline Rat rhombus_discriminant(int variant, const Rat& m) {
    Rat one(1), two(2);
    Rat m2 = sq(m), m3 = pow_ui(m, 3);
    if (variant == 1)
        return (m3 + Rat(11) * m2 - Rat(5) * m + one) * (m3 - Rat(5) * m2 + Rat(11) * m + one);
    if (variant == 2)
        return (m3 - two * m2 + two) * (m3 + two * m2 - two);
    throw std::invalid_argument("rhombus_discriminant: variant must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Right triangle and parallelogram, s = 0: the F431 families. The parameter
// window 1+sqrt(2) < p < (3+sqrt(5))/2 is decided exactly: (p-1)^2 > 2 and
// (2p-3)^2 < 5.

namespace detail {

inline void require_431_window(const Rat& p, const char* name) {
    Rat one(1);
    if (!(p > one) || sq(p - one) <= Rat(2))
        throw std::domain_error(std::string(name) + ": requires (p-1)^2 > 2, i.e. p > 1+sqrt(2)");
    if (sq(Rat(2) * p - Rat(3)) >= Rat(5))
        throw std::domain_error(std::string(name) +
                                ": requires (2p-3)^2 < 5, i.e. p < (3+sqrt(5))/2");
}

inline FamilyOutput build_431(const char* name, const Rat& p, const Rat& k, const Rat& m,
                              const Rat& c) {
    // a = 2cp, b = c(p^2-1) with source (2km, 0, k(m^2-1)); the window makes
    // every negative-looking sign come out positive, asserted here exactly.
    Rat one(1), two(2);
    Rat a = two * c * p;
    Rat b = c * (sq(p) - one);
    Rat r = two * k * m;
    Rat t = k * (sq(m) - one);
    if (m <= one || a.sign() <= 0 || r.sign() <= 0 || t.sign() <= 0)
        throw std::logic_error(std::string(name) + ": in-window sign analysis failed at p=" +
                               p.str());
    auto tuple = try_make_solution(DioSystem::Eq4_1, a, b, r, Rat(0), t);
    if (!tuple)
        throw std::logic_error(std::string(name) + ": closed-form solution fails at p=" + p.str());
    return FamilyOutput{.family = name,
                        .params = {{"p", p}, {"k", k}},
                        .tuple = *tuple,
                        .sides1 = source_sides(*tuple),
                        .sides2 = std::nullopt,
                        .parallelogram2 = image_parallelogram(*tuple),
                        .notes = ""};
}

}  // namespace detail

/// Base F431 family: m = -(p-1)^4/(4p(p^2-3p+1)) with
/// c = -(p-1)^2/((p^2+1)(p^2-4p+1)).
inline FamilyOutput f431_base(const Rat& p, const Rat& k) {
    detail::require_positive(k, "f431_base: k");
    detail::require_431_window(p, "f431_base");
    Rat one(1), four(4);
    Rat m = -pow_ui(p - one, 4) / (four * p * (sq(p) - Rat(3) * p + one));
    Rat c = -sq(p - one) / ((sq(p) + one) * (sq(p) - four * p + one));
    return detail::build_431("F431base", p, k, m, c);
}

/// F431 family from the doubled curve point: m = (p^2-4p+1)^2/((p^2-2p-1)(p^2+2p-1))
/// with c = -(p^2-4p+1)/(4(p-1)^2 p).
inline FamilyOutput f431_double(const Rat& p, const Rat& k) {
    detail::require_positive(k, "f431_double: k");
    detail::require_431_window(p, "f431_double");
    Rat one(1), two(2), four(4);
    Rat m = sq(sq(p) - four * p + one) / ((sq(p) - two * p - one) * (sq(p) + two * p - one));
    Rat c = -(sq(p) - four * p + one) / (four * sq(p - one) * p);
    return detail::build_431("F431double", p, k, m, c);
}

// ---------------------------------------------------------------------------
// Scalene triangle and parallelogram: the F432 family, from the doubled
// curve point. Here a = 1/2 exactly and k = 4p/(m^2-1). The domain is
//   1 < p < 2+sqrt(3) with m > 1, or
//   p > 2+sqrt(3) with 1 < m < sqrt((p^2-4p+1)(p^2+4p+1))/(p^2-4p+1),
// decided exactly by (p-2)^2 vs 3 and a cross-multiplied square comparison.

inline FamilyOutput f432_double(const Rat& m, const Rat& p) {
    detail::require_above_one(m, "f432_double: m");
    if (!(p > Rat(1)))
        throw std::domain_error("f432_double: requires p > 1");
    Rat one(1), two(2), four(4), eight(8);
    Rat m2 = sq(m), p2 = sq(p);
    if (sq(p - two) > Rat(3)) {
        // p > 2+sqrt(3): the m upper bound m^2 (p^2-4p+1) < p^2+4p+1 applies
        if (m2 * (p2 - four * p + one) >= p2 + four * p + one)
            throw std::domain_error(
                "f432_double: requires m^2 (p^2-4p+1) < p^2+4p+1 when p > 2+sqrt(3)");
    }
    Rat r = -(p2 + one) * ((m2 - one) * p2 - four * (m2 + one) * p + m2 - one) /
            ((m2 - one) * p2 - two * sq(m - one) * p + m2 - one);
    Rat s = eight * m * p / (m2 - one);
    Rat t = four * p;
    Rat a = one / two;
    Rat b = ((m2 - one) * p2 - eight * m * p - m2 + one) / (four * p * (m2 - one));
    auto tuple = try_make_solution(DioSystem::Eq4_1, a, b, r, s, t);
    if (!tuple)
        throw std::logic_error("f432_double: closed-form solution fails at m=" + m.str() +
                               ", p=" + p.str());
    return FamilyOutput{.family = "F432double",
                        .params = {{"m", m}, {"p", p}},
                        .tuple = *tuple,
                        .sides1 = source_sides(*tuple),
                        .sides2 = std::nullopt,
                        .parallelogram2 = image_parallelogram(*tuple),
                        .notes = ""};
}

// ---------------------------------------------------------------------------
// Proportional systems: grid search for solutions of Eq5_1/Eq5_2 at fixed
// (alpha, beta) over Pythagorean-parametrized placements and rational (a, b)
// of bounded height.

/// Right and glued-isosceles placements with rational sides, generated from
/// primitive Pythagorean pairs with generator indices up to the bound.
inline std::vector<Triangle> pythagorean_grid(long bound) {
    std::vector<Triangle> out;
    for (long u = 2; u <= bound; ++u) {
        for (long v = 1; v < u; ++v) {
            if (std::gcd(u, v) != 1 || (u - v) % 2 == 0)
                continue;
            Rat leg1(2 * u * v), leg2(u * u - v * v);
            out.emplace_back(leg1, Rat(0), leg2);
            out.emplace_back(leg2, Rat(0), leg1);
            out.emplace_back(Rat(2) * leg1, leg1, leg2);  // isosceles glue
            out.emplace_back(Rat(2) * leg2, leg2, leg1);
        }
    }
    return out;
}

/// Canonical positive rationals n/d with n, d up to the height bound.
inline std::vector<Rat> rational_heights(long bound, bool with_zero_and_sign) {
    std::vector<Rat> out;
    if (with_zero_and_sign)
        out.push_back(Rat(0));
    for (long d = 1; d <= bound; ++d)
        for (long n = 1; n <= bound; ++n) {
            if (std::gcd(n, d) != 1)
                continue;
            out.emplace_back(n, d);
            if (with_zero_and_sign)
                out.emplace_back(-n, d);
        }
    return out;
}

/// All residual-zero tuples of the tagged proportional system found over the
/// grid; deterministic order.
inline std::vector<SolutionTuple> proportional_residual_search(const Rat& alpha, const Rat& beta,
                                                               DioSystem system, long bound) {
    if (system != DioSystem::Eq5_1 && system != DioSystem::Eq5_2)
        throw std::invalid_argument("proportional_residual_search: system must be Eq5_1 or Eq5_2");
    detail::require_positive(alpha, "proportional_residual_search: alpha");
    detail::require_positive(beta, "proportional_residual_search: beta");
    if (bound < 1)
        throw std::invalid_argument("proportional_residual_search: bound must be >= 1");
    std::vector<SolutionTuple> hits;
    auto scales = rational_heights(bound, false);
    auto shears = rational_heights(bound, true);
    for (const Triangle& tri : pythagorean_grid(bound)) {
        for (const Rat& a : scales)
            for (const Rat& b : shears)
                if (auto tuple = try_make_solution(system, a, b, tri.r, tri.s, tri.t, alpha, beta))
                    hits.push_back(*tuple);
    }
    return hits;
}

}  // namespace equimetric
