#pragma once

#include "equimetric/qpoly.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace equimetric {

/// Short Weierstrass curve Y^2 = X^3 + A X + B over Q. Singular input is
/// rejected at construction.
struct Curve {
    Rat A, B;

    Curve(Rat A_, Rat B_) : A(std::move(A_)), B(std::move(B_)) {
        if ((Rat(4) * pow_ui(A, 3) + Rat(27) * sq(B)).is_zero())
            throw std::domain_error("Curve: singular (4A^3 + 27B^2 = 0)");
    }

    /// Discriminant of the Weierstrass model, -16(4A^3 + 27B^2).
    Rat discriminant() const { return Rat(-16) * (Rat(4) * pow_ui(A, 3) + Rat(27) * sq(B)); }

    /// Discriminant of the right-hand cubic X^3 + A X + B, i.e. -(4A^3+27B^2).
    Rat cubic_discriminant() const { return -(Rat(4) * pow_ui(A, 3) + Rat(27) * sq(B)); }

    bool operator==(const Curve& o) const { return A == o.A && B == o.B; }
};

/// Affine point or the point at infinity.
class CurvePoint {
public:
    CurvePoint() : inf_(true), x_(0), y_(0) {}
    CurvePoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return inf_; }
    const Rat& x() const { require_affine(); return x_; }
    const Rat& y() const { require_affine(); return y_; }

    bool operator==(const CurvePoint& o) const {
        if (inf_ || o.inf_)
            return inf_ == o.inf_;
        return x_ == o.x_ && y_ == o.y_;
    }

private:
    void require_affine() const {
        if (inf_)
            throw std::logic_error("CurvePoint: coordinate of the point at infinity");
    }
    bool inf_;
    Rat x_, y_;
};

inline bool on_curve(const Curve& c, const CurvePoint& pt) {
    if (pt.is_infinity())
        return true;
    return sq(pt.y()) == pow_ui(pt.x(), 3) + c.A * pt.x() + c.B;
}

namespace detail {
inline void require_on_curve(const Curve& c, const CurvePoint& pt, const char* op) {
    if (!on_curve(c, pt))
        throw std::domain_error(std::string(op) + ": point is not on the curve");
}
}  // namespace detail

inline CurvePoint neg(const Curve& c, const CurvePoint& pt) {
    detail::require_on_curve(c, pt, "neg");
    if (pt.is_infinity())
        return pt;
    return CurvePoint(pt.x(), -pt.y());
}

/// Chord-tangent addition with infinity as the identity, all exact.
inline CurvePoint add(const Curve& c, const CurvePoint& p1, const CurvePoint& p2) {
    detail::require_on_curve(c, p1, "add");
    detail::require_on_curve(c, p2, "add");
    if (p1.is_infinity())
        return p2;
    if (p2.is_infinity())
        return p1;
    Rat lambda(0);
    if (p1.x() == p2.x()) {
        if (p1.y() == -p2.y())
            return CurvePoint::infinity();
        // tangent (p1 == p2 with y != 0)
        lambda = (Rat(3) * sq(p1.x()) + c.A) / (Rat(2) * p1.y());
    } else {
        lambda = (p2.y() - p1.y()) / (p2.x() - p1.x());
    }
    Rat x3 = sq(lambda) - p1.x() - p2.x();
    Rat y3 = lambda * (p1.x() - x3) - p1.y();
    return CurvePoint(x3, y3);
}

inline CurvePoint double_point(const Curve& c, const CurvePoint& pt) {
    return add(c, pt, pt);
}

// ---------------------------------------------------------------------------
// The five quartic-model cases and their Weierstrass curves, marked points,
// and birational maps. Each curve is kept in its exact (non-minimal) model;
// no scaling or reduction touches the coefficients.

enum class CaseId { C321, C322, C421, C431, C432 };

inline const char* to_string(CaseId id) {
    switch (id) {
        case CaseId::C321: return "C321";
        case CaseId::C322: return "C322";
        case CaseId::C421: return "C421";
        case CaseId::C431: return "C431";
        case CaseId::C432: return "C432";
    }
    throw std::logic_error("CaseId: bad tag");
}

inline CaseId case_from_string(const std::string& s) {
    if (s == "C321") return CaseId::C321;
    if (s == "C322") return CaseId::C322;
    if (s == "C421") return CaseId::C421;
    if (s == "C431") return CaseId::C431;
    if (s == "C432") return CaseId::C432;
    throw std::invalid_argument("unknown case tag \"" + s + "\"");
}

struct excluded_point_error : std::domain_error {
    explicit excluded_point_error(const std::string& what) : std::domain_error(what) {}
};

/// Quartic model w^2 = Delta(x) attached to one case at fixed parameters.
/// The running variable is the case's own: m for C321/C421/C431, k (at d = 1)
/// for C322/C432.
struct QuarticModel {
    CaseId id;
    Rat p;  // fixed; unused for C421
    Rat m;  // fixed; used by C322/C432 only
    QPoly quartic;
};

// Ranks reported for the worked instances by external computer-algebra
// computations: recorded for reference only, nothing in this library asserts
// them. Positive rank is what makes the group law produce infinitely many
// family parameters.
inline constexpr int kReportedRank321AtP2 = 1;
inline constexpr int kReportedRank421 = 0;
inline constexpr int kReportedRank431AtP2 = 1;

inline Curve curve_321(const Rat& p) {
    Rat p2 = sq(p), p3 = pow_ui(p, 3), p4 = pow_ui(p, 4), p5 = pow_ui(p, 5), p6 = pow_ui(p, 6);
    Rat A = Rat(-27) * p2 *
            (p6 - Rat(12) * p5 + Rat(38) * p4 - Rat(36) * p3 + Rat(49) * p2 - Rat(24) * p +
             Rat(48));
    Rat B = Rat(54) * p4 * (p3 - Rat(6) * p2 + p - Rat(12)) *
            (p5 - Rat(12) * p4 + Rat(38) * p3 - Rat(36) * p2 + p - Rat(24));
    return Curve(A, B);
}

inline Curve curve_421() { return Curve(Rat(-675), Rat(13662)); }

inline Curve curve_431(const Rat& p) {
    Rat p2 = sq(p), p3 = pow_ui(p, 3), p4 = pow_ui(p, 4);
    Rat A = Rat(-27) * p2 * (Rat(12) * p4 - Rat(12) * p3 + Rat(25) * p2 - Rat(12) * p + Rat(12));
    Rat B = Rat(54) * p4 * (Rat(12) * p2 - p + Rat(12)) * (Rat(6) * p2 - p + Rat(6));
    return Curve(A, B);
}

namespace detail {

// Shared X-coordinates of the case C322 marked points.
inline Rat x1_322(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), p2 = sq(p), p3 = pow_ui(p, 3);
    Rat g = Rat(3) * m2 - Rat(2) * m + Rat(3);
    return Rat(3) * p *
           (sq(m2 - Rat(1)) * p3 - Rat(2) * (m2 - Rat(1)) * g * p2 + pow_ui(m + Rat(1), 4) * p -
            Rat(4) * (m2 - Rat(1)) * g);
}

inline Rat x2_322(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), p2 = sq(p), p3 = pow_ui(p, 3);
    Rat h = Rat(9) * m2 + Rat(2) * m + Rat(9);
    Rat g = Rat(3) * m2 + Rat(2) * m + Rat(3);
    return Rat(3) * p *
           (sq(m2 - Rat(1)) * p3 + Rat(2) * (m2 - Rat(1)) * h * p2 + pow_ui(m + Rat(1), 4) * p +
            Rat(4) * (m2 - Rat(1)) * g);
}

// Shared X-coordinates of the case C432 marked points.
inline Rat x1_432(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), p2 = sq(p);
    Rat g = Rat(3) * m2 - Rat(2) * m + Rat(3);
    return Rat(-12) * p *
           (Rat(2) * (m2 - Rat(1)) * g * p2 - pow_ui(m + Rat(1), 4) * p +
            Rat(2) * (m2 - Rat(1)) * g);
}

inline Rat x2_432(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), p2 = sq(p);
    Rat g = Rat(3) * m2 + Rat(2) * m + Rat(3);
    return Rat(12) * p *
           (Rat(2) * (m2 - Rat(1)) * g * p2 + pow_ui(m + Rat(1), 4) * p +
            Rat(2) * (m2 - Rat(1)) * g);
}

}  // namespace detail

inline Curve curve_322(const Rat& m, const Rat& p) {
    if (p != Rat(1) && m == (p + Rat(1)) / (p - Rat(1)))
        throw std::domain_error("curve_322: singular when m = (p+1)/(p-1)");
    Rat m2 = sq(m), m3 = pow_ui(m, 3), m4 = pow_ui(m, 4), m5 = pow_ui(m, 5), m6 = pow_ui(m, 6);
    Rat p2 = sq(p), p3 = pow_ui(p, 3), p4 = pow_ui(p, 4), p5 = pow_ui(p, 5), p6 = pow_ui(p, 6);
    Rat w1 = m2 - Rat(1);
    Rat g = Rat(3) * m2 - Rat(2) * m + Rat(3);
    Rat a4 = pow_ui(w1, 4) * p6 - Rat(4) * g * pow_ui(w1, 3) * p5 +
             Rat(2) * (Rat(19) * m4 - Rat(20) * m3 + Rat(50) * m2 - Rat(20) * m + Rat(19)) *
                 sq(w1) * p4 -
             Rat(4) * pow_ui(m + Rat(1), 3) * (m - Rat(1)) * sq(g) * p3 +
             sq(m + Rat(1)) *
                 (Rat(49) * m6 - Rat(90) * m5 + Rat(223) * m4 - Rat(300) * m3 + Rat(223) * m2 -
                  Rat(90) * m + Rat(49)) *
                 p2 -
             Rat(8) * pow_ui(m + Rat(1), 5) * (m - Rat(1)) * g * p +
             Rat(16) * (m2 + Rat(3)) * (Rat(3) * m2 + Rat(1)) * sq(w1);
    Rat a6 = (detail::x1_322(m, p) / (Rat(3) * p)) *
             (pow_ui(w1, 4) * p6 - Rat(4) * g * pow_ui(w1, 3) * p5 +
              Rat(2) * (Rat(19) * m4 - Rat(20) * m3 + Rat(50) * m2 - Rat(20) * m + Rat(19)) *
                  sq(w1) * p4 -
              Rat(4) * pow_ui(m + Rat(1), 3) * (m - Rat(1)) * sq(g) * p3 +
              sq(m + Rat(1)) *
                  (m6 + Rat(102) * m5 - Rat(113) * m4 + Rat(84) * m3 - Rat(113) * m2 +
                   Rat(102) * m + Rat(1)) *
                  p2 -
              Rat(8) * pow_ui(m + Rat(1), 5) * (m - Rat(1)) * g * p +
              Rat(32) * m * (Rat(3) * m2 + Rat(2) * m + Rat(3)) * sq(w1));
    return Curve(Rat(-27) * p2 * a4, Rat(54) * p3 * a6);
}

inline Curve curve_432(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), m3 = pow_ui(m, 3), m4 = pow_ui(m, 4), m5 = pow_ui(m, 5), m6 = pow_ui(m, 6);
    Rat p2 = sq(p), p3 = pow_ui(p, 3), p4 = pow_ui(p, 4);
    Rat w1 = m2 - Rat(1);
    Rat gm = Rat(3) * m2 - Rat(2) * m + Rat(3);
    Rat gp = Rat(3) * m2 + Rat(2) * m + Rat(3);
    Rat a4 = Rat(4) * (m2 + Rat(3)) * (Rat(3) * m2 + Rat(1)) * sq(w1) * p4 -
             Rat(4) * (m - Rat(1)) * gm * pow_ui(m + Rat(1), 5) * p3 +
             (Rat(25) * m6 - Rat(42) * m5 + Rat(119) * m4 - Rat(140) * m3 + Rat(119) * m2 -
              Rat(42) * m + Rat(25)) *
                 sq(m + Rat(1)) * p2 -
             Rat(4) * (m - Rat(1)) * gm * pow_ui(m + Rat(1), 5) * p +
             Rat(4) * (m2 + Rat(3)) * (Rat(3) * m2 + Rat(1)) * sq(w1);
    Rat a6 = (Rat(2) * w1 * gm * p2 - pow_ui(m + Rat(1), 4) * p + Rat(2) * w1 * gm) *
             (Rat(8) * m * gp * sq(w1) * p4 - Rat(4) * (m - Rat(1)) * gm * pow_ui(m + Rat(1), 5) * p3 +
              (m6 + Rat(54) * m5 - Rat(49) * m4 + Rat(52) * m3 - Rat(49) * m2 + Rat(54) * m +
               Rat(1)) *
                  sq(m + Rat(1)) * p2 -
              Rat(4) * (m - Rat(1)) * gm * pow_ui(m + Rat(1), 5) * p +
              Rat(8) * m * gp * sq(w1));
    return Curve(Rat(-432) * p2 * a4, Rat(-3456) * p3 * a6);
}

inline QuarticModel quartic_321(const Rat& p) {
    Rat p2 = sq(p), p3 = pow_ui(p, 3), p4 = pow_ui(p, 4);
    QPoly q = QPoly::from_descending({p2, Rat(-2) * p * (p2 - p + Rat(2)), p2 * (p2 + Rat(1)),
                                      Rat(-2) * p * (p3 - p2 - Rat(2)), p4});
    return QuarticModel{CaseId::C321, p, Rat(0), q};
}

inline QuarticModel quartic_322(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), m4 = pow_ui(m, 4), p2 = sq(p), p3 = pow_ui(p, 3);
    Rat w1 = m2 - Rat(1);
    Rat e = w1 * p + sq(m + Rat(1));  // (m^2-1)p + (m+1)^2
    QPoly q = QPoly::from_descending(
        {sq(m4 - Rat(1)), Rat(-2) * p * (m4 - Rat(1)) * e,
         p * (sq(w1) * p3 + Rat(2) * w1 * (Rat(3) * m2 + Rat(2) * m + Rat(3)) * p2 +
              pow_ui(m + Rat(1), 4) * p + Rat(8) * m * w1),
         Rat(-4) * p2 * (p2 + Rat(1)) * e, Rat(4) * p2 * sq(p2 + Rat(1))});
    return QuarticModel{CaseId::C322, p, m, q};
}

inline QuarticModel quartic_421() {
    QPoly q = QPoly::from_descending({Rat(1), Rat(-2), Rat(1), Rat(4), Rat(0)});
    return QuarticModel{CaseId::C421, Rat(0), Rat(0), q};
}

inline QuarticModel quartic_431(const Rat& p) {
    Rat p2 = sq(p);
    QPoly q = QPoly::from_descending({p2, Rat(-2) * p * (p2 - p + Rat(1)), p2,
                                      Rat(2) * p * (p2 + Rat(1)), Rat(0)});
    return QuarticModel{CaseId::C431, p, Rat(0), q};
}

inline QuarticModel quartic_432(const Rat& m, const Rat& p) {
    Rat m2 = sq(m), m4 = pow_ui(m, 4), p2 = sq(p);
    Rat w1 = m2 - Rat(1);
    QPoly q = QPoly::from_descending(
        {sq(m4 - Rat(1)), Rat(-4) * p * (m4 - Rat(1)) * sq(m + Rat(1)),
         Rat(4) * p * (Rat(4) * m * w1 * p2 + pow_ui(m + Rat(1), 4) * p + Rat(4) * m * w1),
         Rat(-16) * p2 * (p2 + Rat(1)) * sq(m + Rat(1)), Rat(16) * p2 * sq(p2 + Rat(1))});
    return QuarticModel{CaseId::C432, p, m, q};
}

inline Curve curve_of(const QuarticModel& model) {
    switch (model.id) {
        case CaseId::C321: return curve_321(model.p);
        case CaseId::C322: return curve_322(model.m, model.p);
        case CaseId::C421: return curve_421();
        case CaseId::C431: return curve_431(model.p);
        case CaseId::C432: return curve_432(model.m, model.p);
    }
    throw std::logic_error("curve_of: bad case");
}

/// The two rational points the construction marks on each curve: Q with
/// Y = 0 (2-torsion) and the generator-like point P.
struct MarkedPoints {
    CurvePoint Q;
    CurvePoint P;
};

inline MarkedPoints marked_points(const QuarticModel& model) {
    const Rat& p = model.p;
    const Rat& m = model.m;
    switch (model.id) {
        case CaseId::C321: {
            Rat p2 = sq(p), p3 = pow_ui(p, 3);
            return {CurvePoint(Rat(3) * p * (p3 - Rat(6) * p2 + p - Rat(12)), Rat(0)),
                    CurvePoint(Rat(3) * p2 * (p2 - Rat(6) * p + Rat(1)),
                               Rat(108) * p2 * (p + Rat(1)))};
        }
        case CaseId::C322: {
            Rat e = (sq(m) - Rat(1)) * p + sq(m + Rat(1));
            return {CurvePoint(detail::x1_322(m, p), Rat(0)),
                    CurvePoint(detail::x2_322(m, p),
                               Rat(216) * sq(p) * (sq(p) + Rat(1)) * (pow_ui(m, 4) - Rat(1)) * e)};
        }
        case CaseId::C421:
            return {CurvePoint(Rat(-33), Rat(0)), CurvePoint(Rat(3), Rat(108))};
        case CaseId::C431: {
            Rat p2 = sq(p);
            return {CurvePoint(Rat(-3) * p * (Rat(6) * p2 - p + Rat(6)), Rat(0)),
                    CurvePoint(Rat(-3) * p * (Rat(6) * p2 - Rat(25) * p + Rat(6)),
                               Rat(-216) * p2 * (p2 - Rat(3) * p + Rat(1)))};
        }
        case CaseId::C432:
            return {CurvePoint(detail::x1_432(m, p), Rat(0)),
                    CurvePoint(detail::x2_432(m, p),
                               Rat(864) * sq(p) * (sq(p) + Rat(1)) * (pow_ui(m, 4) - Rat(1)) *
                                   sq(m + Rat(1)))};
    }
    throw std::logic_error("marked_points: bad case");
}

/// Birational map from the quartic model onto its Weierstrass curve. The
/// input must satisfy w^2 = Delta(x) exactly; points over a vanishing
/// denominator are excluded.
inline CurvePoint phi(const QuarticModel& model, const Rat& x, const Rat& w) {
    if (sq(w) != model.quartic(x))
        throw std::domain_error("phi: (x, w) is not on the quartic model");
    const Rat& p = model.p;
    const Rat& m = model.m;
    switch (model.id) {
        case CaseId::C321: {
            if (x.is_zero())
                throw excluded_point_error("phi: m = 0 is excluded for this case");
            Rat p2 = sq(p), p3 = pow_ui(p, 3);
            Rat c1 = p3 - p2 - Rat(2);
            Rat X = Rat(3) * p *
                    (p * (p2 + Rat(1)) * sq(x) - Rat(6) * c1 * x + Rat(6) * p3 + Rat(6) * p * w) /
                    sq(x);
            Rat Ymw = Rat(54) * p *
                      (p2 * ((p2 - p + Rat(2)) * pow_ui(x, 3) - p * (p2 + Rat(1)) * sq(x) +
                             Rat(3) * c1 * x - Rat(2) * p3) +
                       (c1 * x - Rat(2) * p3) * w);
            return CurvePoint(X, -Ymw / pow_ui(x, 3));
        }
        case CaseId::C322: {
            if (x.is_zero())
                throw excluded_point_error("phi: k = 0 is excluded for this case");
            Rat m2 = sq(m), p2 = sq(p), p3 = pow_ui(p, 3);
            Rat w1 = m2 - Rat(1);
            Rat e = w1 * p + sq(m + Rat(1));
            Rat quadk = sq(w1) * p3 + Rat(2) * w1 * (Rat(3) * m2 + Rat(2) * m + Rat(3)) * p2 +
                        pow_ui(m + Rat(1), 4) * p + Rat(8) * m * w1;
            Rat Xkw = quadk * sq(x) - Rat(12) * p * (p2 + Rat(1)) * e * x +
                      Rat(24) * p * sq(p2 + Rat(1)) - Rat(12) * (p2 + Rat(1)) * w;
            Rat Ykw = (pow_ui(m, 4) - Rat(1)) * e * pow_ui(x, 3) - quadk * sq(x) +
                      Rat(6) * p * (p2 + Rat(1)) * e * x - Rat(8) * p * sq(p2 + Rat(1)) -
                      (e * x - Rat(4) * (p2 + Rat(1))) * w;
            // Y sign fixed by the round-trip requirement phi_inv(phi(k, w)) = k;
            // the reflected choice satisfies the curve equation but not the
            // printed inverse.
            return CurvePoint(Rat(3) * p * Xkw / sq(x),
                              Rat(108) * p2 * (p2 + Rat(1)) * Ykw / pow_ui(x, 3));
        }
        case CaseId::C421: {
            if (x == Rat(1))
                throw excluded_point_error("phi: m = 1 is excluded for this case");
            Rat d = x - Rat(1);
            Rat X = Rat(3) * (sq(x) + Rat(10) * x - Rat(12) * w + Rat(13)) / sq(d);
            Rat Y = Rat(-108) *
                    (pow_ui(x, 3) - Rat(2) * sq(x) + Rat(7) * x + Rat(2) - (x + Rat(3)) * w) /
                    pow_ui(d, 3);
            return CurvePoint(X, Y);
        }
        case CaseId::C431: {
            if (x == Rat(1))
                throw excluded_point_error("phi: m = 1 is excluded for this case");
            Rat p2 = sq(p);
            Rat d = x - Rat(1);
            Rat X = Rat(-3) * p *
                    (Rat(6) * (sq(x) - Rat(1)) * p2 -
                     p * (Rat(13) * sq(x) + Rat(10) * x + Rat(1)) + Rat(6) * (sq(x) - Rat(1)) +
                     Rat(12) * w) /
                    sq(d);
            Rat u = sq(x) + Rat(4) * x + Rat(1);
            Rat Ymw = p * (d * u * p2 - x * (x + Rat(1)) * (Rat(3) * x + Rat(1)) * p + d * u) -
                      (d * p2 - (Rat(3) * x + Rat(1)) * p + d) * w;
            return CurvePoint(X, Rat(108) * p * Ymw / pow_ui(d, 3));
        }
        case CaseId::C432: {
            if (x.is_zero())
                throw excluded_point_error("phi: k = 0 is excluded for this case");
            Rat m2 = sq(m), p2 = sq(p);
            Rat w1 = m2 - Rat(1);
            Rat quadk = Rat(4) * m * w1 * p2 + pow_ui(m + Rat(1), 4) * p + Rat(4) * m * w1;
            Rat Xkw = quadk * sq(x) - Rat(12) * p * (p2 + Rat(1)) * sq(m + Rat(1)) * x +
                      Rat(24) * p * sq(p2 + Rat(1)) - Rat(6) * (p2 + Rat(1)) * w;
            Rat Ykw = (pow_ui(m, 4) - Rat(1)) * sq(m + Rat(1)) * pow_ui(x, 3) -
                      Rat(2) * quadk * sq(x) + Rat(12) * p * (p2 + Rat(1)) * sq(m + Rat(1)) * x -
                      Rat(16) * p * sq(p2 + Rat(1)) -
                      (sq(m + Rat(1)) * x - Rat(4) * (p2 + Rat(1))) * w;
            return CurvePoint(Rat(12) * p * Xkw / sq(x),
                              Rat(432) * p2 * (p2 + Rat(1)) * Ykw / pow_ui(x, 3));
        }
    }
    throw std::logic_error("phi: bad case");
}

/// Inverse map back to the quartic parameter (m or k). Points over the
/// excluded divisor (a vanishing denominator) raise excluded_point_error.
inline Rat phi_inv(const QuarticModel& model, const CurvePoint& pt) {
    if (pt.is_infinity())
        throw excluded_point_error("phi_inv: point at infinity is excluded");
    const Rat& X = pt.x();
    const Rat& Y = pt.y();
    const Rat& p = model.p;
    const Rat& m = model.m;
    switch (model.id) {
        case CaseId::C321: {
            Rat p2 = sq(p), p3 = pow_ui(p, 3);
            Rat den = (X - Rat(3) * p2 * (p2 - Rat(6) * p + Rat(1))) *
                      (X - Rat(3) * p2 * (p2 + Rat(6) * p + Rat(1)));
            if (den.is_zero())
                throw excluded_point_error("phi_inv: point lies over the excluded divisor");
            Rat num = Rat(6) * p *
                      (Y * p - Rat(3) * (p3 - p2 - Rat(2)) * X +
                       Rat(9) * p2 *
                           (pow_ui(p, 5) - Rat(7) * pow_ui(p, 4) + Rat(7) * p3 - Rat(15) * p2 -
                            Rat(2)));
            return num / den;
        }
        case CaseId::C322: {
            Rat x1 = detail::x1_322(m, p), x2 = detail::x2_322(m, p);
            Rat den = (X - x1) * (X - x2);
            if (den.is_zero())
                throw excluded_point_error("phi_inv: point lies over the excluded divisor");
            Rat e = (sq(m) - Rat(1)) * p + sq(m + Rat(1));
            Rat kxy = Y + Rat(3) * p * e * (X - x1);
            return Rat(-12) * p * (sq(p) + Rat(1)) * kxy / den;
        }
        case CaseId::C421: {
            Rat den = (X + Rat(33)) * (X - Rat(39));
            if (den.is_zero())
                throw excluded_point_error("phi_inv: point lies over the excluded divisor");
            return (sq(X) + Rat(30) * X - Rat(99) - Rat(12) * Y) / den;
        }
        case CaseId::C431: {
            Rat p2 = sq(p);
            Rat f1 = X + Rat(3) * p * (Rat(6) * p2 - p + Rat(6));
            Rat f3 = X + Rat(3) * p * (Rat(6) * p2 - Rat(25) * p + Rat(6));
            Rat den = f1 * f3;
            if (den.is_zero())
                throw excluded_point_error("phi_inv: point lies over the excluded divisor");
            Rat f2 = X - Rat(3) * p * (Rat(6) * p2 - Rat(11) * p + Rat(6));
            return (f1 * f2 - Rat(12) * p * Y) / den;
        }
        case CaseId::C432: {
            Rat x1 = detail::x1_432(m, p), x2 = detail::x2_432(m, p);
            Rat den = (X - x1) * (X - x2);
            if (den.is_zero())
                throw excluded_point_error("phi_inv: point lies over the excluded divisor");
            Rat kxy = Y + Rat(6) * p * sq(m + Rat(1)) * (X - x1);
            return Rat(-24) * p * (sq(p) + Rat(1)) * kxy / den;
        }
    }
    throw std::logic_error("phi_inv: bad case");
}

// ---------------------------------------------------------------------------
// Fermat's square-making method on quartics: match the quartic against the
// square of a quadratic, equating all but two coefficients; the two leftover
// terms give a linear equation in x. When both end coefficients are squares
// the middle coefficient of the quadratic is free, which yields two more
// matchings per sign choice.

namespace detail {

inline void push_candidate(std::vector<Rat>& out, const QPoly& q, const Rat& x) {
    if (!is_rational_square(q(x)))
        return;
    for (const Rat& seen : out)
        if (seen == x)
            return;
    out.push_back(x);
}

}  // namespace detail

/// All parameters x found by the matching family, each verified to make q(x)
/// a rational square. Deterministic order: leading-coefficient branch,
/// constant-term branch, then the mixed matchings.
inline std::vector<Rat> fermat_square_candidates(const QPoly& q) {
    std::vector<Rat> out;
    Rat a4 = q.coeff(4), a3 = q.coeff(3), a2 = q.coeff(2), a1 = q.coeff(1), a0 = q.coeff(0);
    std::optional<Rat> e = a4.sign() > 0 ? rat_sqrt(a4) : std::nullopt;
    std::optional<Rat> f = a0.sign() > 0 ? rat_sqrt(a0) : std::nullopt;

    if (e && !e->is_zero()) {
        // (e x^2 + mu x + c)^2 with x^3 and x^2 matched
        Rat mu = a3 / (Rat(2) * *e);
        Rat c = (a2 - sq(mu)) / (Rat(2) * *e);
        Rat lin = a1 - Rat(2) * mu * c;
        Rat cst = a0 - sq(c);
        if (!lin.is_zero())
            detail::push_candidate(out, q, -cst / lin);
        else if (cst.is_zero())
            detail::push_candidate(out, q, Rat(0));  // q is already a perfect square
    }
    if (f && !f->is_zero()) {
        // (f + mu x + c x^2)^2 with x^1 and x^2 matched, residual divided by x^3
        Rat mu = a1 / (Rat(2) * *f);
        Rat c = (a2 - sq(mu)) / (Rat(2) * *f);
        Rat cub = a3 - Rat(2) * mu * c;
        Rat qua = a4 - sq(c);
        if (!qua.is_zero())
            detail::push_candidate(out, q, -cub / qua);
        else if (cub.is_zero())
            detail::push_candidate(out, q, Rat(0));
    }
    if (e && !e->is_zero() && f && !f->is_zero()) {
        for (const Rat& fs : {*f, -*f}) {
            // ends fixed, mu from the x^3 term; leftover x^2 and x^1 terms
            Rat mu = a3 / (Rat(2) * *e);
            Rat den = a2 - sq(mu) - Rat(2) * *e * fs;
            if (!den.is_zero())
                detail::push_candidate(out, q, (Rat(2) * fs * mu - a1) / den);
            // ends fixed, mu from the x^1 term; leftover x^2 and x^3 terms
            mu = a1 / (Rat(2) * fs);
            den = a3 - Rat(2) * mu * *e;
            if (!den.is_zero())
                detail::push_candidate(out, q, (sq(mu) + Rat(2) * *e * fs - a2) / den);
        }
    }
    return out;
}

/// First verified parameter in branch order, or absent when no matching
/// applies.
inline std::optional<Rat> fermat_square_point(const QPoly& q) {
    auto found = fermat_square_candidates(q);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

// ---------------------------------------------------------------------------
// Naive bounded-height point enumeration, the artifact's stand-in for rank
// machinery.

/// All affine points with X = u/v^2, |u| <= height, 1 <= v <= height,
/// gcd(u, v) = 1, Y recovered exactly. Deterministic order: v ascending, u
/// ascending, non-negative Y first.
inline std::vector<CurvePoint> naive_point_search(const Curve& c, long height) {
    if (height < 1)
        throw std::invalid_argument("naive_point_search: height must be >= 1");
    std::vector<CurvePoint> out;
    for (long v = 1; v <= height; ++v) {
        for (long u = -height; u <= height; ++u) {
            if (std::gcd(u < 0 ? -u : u, v) != 1)
                continue;
            Rat x(u, v * v);
            Rat rhs = pow_ui(x, 3) + c.A * x + c.B;
            if (rhs.sign() < 0)
                continue;
            auto y = rat_sqrt(rhs);
            if (!y)
                continue;
            out.emplace_back(x, *y);
            if (!y->is_zero())
                out.emplace_back(x, -*y);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The two genus-2 curves of the rhombus reductions; membership check only.

/// Exact check of w^2 = (m^3+11m^2-5m+1)(m^3-5m^2+11m+1) (variant 1) or
/// w^2 = (m^3-2m^2+2)(m^3+2m^2-2) (variant 2).
inline bool genus2_membership(int variant, const Rat& m, const Rat& w) {
    Rat m2 = sq(m), m3 = pow_ui(m, 3);
    Rat rhs(0);
    if (variant == 1)
        rhs = (m3 + Rat(11) * m2 - Rat(5) * m + Rat(1)) *
              (m3 - Rat(5) * m2 + Rat(11) * m + Rat(1));
    else if (variant == 2)
        rhs = (m3 - Rat(2) * m2 + Rat(2)) * (m3 + Rat(2) * m2 - Rat(2));
    else
        throw std::invalid_argument("genus2_membership: variant must be 1 or 2");
    return sq(w) == rhs;
}

}  // namespace equimetric
