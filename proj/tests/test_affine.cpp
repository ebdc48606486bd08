#include "equimetric/affine.hpp"

#include "helpers.hpp"

#include <catch2/catch.hpp>

using namespace equimetric;

namespace {

Triangle right345() { return Triangle(Rat(4), Rat(0), Rat(3)); }

}  // namespace

TEST_CASE("identity transform fixes every triangle") {
    Triangle tri(Q("7/2"), Rat(0), Q("33/16"));
    REQUIRE(apply(identity_transform(), tri) == tri);
}

TEST_CASE("apply scales area by the determinant") {
    RatGen gen(0x5eed07);
    for (int i = 0; i < 50; ++i) {
        Rat a = gen.positive(20), b = gen.any(20), alpha = gen.positive(10);
        bool halved = gen.integer(0, 1) == 1;
        TransformMatrix f(a, b, alpha, halved);
        Triangle tri(gen.positive(20), gen.positive(20), gen.positive(20));
        auto image = try_apply(f, tri);
        if (!image) continue;
        REQUIRE(image->area() == f.det() * tri.area());
    }
}

TEST_CASE("the mirror transform (1, (r-2s)/t) preserves sides") {
    Triangle tri(Rat(14), Rat(5), Rat(12));  // the 13-14-15 Heron triangle
    TransformMatrix f(Rat(1), (tri.r - Rat(2) * tri.s) / tri.t);
    Triangle image = apply(f, tri);
    REQUIRE(sides(image) == sides(tri));
    REQUIRE(perimeter(image) == perimeter(tri));
}

TEST_CASE("composition follows the (a1 a2, b2/a1 + a2 b1) rule") {
    RatGen gen(0x5eed08);
    for (int i = 0; i < 40; ++i) {
        Rat a1 = gen.positive(15), b1 = gen.any(15);
        Rat a2 = gen.positive(15), b2 = gen.any(15);
        TransformMatrix f(a1, b1), g(a2, b2);
        TransformMatrix fg = compose(f, g);
        REQUIRE(fg.a == a1 * a2);
        REQUIRE(fg.b == b2 / a1 + a2 * b1);
        REQUIRE(fg.alpha == Rat(1));

        Triangle tri(gen.positive(10), gen.positive(10), gen.positive(10));
        auto inner = try_apply(g, tri);
        if (!inner) continue;
        auto lhs = try_apply(fg, tri);
        auto rhs = try_apply(f, *inner);
        REQUIRE(lhs.has_value() == rhs.has_value());
        if (lhs && rhs)
            REQUIRE(*lhs == *rhs);
    }
}

TEST_CASE("invert") {
    TransformMatrix f(Rat(2), Rat(3));
    TransformMatrix g = invert(f);
    REQUIRE(g.a == Q("1/2"));
    REQUIRE(g.b == Rat(-3));
    REQUIRE(compose(f, g).is_identity());
    REQUIRE(compose(g, f).is_identity());
}

TEST_CASE("group axioms on the alpha=1 subset") {
    RatGen gen(0x5eed09);
    for (int i = 0; i < 30; ++i) {
        TransformMatrix f(gen.positive(12), gen.any(12));
        TransformMatrix g(gen.positive(12), gen.any(12));
        TransformMatrix h(gen.positive(12), gen.any(12));
        REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
        REQUIRE(compose(f, invert(f)).is_identity());
        REQUIRE(compose(identity_transform(), f) == f);
        REQUIRE(compose(f, identity_transform()) == f);
    }
}

TEST_CASE("residuals vanish for the trivial solution (a,b) = (1,0)") {
    auto tuple = try_make_solution(DioSystem::Eq2, Rat(1), Rat(0), Rat(4), Rat(0), Rat(3));
    REQUIRE(tuple.has_value());
    REQUIRE(verify_solution(*tuple));
    REQUIRE(tuple->w[0] == Rat(3));
    REQUIRE(tuple->w[1] == Rat(5));
    REQUIRE(tuple->w[2] == Rat(3));
    REQUIRE(tuple->w[3] == Rat(5));
}

TEST_CASE("residuals flag a non-solution: (a,b) = (2,0) on the (3,4,5) placement") {
    SolutionTuple c;
    c.system = DioSystem::Eq2;
    c.a = Rat(2); c.b = Rat(0);
    c.r = Rat(4); c.s = Rat(0); c.t = Rat(3);
    c.w = {Rat(3), Rat(5), Rat(6), Rat(6)};
    auto res = residuals(c);
    REQUIRE(res.size() == 5);
    REQUIRE(res[0].is_zero());
    REQUIRE(res[1].is_zero());
    REQUIRE(res[2].is_zero());
    REQUIRE(!res[3].is_zero());   // (s-r)/a square fails: 40 != 36
    REQUIRE(!res[4].is_zero());   // perimeter equation off by 2
    REQUIRE(!verify_solution(c));
}

TEST_CASE("Eq2 tuple from the F321 base instance verifies") {
    auto tuple = try_make_solution(DioSystem::Eq2, Q("8/5"), Q("6/5"), Q("7/2"), Rat(0),
                                   Q("33/16"));
    REQUIRE(tuple.has_value());
    REQUIRE(verify_solution(*tuple));
    REQUIRE(tuple->w[0] == Q("33/16"));
    REQUIRE(tuple->w[1] == Q("65/16"));
    REQUIRE(tuple->w[2] == Q("33/8"));
    REQUIRE(tuple->w[3] == Q("53/16"));
}

TEST_CASE("derive_transform recovers the F321 base matrix") {
    Triangle t1(Q("7/2"), Rat(0), Q("33/16"));
    TransformMatrix expected(Q("8/5"), Q("6/5"));
    Triangle t2 = apply(expected, t1);
    auto f = derive_transform(t1, t2);
    REQUIRE(f.has_value());
    REQUIRE(*f == expected);
}

TEST_CASE("derive_transform on identical triangles is the identity") {
    Triangle tri(Rat(14), Rat(5), Rat(12));
    auto f = derive_transform(tri, tri);
    REQUIRE(f.has_value());
    REQUIRE(f->is_identity());
}

TEST_CASE("derive_transform demands equal areas, and equal area does not imply weak equivalence") {
    REQUIRE_THROWS_AS(derive_transform(right345(), Triangle(Rat(12), Rat(0), Rat(5))),
                      std::domain_error);
    // (7,24,25) and (13,14,15) share area 84 but not perimeter
    Triangle t1(Rat(24), Rat(0), Rat(7));
    Triangle t2(Rat(14), Rat(5), Rat(12));
    REQUIRE(t1.area() == t2.area());
    auto f = derive_transform(t1, t2);
    REQUIRE(f.has_value());
    REQUIRE(apply(*f, t1) == t2);
    REQUIRE(!weakly_equivalent(*sides(t1), *sides(t2)));
}

TEST_CASE("homogeneity_scale preserves residual-zero") {
    RatGen gen(0x5eed0a);
    auto base = try_make_solution(DioSystem::Eq2, Q("8/5"), Q("6/5"), Q("7/2"), Rat(0),
                                  Q("33/16"));
    REQUIRE(base.has_value());
    for (int i = 0; i < 20; ++i) {
        Rat k = gen.positive(30);
        SolutionTuple scaled = homogeneity_scale(*base, k);
        REQUIRE(verify_solution(scaled));
    }
    REQUIRE(homogeneity_scale(*base, Rat(1)).r == base->r);
    REQUIRE_THROWS_AS(homogeneity_scale(*base, Rat(0)), std::domain_error);
    REQUIRE_THROWS_AS(homogeneity_scale(*base, Rat(-2)), std::domain_error);

    // the integer right/isosceles instance carries the normalization k = 121;
    // dividing it back out keeps the tuple a solution
    auto hm = try_make_solution(DioSystem::Eq2, Q("8/3"), Q("22/45"), Rat(352), Rat(0),
                                Rat(135));
    REQUIRE(hm.has_value());
    REQUIRE(verify_solution(homogeneity_scale(*hm, Q("1/121"))));
}

TEST_CASE("proportional residuals specialize to Eq2/Eq4_1 at alpha = beta = 1") {
    RatGen gen(0x5eed0b);
    for (int i = 0; i < 60; ++i) {
        SolutionTuple c;
        c.a = gen.positive(15);
        c.b = gen.any(15);
        c.r = gen.positive(15);
        c.s = gen.positive(15);
        c.t = gen.positive(15);
        c.w = {gen.any(15), gen.any(15), gen.any(15), gen.any(15)};
        c.system = DioSystem::Eq2;
        auto eq2 = residuals(c);
        c.system = DioSystem::Eq5_1;
        REQUIRE(residuals(c) == eq2);
        c.system = DioSystem::Eq4_1;
        auto eq41 = residuals(c);
        REQUIRE(eq41.size() == 4);
        c.system = DioSystem::Eq5_2;
        REQUIRE(residuals(c) == eq41);
    }
}

TEST_CASE("transform_chain") {
    Triangle t1(Q("7/2"), Rat(0), Q("33/16"));
    Triangle t2 = apply(TransformMatrix(Q("8/5"), Q("6/5")), t1);
    SECTION("single triangle gives no links") {
        std::vector<Triangle> chain{t1};
        REQUIRE(transform_chain(chain).empty());
    }
    SECTION("two-element chain equals derive_transform") {
        std::vector<Triangle> chain{t1, t2};
        auto links = transform_chain(chain);
        REQUIRE(links.size() == 1);
        REQUIRE(links[0] == TransformMatrix(Q("8/5"), Q("6/5")));
    }
    SECTION("three-element chain composes back to the start") {
        // mirror of t1 stays in placement because t1 has s = 0
        Triangle t0 = apply(TransformMatrix(Rat(1), (t1.r - Rat(2) * t1.s) / t1.t), t1);
        std::vector<Triangle> chain{t0, t1, t2};
        auto links = transform_chain(chain);
        REQUIRE(links.size() == 2);
        REQUIRE(apply(compose(links[1], links[0]), t0) == t2);
        REQUIRE(weakly_equivalent(*sides(t0), *sides(t2)));
    }
    SECTION("area mismatch names the failing index") {
        std::vector<Triangle> chain{t1, Triangle(Rat(1), Rat(0), Rat(1))};
        REQUIRE_THROWS_WITH(transform_chain(chain), Catch::Contains("index 0"));
    }
}

TEST_CASE("transform_chain across three genuinely equivalent Heron placements") {
    // placements of (24,37,37), (25,34,39), (29,29,40): perimeter 98, area 420
    Triangle t1(Rat(24), Rat(12), Rat(35));
    Triangle t2(Rat(25), Q("26/5"), Q("168/5"));
    Triangle t3(Rat(40), Rat(20), Rat(21));
    REQUIRE(t1.area() == Rat(420));
    REQUIRE(t2.area() == Rat(420));
    REQUIRE(t3.area() == Rat(420));
    REQUIRE(weakly_equivalent(*sides(t1), *sides(t2)));
    REQUIRE(weakly_equivalent(*sides(t2), *sides(t3)));

    std::vector<Triangle> chain{t1, t2, t3};
    auto links = transform_chain(chain);
    REQUIRE(links.size() == 2);
    REQUIRE(apply(links[0], t1) == t2);
    REQUIRE(apply(links[1], t2) == t3);
    REQUIRE(apply(compose(links[1], links[0]), t1) == t3);
    // each link witnesses a weak metric transformation: the matching tuple solves the system
    for (size_t i = 0; i < links.size(); ++i) {
        const Triangle& src = chain[i];
        auto tuple = try_make_solution(DioSystem::Eq2, links[i].a, links[i].b, src.r, src.s,
                                       src.t);
        REQUIRE(tuple.has_value());
        REQUIRE(verify_solution(*tuple));
    }
}
