#include <gtest/gtest.h>

#include "generators.hpp"

using namespace syslat;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

ZPoly poly(std::vector<BigInt> c) { return ZPoly(std::move(c)); }

} // namespace

TEST(ZPoly, GcdAndExactDivision) {
    // (t - 1)(t + 2) and (t - 1)(t + 3).
    const ZPoly a = poly({-2, 1, 1});
    const ZPoly b = poly({-3, 2, 1});
    EXPECT_EQ(primitive_gcd(a, b), poly({-1, 1}));
    EXPECT_EQ(divexact(a, poly({-1, 1})), poly({2, 1}));
    expect_error(ErrorCode::InvalidArgument, [&] { divexact(poly({1, 0, 1}), poly({-1, 1})); });
}

TEST(ZPoly, SquareRoot) {
    const ZPoly p = poly({1, 2, 1});
    EXPECT_EQ(poly_sqrt(p), poly({1, 1}));
    EXPECT_FALSE(poly_sqrt(poly({1, 0, 1})).has_value());
    gen::Rng rng(10);
    for (int i = 0; i < 50; ++i) {
        const ZPoly q = rng.nonzero_poly(4);
        const auto r = poly_sqrt(q * q);
        ASSERT_TRUE(r.has_value());
        EXPECT_TRUE(*r == q || *r == -q);
    }
}

TEST(RatFunc, CanonicalForm) {
    // (2t^2 - 2) / (4t - 4) = (t + 1) / 2.
    const RatFunc r(poly({-2, 0, 2}), poly({-4, 4}));
    EXPECT_EQ(r, RatFunc(make_rational(1, 2)) * RatFunc(poly({1, 1})));
    EXPECT_EQ(r.den(), ZPoly(1));
    EXPECT_EQ(r.num(), poly({1, 1}));
    EXPECT_EQ(r.content(), make_rational(1, 2));
}

TEST(RatFunc, EqualValuesHaveEqualRepresentations) {
    gen::Rng rng(11);
    for (int i = 0; i < 80; ++i) {
        const RatFunc x = rng.ratfunc(), y = rng.nonzero_ratfunc();
        const RatFunc lhs = (x * y) / y;
        EXPECT_EQ(lhs, x);
        EXPECT_EQ(lhs.num(), x.num());
        EXPECT_EQ(lhs.den(), x.den());
        // Numerator and denominator are primitive and coprime, denominator has positive leading coefficient.
        if (!x.is_zero()) {
            EXPECT_EQ(primitive_gcd(x.num(), x.den()), ZPoly(1));
            EXPECT_GT(sgn(x.den().lc()), 0);
            EXPECT_EQ(x.num().content(), 1);
            EXPECT_EQ(x.den().content(), 1);
        }
    }
}

TEST(RatFunc, FieldAxioms) {
    gen::Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        const RatFunc x = rng.ratfunc(), y = rng.ratfunc(), z = rng.ratfunc();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x - x, RatFunc());
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), RatFunc(1));
    }
}

TEST(RatFunc, EvaluationIsAHomomorphism) {
    gen::Rng rng(13);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const RatFunc x = rng.ratfunc(), y = rng.ratfunc();
        const BigRational t0 = rng.rational(7);
        try {
            EXPECT_EQ((x * y).eval(t0), x.eval(t0) * y.eval(t0));
            EXPECT_EQ((x + y).eval(t0), x.eval(t0) + y.eval(t0));
            ++checked;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::PoleAtSpecialization);
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(RatFunc, PoleIsReported) {
    const RatFunc r(ZPoly(1), poly({-2, 1}));
    expect_error(ErrorCode::PoleAtSpecialization, [&] { r.eval(2); });
    EXPECT_EQ(r.eval(3), 1);
}

TEST(RatFunc, SquareRoot) {
    const RatFunc x = RatFunc(make_rational(4, 9)) * RatFunc(poly({-1, 0, 1}), poly({2, 0, 1}));
    const auto r = ratfunc_sqrt(x * x);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, x * x);
    EXPECT_FALSE(ratfunc_sqrt(RatFunc(poly({-1, 0, 1}))).has_value());
}

TEST(Tower, GeneratorsSquareToRadicands) {
    const TowerElem s = tower::s(), w = tower::w(), t = tower::t();
    EXPECT_EQ(s * s, t * t - TowerElem(1));
    EXPECT_EQ(w * w, t * t + TowerElem(2));
    EXPECT_EQ(tau_s(s), -s);
    EXPECT_EQ(tau_s(w), w);
}

TEST(Tower, ParsedExpressions) {
    EXPECT_EQ(parse_tower_expr("s^2"), parse_tower_expr("t^2 - 1"));
    EXPECT_EQ(parse_tower_expr("(s*w)^2"), parse_tower_expr("(t^2-1)*(t^2+2)"));
    EXPECT_EQ(parse_tower_expr("-2*t/(1 - t)"), parse_tower_expr("2*t/(t-1)"));
    expect_error(ErrorCode::ParseError, [] { parse_tower_expr("t +"); });
    expect_error(ErrorCode::ParseError, [] { parse_tower_expr("x"); });
}

TEST(Tower, InverseIsExact) {
    gen::Rng rng(14);
    for (int i = 0; i < 25; ++i) {
        const TowerElem x = rng.nonzero_tower();
        EXPECT_EQ(x * tower_inverse(x), TowerElem(1));
    }
    expect_error(ErrorCode::DivisionByZero, [] { tower_inverse(TowerElem()); });
}

TEST(Tower, RingAxiomsAndInvolution) {
    gen::Rng rng(15);
    for (int i = 0; i < 25; ++i) {
        const TowerElem x = rng.tower(), y = rng.tower(), z = rng.tower();
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(tau_s(x * y), tau_s(x) * tau_s(y));
        EXPECT_EQ(tau_s(tau_s(x)), x);
        // x * tau_s(x) has no s component.
        const TowerElem n = x * tau_s(x);
        EXPECT_TRUE(is_zero(n.c10()));
        EXPECT_TRUE(is_zero(n.c11()));
    }
}

TEST(Specialize, PellPointExamples) {
    // t = 2, y = 1, d = 3: s -> sqrt 3.
    const auto spec = Specialization::pell(2, 1, 3);
    EXPECT_EQ(specialize(tower::s(), spec), QuadElem(0, 1, 3));
    EXPECT_EQ(specialize(parse_tower_expr("t + s"), spec), QuadElem(2, 1, 3));
    expect_error(ErrorCode::MissingRadicalValue, [&] { specialize(tower::w(), spec); });
    expect_error(ErrorCode::InvalidSpecialization, [] { Specialization::pell(2, 2, 3); });
    const RatFunc pole(ZPoly(1), poly({-2, 1}));
    expect_error(ErrorCode::PoleAtSpecialization, [&] { specialize(TowerElem(pole), spec); });
}

TEST(Specialize, IsARingHomomorphismAtPellPoints) {
    gen::Rng rng(16);
    struct Point {
        long t, y;
        std::int64_t d;
    };
    int checked = 0;
    for (const Point& pt : {Point{2, 1, 3}, Point{7, 4, 3}, Point{9, 4, 5}, Point{3, 2, 2}}) {
        const auto spec = Specialization::pell(pt.t, pt.y, pt.d);
        for (int i = 0; i < 20; ++i) {
            TowerElem x = rng.tower(), y = rng.tower();
            x = TowerElem(x.c00(), x.c10(), RatFunc(), RatFunc());
            y = TowerElem(y.c00(), y.c10(), RatFunc(), RatFunc());
            try {
                EXPECT_EQ(specialize(x * y, spec), specialize(x, spec) * specialize(y, spec));
                EXPECT_EQ(specialize(x + y, spec), specialize(x, spec) + specialize(y, spec));
                EXPECT_EQ(specialize(tau_s(x), spec), tau(specialize(x, spec)));
                ++checked;
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::PoleAtSpecialization);
            }
        }
    }
    EXPECT_GT(checked, 40);
}

TEST(Specialize, BiquadraticAtTwo) {
    gen::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        const TowerElem x = rng.tower(), y = rng.tower();
        try {
            EXPECT_EQ(specialize_biquadratic(x * y, 2), specialize_biquadratic(x, 2) * specialize_biquadratic(y, 2));
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::PoleAtSpecialization);
        }
    }
}

TEST(Specialize, GaussianAtZero) {
    EXPECT_EQ(specialize_gaussian(parse_tower_expr("3 + 2*s"), 0), GaussianInt(3, 2));
    expect_error(ErrorCode::InvalidSpecialization, [] { specialize_gaussian(tower::s(), 1); });
    expect_error(ErrorCode::InvalidSpecialization, [] { specialize_gaussian(tower::w(), 0); });
}
