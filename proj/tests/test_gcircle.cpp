#include <random>

#include <gtest/gtest.h>

#include "zdgeom/gcircle.hpp"

using namespace zdgeom;

namespace {

ZdScalar E(std::int64_t n, std::int64_t d = 1) { return ZdScalar::exact(n, d); }
ZdScalar F(double v) { return ZdScalar::floating(v); }

GCircle unit() { return GCircle::exact(1, 0, 0, -1); }

// Random exact curve: center (h, k) with rational coordinates and radius r,
// scaled by a nonzero rational, or a random line.
GCircle random_exact_curve(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-12, 12), den(1, 6), pick(0, 3);
    const ZdScalar h = E(num(rng), den(rng)), k = E(num(rng), den(rng));
    const ZdScalar r = E(std::abs(num(rng)), den(rng));
    ZdScalar lambda = E(num(rng), den(rng));
    if (lambda.is_zero())
        lambda = E(1);
    switch (pick(rng)) {
    case 0: { // line
        ZdScalar g = E(num(rng), den(rng)), f = E(num(rng), den(rng));
        if (g.is_zero() && f.is_zero())
            g = E(1);
        return GCircle(E(0), g, f, E(num(rng), den(rng)));
    }
    default: // circle (h,k,r) -> (1, -h, -k, h^2+k^2-r^2), possibly a point
        return GCircle(lambda, -h * lambda, -k * lambda, (h * h + k * k - r * r) * lambda);
    }
}

} // namespace

TEST(GCircle, RejectsAllZeroAndMixedModes) {
    EXPECT_THROW(GCircle::exact(0, 0, 0, 0), error);
    EXPECT_THROW(GCircle(E(1), F(0.0), E(0), E(-1)), error);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(unit()), CurveKind::ProperCircle);
    // y-axis from the degenerate second arrangement with b = 1: (0, -2, 0, 0).
    EXPECT_EQ(classify(GCircle::exact(0, -2, 0, 0)), CurveKind::Line);
    // x^2 + (y - 2b)^2 = 0 with b = 1.
    EXPECT_EQ(classify(GCircle::exact(1, 0, -2, 4)), CurveKind::PointCircle);
    EXPECT_EQ(classify(GCircle::exact(1, 0, 0, 1)), CurveKind::EmptyCurve);
    EXPECT_EQ(classify(GCircle::exact(0, 0, 0, 3)), CurveKind::EmptyCurve);
    // Irrational y-axis coefficient, still exact.
    EXPECT_EQ(classify(GCircle(E(0), -2 * zd_sqrt(E(2)), E(0), E(0))), CurveKind::Line);
}

TEST(Classify, FloatToleranceIsRelative) {
    EXPECT_EQ(classify(GCircle::floating(1, 0, -2, 4 + 1e-13)), CurveKind::PointCircle);
    EXPECT_EQ(classify(GCircle::floating(1, 0, -2, 4 + 1e-9)), CurveKind::EmptyCurve);
    EXPECT_EQ(classify(GCircle::floating(1, 0, -2, 4 - 1e-9)), CurveKind::ProperCircle);
    // Bound scales with g^2 + f^2 = 1e8.
    EXPECT_EQ(classify(GCircle::floating(1, 0, -1e4, 1e8 + 1e-5)), CurveKind::PointCircle);
}

TEST(Radius, Examples) {
    EXPECT_EQ(radius(GCircle::exact(0, 1, 0, 0)), E(0));
    EXPECT_EQ(radius(unit()), E(1));
    EXPECT_EQ(radius(GCircle::exact(2, 0, 0, -2)), E(1));
    EXPECT_EQ(radius(GCircle::exact(4, 0, 0, -2)), zd_sqrt(E(1, 2)));
    EXPECT_EQ(radius(GCircle::floating(1, 0, -2, 4 + 1e-13)), F(0.0));
}

TEST(Radius, EmptyCurveIsAnError) {
    try {
        (void)radius(GCircle::exact(1, 0, 0, 1));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::empty_curve);
    }
    EXPECT_THROW((void)center(GCircle::exact(1, 0, 0, 1)), error);
}

TEST(Center, Examples) {
    const ZdScalar b = E(5, 2);
    EXPECT_EQ(center(GCircle(E(1), E(0), -b, E(0))), Point(E(0), b));
    EXPECT_EQ(center(GCircle::exact(0, 1, 0, 0)), Point(E(0), E(0)));
    // alpha with a = b = 1: (1, -2 sqrt(ab), -a, 4ab).
    EXPECT_EQ(center(GCircle::exact(1, -2, -1, 4)), Point(E(2), E(1)));
}

TEST(EvalAt, Examples) {
    EXPECT_EQ(eval_at(unit(), Point(E(1), E(0))), E(0));
    EXPECT_EQ(eval_at(unit(), Point(E(0), E(0))), E(-1));
    // Line t: y = 2b, i.e. 2y - 4b = 0, with b = 3.
    const ZdScalar b = E(3);
    EXPECT_EQ(eval_at(GCircle(E(0), E(0), E(1), -4 * b), Point(E(5), 2 * b)), E(0));
}

TEST(Scale, Examples) {
    const GCircle k = scale(unit(), E(3));
    EXPECT_EQ(k, GCircle::exact(3, 0, 0, -3));
    EXPECT_EQ(radius(k), E(1));
    EXPECT_EQ(scale(GCircle::exact(0, 1, 0, 0), E(-2)), GCircle::exact(0, -2, 0, 0));
    EXPECT_EQ(classify(scale(GCircle::exact(0, 1, 0, 0), E(-2))), CurveKind::Line);
    const GCircle beta(E(1), E(0), E(-7, 3), E(0));
    EXPECT_EQ(scale(beta, E(1)), beta);
    EXPECT_THROW((void)scale(unit(), E(0)), error);
}

TEST(Tangency, Examples) {
    const GCircle beta = GCircle::exact(1, 0, -1, 0);
    const GCircle s = GCircle::exact(0, 0, 1, 0);
    EXPECT_EQ(tangency(beta, s, 1e-9), TangencyKind::LineTangent);
    EXPECT_EQ(tangency(GCircle::exact(1, -2, -1, 4), beta, 1e-9), TangencyKind::ExternalTangent);
    EXPECT_EQ(tangency(unit(), GCircle::exact(1, 0, 0, -4), 1e-9), TangencyKind::NotTangent);
}

TEST(Tangency, OtherRelations) {
    // Radius 1 at origin inside radius 2 centered at (1, 0).
    EXPECT_EQ(tangency(unit(), GCircle::exact(1, -1, 0, -3), 0.0), TangencyKind::InternalTangent);
    EXPECT_EQ(tangency(GCircle::exact(0, 1, 0, 0), GCircle::exact(0, 0, 1, 0), 1.0), TangencyKind::NotTangent);
    // Point (0, 2) on the line y = 2 and off the line y = 3.
    const GCircle pt = GCircle::exact(1, 0, -2, 4);
    EXPECT_EQ(tangency(pt, GCircle::exact(0, 0, 1, -4), 0.0), TangencyKind::LineTangent);
    EXPECT_EQ(tangency(pt, GCircle::exact(0, 0, 1, -6), 0.5), TangencyKind::NotTangent);
    // Point on the unit circle.
    EXPECT_EQ(tangency(GCircle::exact(1, -1, 0, 1), unit(), 0.0), TangencyKind::ExternalTangent);
    // The y-axis runs through beta's center (orthogonal, not tangent); it touches
    // the unit circle centered at (1, 0).
    EXPECT_EQ(tangency(GCircle::exact(0, -2, 0, 0), GCircle::exact(1, 0, -1, 0), 0.0), TangencyKind::NotTangent);
    EXPECT_EQ(tangency(GCircle::exact(0, -2, 0, 0), GCircle::exact(1, -1, 0, 0), 0.0), TangencyKind::LineTangent);
    EXPECT_THROW((void)tangency(unit(), GCircle::exact(1, 0, 0, 1), 0.0), error);
    EXPECT_THROW((void)tangency(unit(), unit(), -1.0), error);
}

TEST(Tangency, ExactFallsBackToFloatOutsideOneQuadraticField) {
    // Radii sqrt(2) and sqrt(3), centers 5 apart: d - (r1 + r2) mixes radicands.
    const GCircle c1(E(1), E(0), E(0), E(-2));
    const GCircle c2(E(1), E(-5), E(0), E(22));
    EXPECT_EQ(tangency(c1, c2, 1e-9), TangencyKind::NotTangent);
    EXPECT_EQ(tangency(c1, c2, 2.0), TangencyKind::ExternalTangent);
}

TEST(GCircleProperties, ScalingInvariance) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 5);
    for (int i = 0; i < 2000; ++i) {
        const GCircle k = random_exact_curve(rng);
        ZdScalar lambda = E(num(rng), den(rng));
        if (lambda.is_zero())
            lambda = E(-3, 2);
        const GCircle scaled = scale(k, lambda);
        ASSERT_EQ(classify(scaled), classify(k)) << k;
        if (classify(k) == CurveKind::EmptyCurve)
            continue;
        EXPECT_EQ(radius(scaled), radius(k)) << k;
        EXPECT_EQ(center(scaled), center(k)) << k;
    }
}

TEST(GCircleProperties, RadiusZeroExactlyForPointsAndLines) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const GCircle k = random_exact_curve(rng);
        const CurveKind kind = classify(k);
        if (kind == CurveKind::EmptyCurve)
            continue;
        EXPECT_EQ(radius(k).is_zero(), kind == CurveKind::PointCircle || kind == CurveKind::Line) << k;
    }
}

TEST(GCircleProperties, CenterPlusRadiusLiesOnCurve) {
    std::mt19937_64 rng(9);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const GCircle k = random_exact_curve(rng);
        if (classify(k) != CurveKind::ProperCircle)
            continue;
        const Point p = center(k);
        EXPECT_EQ(eval_at(k, Point(p.x + radius(k), p.y)), E(0)) << k;
        ++checked;
    }
    EXPECT_GT(checked, 500);
}

TEST(GCircleProperties, TangencyIsSymmetric) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1500; ++i) {
        const GCircle a = random_exact_curve(rng), b = random_exact_curve(rng);
        if (classify(a) == CurveKind::EmptyCurve || classify(b) == CurveKind::EmptyCurve)
            continue;
        for (double tol : {0.0, 1e-9, 0.25})
            EXPECT_EQ(tangency(a, b, tol), tangency(b, a, tol)) << a << " " << b;
    }
}

TEST(GCircleProperties, LineRadiusIsExactlyZeroInBothModes) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        double g = u(rng), f = u(rng);
        if (g == 0.0 && f == 0.0)
            g = 1.0;
        const GCircle lf = GCircle::floating(0, g, f, u(rng));
        EXPECT_EQ(radius(lf).to_double(), 0.0);
        const GCircle le(E(0), ZdScalar::from_double(g, Mode::Exact), ZdScalar::from_double(f, Mode::Exact),
                         ZdScalar::from_double(u(rng), Mode::Exact));
        EXPECT_TRUE(radius(le).is_zero());
    }
}

TEST(SameCurve, ProportionalQuadruples) {
    EXPECT_TRUE(same_curve(GCircle::exact(0, 0, -1, 4), GCircle::exact(0, 0, 1, -4)));
    EXPECT_TRUE(same_curve(GCircle(E(0), -2 * zd_sqrt(E(2)), E(0), E(0)), GCircle::exact(0, 1, 0, 0)));
    EXPECT_FALSE(same_curve(GCircle::exact(0, 0, 1, -4), GCircle::exact(0, 0, 1, -2)));
}
