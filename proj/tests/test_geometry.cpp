#include "linefan/geometry.hpp"
#include "linefan/parse.hpp"
#include "linefan/rng.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

ProjPoint e(int k) {
    std::vector<Scalar> c(5, Scalar(0));
    c[static_cast<std::size_t>(k)] = Scalar(1);
    return ProjPoint(c);
}

ProjPoint random_point(Lcg& rng) {
    std::vector<Scalar> c;
    for (int k = 0; k < 5; ++k) c.emplace_back(rng.uniform(-9, 9));
    if (std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); })) c[0] = Scalar(1);
    return ProjPoint(c);
}

const char* kExample41 = "y4 + y1*y4 - y2^2 - y3^2 - y1*y2^2 - 2*y2*y3*y4 - y4^3";

MultiPoly u(int k) { return MultiPoly::variable(3, k - 1); }

}  // namespace

TEST_CASE("plucker coordinates of coordinate lines") {
    LineP4 l = plucker_from_span(e(0), e(1));
    CHECK(l.plucker(0, 1) == Scalar(1));
    int nonzero = 0;
    for (const auto& v : l.plucker()) nonzero += v.is_zero() ? 0 : 1;
    CHECK(nonzero == 1);
    CHECK_THROWS(plucker_from_span(e(0), e(0)));
    CHECK_THROWS(plucker_from_span(e(2), ProjPoint::from_ints(std::vector<long>{0, 0, 7, 0, 0})));
}

TEST_CASE("grassmann relations and span independence") {
    Lcg rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        ProjPoint a = random_point(rng);
        ProjPoint b = random_point(rng);
        if (proportional(a.coords(), b.coords())) continue;
        LineP4 l = plucker_from_span(a, b);
        for (const auto& rel : grassmann_relations(l.plucker())) CHECK(rel.is_zero());
        // oracle for one relation, written out by hand
        const auto& p = l.plucker();
        CHECK((p[0] * p[7] - p[1] * p[5] + p[2] * p[4]).is_zero());
        CHECK(plucker_from_span(b, a) == l);
        // another pair of points on the same line
        Scalar s(rng.nonzero(7));
        Scalar t(rng.uniform(-7, 7));
        ProjPoint c(l.point_at(s, t));
        ProjPoint d(l.point_at(t, s + Scalar(1)));
        if (!proportional(c.coords(), d.coords())) CHECK(LineP4(c, d) == l);
        CHECK(l.contains(c));
    }
}

TEST_CASE("a random vector is not a line") {
    std::array<Scalar, 10> p;
    for (std::size_t k = 0; k < 10; ++k) p[k] = Scalar(static_cast<long>(k + 1));
    bool all_zero = true;
    for (const auto& rel : grassmann_relations(p)) all_zero = all_zero && rel.is_zero();
    CHECK_FALSE(all_zero);
}

TEST_CASE("parse a line") {
    LineP4 l = LineP4::parse("1,0,0,0,0;0,1,0,0,0");
    CHECK(l == plucker_from_span(e(0), e(1)));
    CHECK_THROWS(LineP4::parse("1,0,0,0,0"));
    CHECK_THROWS(LineP4::parse("1,0,0;0,1,0"));
}

TEST_CASE("lines on hypersurfaces") {
    MultiPoly g = parse_hypersurface(kExample41);
    CHECK(line_on_hypersurface(g, plucker_from_span(e(0), e(1))));
    CHECK_FALSE(line_on_hypersurface(g, plucker_from_span(e(0), e(2))));
    MultiPoly q = parse_hypersurface("x2*x3 - x1*x4 + x0*x4");
    CHECK(line_on_hypersurface(q, plucker_from_span(e(0), e(1))));
    // invariance under the choice of span points
    LineP4 r = plucker_from_span(ProjPoint::from_ints(std::vector<long>{2, 3, 0, 0, 0}),
                                 ProjPoint::from_ints(std::vector<long>{1, -1, 0, 0, 0}));
    CHECK(line_on_hypersurface(g, r));
    CHECK(line_on_hypersurface(q, r));
}

TEST_CASE("meets and contains") {
    LineP4 l = plucker_from_span(e(0), e(1));
    CHECK(l.meets(plucker_from_span(e(1), e(2))));
    CHECK_FALSE(l.meets(plucker_from_span(e(2), e(3))));
    CHECK(l.contains(ProjPoint::from_ints(std::vector<long>{4, 5, 0, 0, 0})));
    CHECK_FALSE(l.contains(e(4)));
}

TEST_CASE("chart at the origin of example41") {
    MultiPoly g = parse_hypersurface(kExample41);
    LocalModel lm = normalize_chart(g, e(0));
    CHECK(lm.n == 3);
    REQUIRE(lm.F.size() == 2);
    // the chart here is the identity, so F_2 carries the sign of the equation
    CHECK(lm.F[0] == -(u(2) * u(2) + u(3) * u(3)));
    CHECK(lm.F[1] == -(u(1) * u(2) * u(2)));
    CHECK(lm.chart == ExactMatrix::identity(5));
    ProjPoint dir = lm.direction_of_line(plucker_from_span(e(0), e(1)));
    CHECK(dir == ProjPoint({Scalar(1), Scalar(0), Scalar(0)}));
    CHECK(lm.line_of_direction(dir) == plucker_from_span(e(0), e(1)));
}

TEST_CASE("chart of an affine quadric") {
    MultiPoly g = parse_hypersurface("y4 + y1^2 - y2^2");
    LocalModel lm = normalize_chart(g, e(0));
    REQUIRE(lm.F.size() == 1);
    CHECK(lm.F[0] == u(1) * u(1) - u(2) * u(2));
    CHECK(lm.H[0].is_zero());
}

TEST_CASE("Fermat cubic cone point") {
    MultiPoly g = parse_hypersurface("x0^3 + x1^3 + x2^3 + x3^3 + x4^3");
    LocalModel lm = normalize_chart(g, ProjPoint::from_ints(std::vector<long>{1, -1, 0, 0, 0}));
    // oracle: x1 = -1 + y4/3 gives (-1 + y4/3)^3 = -1 + y4 - y4^2/3 + y4^3/27
    CHECK(lm.F[0].is_zero());
    CHECK(lm.F[1] == pow(u(1), 3) + pow(u(2), 3) + pow(u(3), 3));
    MultiPoly y4 = MultiPoly::variable(4, 3);
    CHECK(lm.H[0] == y4.scaled(Scalar::ratio(-1, 3)));
    CHECK(lm.H[1] == (y4 * y4).scaled(Scalar::ratio(1, 27)));
}

TEST_CASE("chart errors") {
    MultiPoly g = parse_hypersurface(kExample41);
    CHECK_THROWS_WITH(normalize_chart(g, ProjPoint::from_ints(std::vector<long>{1, 1, 1, 0, 0})), doctest::Contains("not on the hypersurface"));
    MultiPoly cone = parse_hypersurface("x1^2 + x2^2 + x3^2 + x4^2");
    CHECK_THROWS_WITH(normalize_chart(cone, e(0)), "singular base point");
}

TEST_CASE("chart reassembly on random cubics") {
    Lcg rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        // a cubic through e0: x0^2 * L + x0 * Q + C with L nonzero
        MultiPoly x0 = MultiPoly::variable(5, 0);
        MultiPoly g(5);
        for (int k = 1; k < 5; ++k) g += (x0 * x0 * MultiPoly::variable(5, k)).scaled(Scalar(rng.uniform(-3, 3)));
        g += (x0 * x0 * MultiPoly::variable(5, 4 - trial % 4)).scaled(Scalar(1));
        for (int i = 1; i < 5; ++i) {
            for (int j = i; j < 5; ++j) {
                g += (x0 * MultiPoly::variable(5, i) * MultiPoly::variable(5, j)).scaled(Scalar(rng.uniform(-3, 3)));
                for (int k = j; k < 5; ++k) {
                    g += (MultiPoly::variable(5, i) * MultiPoly::variable(5, j) * MultiPoly::variable(5, k))
                             .scaled(Scalar(rng.uniform(-2, 2)));
                }
            }
        }
        if (gradient_at(g, e(0).coords()) == std::vector<Scalar>(5, Scalar(0))) continue;
        ProjPoint p = e(0);
        LocalModel lm = normalize_chart(g, p);
        MultiPoly y4 = MultiPoly::variable(4, 3);
        MultiPoly sum = y4;
        for (std::size_t i = 0; i < lm.F.size(); ++i) sum += lm.F[i].with_nvars(4) + y4 * lm.H[i];
        CHECK(sum == lm.affine_eq);
        MultiPoly rest = (lm.affine_eq - y4).specialize(3, Scalar(0));
        MultiPoly fsum(4);
        for (const auto& f : lm.F) {
            CHECK((f.is_zero() || f.is_homogeneous()));
            fsum += f.with_nvars(4);
        }
        CHECK(rest == fsum);
        // tangent directions map to tangent lines and back
        ProjPoint dir({Scalar(1), Scalar(2), Scalar(-1)});
        CHECK(lm.direction_of_line(lm.line_of_direction(dir)) == dir);
    }
}

TEST_CASE("gradient along lines") {
    MultiPoly g = parse_hypersurface("x4*x0^2 + x0*x1*x2 + x1^2*x3");
    GradientOnLine gl = restrict_gradient_to_line(g, plucker_from_span(e(0), e(1)));
    // hand expansion at (1, s, 0, 0, 0)
    UniPoly s = UniPoly::x();
    CHECK(gl.partials[0].is_zero());
    CHECK(gl.partials[1].is_zero());
    CHECK(gl.partials[2] == s);
    CHECK(gl.partials[3] == s * s);
    CHECK(gl.partials[4] == UniPoly::constant(Scalar(1)));
    CHECK(gl.gcd_degree == 0);

    MultiPoly ex = parse_hypersurface(kExample41);
    CHECK(restrict_gradient_to_line(ex, plucker_from_span(e(0), e(1))).gcd_degree == 2);
    // a Moebius change of parameters keeps the length
    LineP4 moved(ProjPoint::from_ints(std::vector<long>{2, 3, 0, 0, 0}), ProjPoint::from_ints(std::vector<long>{-1, 5, 0, 0, 0}));
    CHECK(restrict_gradient_to_line(ex, moved).gcd_degree == 2);
    LineP4 swapped(e(1), e(0));
    CHECK(restrict_gradient_to_line(ex, swapped).gcd_degree == 2);

    MultiPoly quadric = parse_hypersurface("x0*x3 - x1*x2 + x4^2");
    CHECK(restrict_gradient_to_line(quadric, plucker_from_span(e(0), e(1))).gcd_degree == 0);
    CHECK_THROWS(restrict_gradient_to_line(quadric, plucker_from_span(e(0), e(4))));
}

TEST_CASE("line inside the singular locus") {
    MultiPoly g = parse_hypersurface("x2^2*x0 + x3^2*x1 + x4^3");
    GradientOnLine gl = restrict_gradient_to_line(g, plucker_from_span(e(0), e(1)));
    CHECK(gl.inside_singular_locus);
    CHECK(gl.gcd_degree == 2);
}
