#include "linefan/parse.hpp"
#include "linefan/probes.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

ProjPoint e(int k) {
    std::vector<Scalar> c(5, Scalar(0));
    c[static_cast<std::size_t>(k)] = Scalar(1);
    return ProjPoint(c);
}

ProjPoint pt(std::vector<long> c) { return ProjPoint::from_ints(c); }

const char* kExample41 = "y4 + y1*y4 - y2^2 - y3^2 - y1*y2^2 - 2*y2*y3*y4 - y4^3";
const char* kConstructed = "y4 + y1^2 + y2^2 + y3^2 + y1^3 + y2^3 + y3^3 + y4^3";

}  // namespace

TEST_CASE("example41 probes") {
    MultiPoly g = parse_hypersurface(kExample41);
    LineP4 r(e(0), e(1));
    FanCount fc = lines_through_point(g, e(0));
    CHECK(fc.distinct == 3);
    CHECK(fc.bezout_total == 6);
    CHECK(fc.mult_profile == std::vector<int>{4, 1, 1});
    auto red = reduced_at_line(g, r);
    CHECK_FALSE(red.reduced);
    CHECK(red.length == 4);
    CHECK(singular_points_on_line(g, r) == 2);
    CHECK(f2_rank(g, e(0)) == 2);
}

TEST_CASE("constructed cubic probes") {
    MultiPoly g = parse_hypersurface(kConstructed);
    FanCount fc = lines_through_point(g, e(0));
    CHECK(fc.distinct == 6);
    CHECK(fc.bezout_total == 6);
    CHECK(f2_rank(g, e(0)) == 3);
}

TEST_CASE("reducedness on a transversal cubic line") {
    MultiPoly g = parse_hypersurface("x4*x0^2 + x0*x1*x2 + x1^2*x3");
    LineP4 r(e(0), e(1));
    auto red = reduced_at_line(g, r);
    CHECK(red.reduced);
    CHECK(red.length == 1);
    CHECK(singular_points_on_line(g, r) == 0);
}

TEST_CASE("Fermat cone point") {
    MultiPoly g = parse_hypersurface("x0^3 + x1^3 + x2^3 + x3^3 + x4^3");
    ProjPoint p = pt({1, -1, 0, 0, 0});
    CHECK(lines_through_point(g, p).infinite);
    CHECK(f2_rank(g, p) == 0);
}

TEST_CASE("join coefficients") {
    // G = x0 x1 on the points q = e0 + s e2, q2 = e1: G(l q + m q2) = l m
    MultiPoly g = parse_hypersurface("x0*x1");
    MultiPoly s = MultiPoly::variable(1, 0);
    auto c = [](long v) { return MultiPoly::constant(1, Scalar(v)); };
    std::vector<MultiPoly> q{c(1), c(0), s, c(0), c(0)};
    std::vector<MultiPoly> q2{c(0), c(1), c(0), c(0), c(0)};
    auto coeffs = join_coefficients(g, q, q2, 1);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1] == c(1));
    CHECK(coeffs[2].is_zero());
}

TEST_CASE("mubar preconditions") {
    MultiPoly g = parse_hypersurface(kExample41);
    LineP4 r(e(0), e(1));
    CHECK_THROWS_WITH(mubar(g, r, r), "mubar needs degree at least 4");
    MultiPoly q = parse_hypersurface("x0*x2*x3*x4 - x1*x2*x3*x4 + x2^4");
    LineP4 r1(e(0), e(1));
    CHECK_THROWS_WITH(mubar(q, r1, r1), "lines not skew");
}

TEST_CASE("lines on surfaces") {
    MultiPoly x0 = MultiPoly::variable(4, 0);
    MultiPoly x1 = MultiPoly::variable(4, 1);
    MultiPoly x2 = MultiPoly::variable(4, 2);
    MultiPoly x3 = MultiPoly::variable(4, 3);
    CHECK(lines_on_surface(x0 * x3 - x1 * x2, 1).infinite);
    CHECK(lines_on_surface(x0, 1).infinite);
    SurfaceLines fermat = lines_on_surface(pow(x0, 3) + pow(x1, 3) + pow(x2, 3) + pow(x3, 3), 3);
    CHECK_FALSE(fermat.infinite);
    CHECK(fermat.count == 27);
}

TEST_CASE("classification table") {
    ProbeReport rep;
    rep.n = 4;
    rep.mu = 4;
    CHECK(classify(rep).case_label == 2);
    rep.n = 5;
    rep.mu = 3;
    CHECK(classify(rep).case_label == 3);
    rep.n = 6;
    rep.mu = 2;
    CHECK(classify(rep).case_label == 4);
    rep.mu = 3;
    rep.components_hint = 3;
    CHECK(classify(rep).case_label == 5);
    rep.components_hint.reset();
    Classification c = classify(rep);
    CHECK_FALSE(c.case_label);
    CHECK_FALSE(c.failed.empty());
    rep.n = 3;
    rep.mu = 6;
    CHECK(classify(rep).case_label == 1);
    rep.n = 7;
    rep.mu = 1;
    CHECK_FALSE(classify(rep).case_label);
}
