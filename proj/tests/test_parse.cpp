#include "linefan/parse.hpp"
#include "linefan/rng.hpp"

#include <doctest.h>

using namespace linefan;

TEST_CASE("parse simple polynomial") {
    MultiPoly f = parse_polynomial("x0^3 + x1^3");
    MultiPoly x0 = MultiPoly::variable(5, 0);
    MultiPoly x1 = MultiPoly::variable(5, 1);
    CHECK(f == x0 * x0 * x0 + x1 * x1 * x1);
}

TEST_CASE("unknown variable") {
    CHECK_THROWS_WITH(parse_polynomial("x5 + 1"), doctest::Contains("unknown variable"));
    CHECK_THROWS_WITH(parse_polynomial("y0"), doctest::Contains("unknown variable"));
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_polynomial("x0 +\n  x1 * * x2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS(parse_polynomial("x0 + y1"));
    CHECK_THROWS(parse_polynomial("(x0 + x1"));
    CHECK_THROWS(parse_polynomial("1/0"));
}

TEST_CASE("rationals and the imaginary unit") {
    MultiPoly f = parse_polynomial("1/2*x1 - 3*i*x2 + (2 - i)^2");
    CHECK(f.coefficient(Exponents{0, 1}) == Scalar::ratio(1, 2));
    CHECK(f.coefficient(Exponents{0, 0, 1}) == Scalar(0, -3));
    CHECK(f.constant_term() == Scalar(3, -4));
}

TEST_CASE("affine input is homogenized") {
    MultiPoly g = parse_hypersurface("y4 + y1*y4 - y2^2");
    CHECK(g == parse_polynomial("x0*x4 + x1*x4 - x2^2"));
    CHECK(g.is_homogeneous());
    CHECK_THROWS(parse_hypersurface("x0 + x1^2"));
}

TEST_CASE("print/parse round trip") {
    Lcg rng(31);
    for (int t = 0; t < 40; ++t) {
        MultiPoly p(5);
        for (int k = 0; k < 6; ++k) {
            Exponents e{};
            for (int v = 0; v < 5; ++v) e[v] = static_cast<std::uint16_t>(rng.uniform(0, 3));
            p.add_term(e, Scalar(mpq_class(rng.uniform(-20, 20), rng.uniform(1, 7)),
                                 mpq_class(t % 3 == 0 ? rng.uniform(-3, 3) : 0, rng.uniform(1, 4))));
        }
        CHECK(parse_polynomial(to_string(p)) == p);
    }
    CHECK(to_string(MultiPoly(5)) == "0");
    CHECK(to_string(parse_polynomial("-x0^2 + 1")) == "-x0^2 + 1");
}
