#include "linefan/multipoly.hpp"
#include "linefan/rng.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

MultiPoly random_poly(Lcg& rng, int nvars, int terms, int maxdeg) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (int k = 0; k < nvars; ++k) e[k] = static_cast<std::uint16_t>(rng.uniform(0, maxdeg));
        p.add_term(e, Scalar(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 4)), mpq_class(rng.uniform(-1, 1))));
    }
    return p;
}

std::vector<Scalar> random_point(Lcg& rng, int n) {
    std::vector<Scalar> v;
    for (int k = 0; k < n; ++k) v.push_back(Scalar(mpq_class(rng.uniform(-5, 5), rng.uniform(1, 3))));
    return v;
}

}  // namespace

TEST_CASE("ring axioms on random triples") {
    Lcg rng(5);
    for (int k = 0; k < 25; ++k) {
        MultiPoly a = random_poly(rng, 3, 4, 2);
        MultiPoly b = random_poly(rng, 3, 4, 2);
        MultiPoly c = random_poly(rng, 3, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation commutes with ring operations") {
    Lcg rng(6);
    for (int k = 0; k < 25; ++k) {
        MultiPoly a = random_poly(rng, 4, 5, 3);
        MultiPoly b = random_poly(rng, 4, 5, 3);
        auto pt = random_point(rng, 4);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("substitution commutes with ring operations") {
    Lcg rng(7);
    for (int k = 0; k < 10; ++k) {
        MultiPoly a = random_poly(rng, 3, 4, 2);
        MultiPoly b = random_poly(rng, 3, 4, 2);
        std::vector<MultiPoly> images{random_poly(rng, 2, 2, 1), random_poly(rng, 2, 2, 1), random_poly(rng, 2, 2, 1)};
        CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
        auto pt = random_point(rng, 2);
        std::vector<Scalar> inner;
        for (const auto& im : images) inner.push_back(im.evaluate(pt));
        CHECK(a.substitute(images).evaluate(pt) == a.evaluate(inner));
    }
}

TEST_CASE("zero polynomial has sentinel degree") {
    MultiPoly z(3);
    CHECK(z.total_degree() == -1);
    CHECK(z.is_zero());
    MultiPoly p = MultiPoly::variable(3, 1) * MultiPoly::variable(3, 1);
    p -= p;
    CHECK(p.size() == 0);
}

TEST_CASE("exact division") {
    Lcg rng(8);
    for (int k = 0; k < 15; ++k) {
        MultiPoly a = random_poly(rng, 3, 4, 2);
        MultiPoly b = random_poly(rng, 3, 3, 2);
        if (b.is_zero()) continue;
        CHECK(*(a * b).divide_exact(b) == a);
    }
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    CHECK_FALSE((x * x + y).divide_exact(x).has_value());
}

TEST_CASE("coefficients in a variable reassemble") {
    Lcg rng(9);
    MultiPoly a = random_poly(rng, 3, 6, 3);
    auto cs = a.coefficients_in(1);
    CHECK(MultiPoly::from_coefficients_in(1, 3, cs) == a);
}

TEST_CASE("homogeneous parts and partials") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly f = x * x * y + x + MultiPoly::constant(2, Scalar(3));
    CHECK(f.homogeneous_part(3) == x * x * y);
    CHECK(f.order() == 0);
    CHECK(f.partial(0) == MultiPoly::constant(2, Scalar(2)) * x * y + MultiPoly::constant(2, Scalar(1)));
    CHECK_FALSE(f.is_homogeneous());
    CHECK(proportional(f.scaled(Scalar::ratio(-2, 7)), f));
}
