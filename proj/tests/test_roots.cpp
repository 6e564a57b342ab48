#include "linefan/rng.hpp"
#include "linefan/roots.hpp"

#include <doctest.h>

#include <algorithm>

using namespace linefan;

TEST_CASE("gaussian roots of x^2 + 1") {
    UniPoly f({Scalar(1), Scalar(0), Scalar(1)});
    auto r = gaussian_rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -Scalar::i());
    CHECK(r[1] == Scalar::i());
}

TEST_CASE("irrational roots are skipped") {
    UniPoly f({Scalar(-2), Scalar(0), Scalar(1)});
    CHECK(gaussian_rational_roots(f).empty());
    // (x^2 - 2)(3x - 5)(x - 1/2 + 7/3 i)
    UniPoly g = f * UniPoly({Scalar(-5), Scalar(3)}) *
                UniPoly({Scalar(mpq_class(-1, 2), mpq_class(7, 3)), Scalar(1)});
    auto r = gaussian_rational_roots(g);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Scalar(mpq_class(1, 2), mpq_class(-7, 3)));
    CHECK(r[1] == Scalar(mpq_class(5, 3)));
}

TEST_CASE("repeated and zero roots") {
    UniPoly x = UniPoly::x();
    UniPoly f = x * x * x * UniPoly({Scalar(4), Scalar(0), Scalar(1)});
    auto r = gaussian_rational_roots(f);
    REQUIRE(r.size() == 3);
    CHECK(r[1] == Scalar(0));
}

TEST_CASE("random products of known roots are recovered") {
    Lcg rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> roots;
        int k = static_cast<int>(rng.uniform(1, 6));
        for (int j = 0; j < k; ++j) {
            roots.emplace_back(mpq_class(rng.uniform(-60, 60), rng.uniform(1, 9)),
                               mpq_class(rng.uniform(-60, 60), rng.uniform(1, 9)));
        }
        UniPoly f = UniPoly::from_roots(roots) * UniPoly({Scalar(-3), Scalar(0), Scalar(0), Scalar(1)});
        auto found = gaussian_rational_roots(f);
        for (const auto& r : roots) CHECK(std::find(found.begin(), found.end(), r) != found.end());
        for (const auto& r : found) CHECK(f.evaluate(r).is_zero());
    }
}
