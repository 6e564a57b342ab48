#include "linefan/rng.hpp"
#include "linefan/unipoly.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

UniPoly lin(long r) { return UniPoly({Scalar(-r), Scalar(1)}); }
UniPoly s() { return UniPoly::x(); }

}  // namespace

TEST_CASE("gcd_many examples") {
    CHECK(gcd_many(std::vector<UniPoly>{s(), s() * s(), UniPoly::constant(Scalar(1))}) == UniPoly::constant(Scalar(1)));
    UniPoly a = lin(1) * lin(1) * lin(-2);
    UniPoly b = lin(1) * lin(-3);
    CHECK(gcd_many(std::vector<UniPoly>{a, b}) == lin(1));
    CHECK_THROWS(gcd_many(std::vector<UniPoly>{UniPoly(), UniPoly()}));
    CHECK(gcd_many(std::vector<UniPoly>{UniPoly(), a.scaled(Scalar(3))}) == a);
}

TEST_CASE("squarefree_part examples") {
    CHECK(squarefree_part(lin(1) * lin(1) * lin(-2)) == lin(1) * lin(-2));
    CHECK(squarefree_part(s() * s()) == s());
    CHECK_THROWS(squarefree_part(UniPoly()));
    // 2a^6+3a^4+2a^3+3a^2+2: gcd with the derivative is 1, so it is its own squarefree part.
    UniPoly e({Scalar(2), Scalar(0), Scalar(3), Scalar(2), Scalar(3), Scalar(0), Scalar(2)});
    CHECK(gcd(e, e.derivative()).degree() == 0);
    CHECK(squarefree_part(e) == e.monic());
}

TEST_CASE("squarefree part divides f and is coprime to its derivative") {
    Lcg rng(3);
    for (int k = 0; k < 20; ++k) {
        UniPoly f = UniPoly::constant(Scalar(rng.nonzero(5)));
        int factors = static_cast<int>(rng.uniform(1, 5));
        for (int j = 0; j < factors; ++j) {
            UniPoly l = lin(rng.uniform(-3, 3));
            for (long m = rng.uniform(1, 3); m > 0; --m) f = f * l;
        }
        UniPoly q = squarefree_part(f);
        CHECK((f % q).is_zero());
        CHECK(gcd(q, q.derivative()).degree() == 0);
    }
}

TEST_CASE("yun decomposition") {
    UniPoly f = lin(1) * lin(2) * lin(2) * lin(3) * lin(3) * lin(3) * lin(3);
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == lin(1));
    CHECK(parts[1] == lin(2));
    CHECK(parts[2].degree() == 0);
    CHECK(parts[3] == lin(3));
    CHECK(root_order(f, Scalar(3)) == 4);
    CHECK(root_order(f, Scalar(5)) == 0);
}

TEST_CASE("division identity") {
    Lcg rng(4);
    for (int k = 0; k < 20; ++k) {
        std::vector<Scalar> ac, bc;
        for (int j = 0; j < 7; ++j) ac.emplace_back(rng.uniform(-9, 9));
        for (int j = 0; j < 3; ++j) bc.emplace_back(rng.uniform(-9, 9));
        bc.emplace_back(rng.nonzero(9));
        UniPoly a(ac), b(bc);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("inverse modulo") {
    UniPoly m = lin(1) * lin(2) * lin(5);
    UniPoly a = lin(3) * lin(4);
    auto [inv, g] = inverse_mod(a, m);
    CHECK(g == UniPoly::constant(Scalar(1)));
    CHECK(mul_mod(inv, a, m) == UniPoly::constant(Scalar(1)));
    auto [inv2, g2] = inverse_mod(lin(2) * lin(7), m);
    CHECK(g2 == lin(2));
}

TEST_CASE("shift and evaluation") {
    UniPoly f = lin(2) * lin(-1);
    UniPoly g = f.shifted(Scalar(1));
    CHECK(g.evaluate(Scalar(1)) == Scalar(0));
    CHECK(g.evaluate(Scalar(-2)) == Scalar(0));
}
