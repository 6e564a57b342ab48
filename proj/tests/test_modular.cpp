#include "modular.hpp"

#include "linefan/rng.hpp"
#include "linefan/unipoly.hpp"

#include <doctest.h>

using namespace linefan;
using detail::PrimeField;
using detail::u64;

namespace {

bool trial_division(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Schoolbook Euclid over Q(i), monic.
UniPoly euclid(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly random_poly(Lcg& rng, int degree, bool complex) {
    std::vector<Scalar> c;
    for (int k = 0; k <= degree; ++k) {
        Scalar re(rng.uniform(-20, 20));
        c.push_back(complex ? re + Scalar::i() * Scalar(rng.uniform(-5, 5)) : re);
    }
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UniPoly(c);
}

}  // namespace

TEST_CASE("primality") {
    for (u64 n = 0; n < 5000; ++n) {
        CAPTURE(n);
        CHECK(detail::is_prime(n) == trial_division(n));
    }
    CHECK(detail::is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(detail::is_prime(3215031751ULL));     // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("prime field arithmetic") {
    PrimeField f = PrimeField::nth(0);
    CHECK(f.p() % 4 == 1);
    CHECK(f.p() < (1ULL << 62U));
    CHECK(f.mul(f.iota(), f.iota()) == f.p() - 1);
    CHECK(PrimeField::nth(1).p() < f.p());
    for (u64 a : {u64{1}, u64{2}, u64{12345}, f.p() - 1}) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS(PrimeField(7));
    CHECK_THROWS(f.inv(0));
    CHECK(*f.reduce(Scalar::i()) == f.iota());
    CHECK_FALSE(f.reduce(mpq_class(1, 1) / mpq_class(detail::to_mpz(f.p()))).has_value());
}

TEST_CASE("polynomials over F_p") {
    PrimeField f(13);
    PrimeField::Poly a{12, 0, 1};  // x^2 - 1
    PrimeField::Poly b{1, 1};      // x + 1
    CHECK(f.gcd(a, b) == PrimeField::Poly{1, 1});
    CHECK(f.quotient(a, b) == PrimeField::Poly{12, 1});
    CHECK(f.rem(a, b).empty());
    auto [s, g] = f.inverse_mod(PrimeField::Poly{2, 1}, a);
    CHECK(g == PrimeField::Poly{1});
    CHECK(f.mul_mod(s, PrimeField::Poly{2, 1}, a) == PrimeField::Poly{1});
    CHECK(f.evaluate(a, 5) == 11);
    CHECK(f.derivative(a) == PrimeField::Poly{0, 2});
    CHECK(f.powmod(PrimeField::Poly{0, 1}, 13, PrimeField::Poly{0, 12, 0, 1}) == PrimeField::Poly{0, 1});
}

TEST_CASE("rational reconstruction") {
    PrimeField f = PrimeField::nth(2);
    mpz_class m = detail::to_mpz(f.p());
    for (auto q : {mpq_class(7, 13), mpq_class(-22, 9), mpq_class(0), mpq_class(123456, 7)}) {
        auto back = detail::rational_reconstruction(detail::to_mpz(*f.reduce(q)), m);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
}

TEST_CASE("gcd agrees with Euclid") {
    Lcg rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        bool complex = trial % 2 == 1;
        UniPoly common = random_poly(rng, 1 + trial % 4, complex);
        UniPoly a = common * random_poly(rng, 2 + trial % 3, complex);
        UniPoly b = common * random_poly(rng, 3, complex);
        CAPTURE(trial);
        CHECK(gcd(a, b) == euclid(a, b));
        CHECK(gcd(a * a, a * b) == euclid(a * a, a * b));
    }
}
