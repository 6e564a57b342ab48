#pragma once

// Word-size prime fields F_p with p = 1 mod 4, where i maps to a fixed
// square root of -1, and reduction of Q(i) data into them.

#include "linefan/scalar.hpp"
#include "linefan/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linefan::detail {

using u64 = std::uint64_t;

bool is_prime(u64 n);

class PrimeField {
public:
    // p must be a prime = 1 mod 4 below 2^62.
    explicit PrimeField(u64 p);
    // The k-th prime = 1 mod 4 below 2^62, counting downward.
    static PrimeField nth(std::size_t k);

    u64 p() const { return p_; }
    u64 iota() const { return iota_; }

    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p_); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 pow(u64 b, u64 e) const;
    u64 inv(u64 a) const;

    std::optional<u64> reduce(const mpq_class& q) const;
    std::optional<u64> reduce(const Scalar& s) const;

    using Poly = std::vector<u64>;  // low degree first, trimmed

    static void trim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

    std::optional<Poly> reduce(const UniPoly& f) const;
    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, u64 c) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly rem(Poly a, const Poly& b) const;
    Poly quotient(Poly a, const Poly& b) const;
    Poly monic(Poly a) const;
    Poly gcd(Poly a, Poly b) const;
    // s with s*a = gcd(a, m) mod m, and that monic gcd.
    std::pair<Poly, Poly> inverse_mod(const Poly& a, const Poly& m) const;
    Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }
    Poly powmod(const Poly& base, u64 e, const Poly& m) const;
    Poly derivative(const Poly& a) const;
    u64 evaluate(const Poly& a, u64 x) const;

private:
    u64 p_;
    u64 iota_ = 0;
};

mpz_class to_mpz(u64 v);

// r/s = u mod m with |r|, |s| at most sqrt(m/2).
std::optional<mpq_class> rational_reconstruction(const mpz_class& u, const mpz_class& m);

// Lifts residues mod `modulus` to residues mod modulus * p.
class Crt {
public:
    Crt(const mpz_class& modulus, const PrimeField& f);
    void combine(mpz_class& acc, u64 r) const;

private:
    mpz_class modulus_;
    mpz_class p_;
    mpz_class inverse_;
};

}  // namespace linefan::detail
