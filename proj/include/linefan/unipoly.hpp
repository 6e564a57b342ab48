#pragma once

// Dense univariate polynomials over Q(i).

#include "linefan/multipoly.hpp"
#include "linefan/scalar.hpp"

#include <span>
#include <utility>
#include <vector>

namespace linefan {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);  // low degree first
    static UniPoly constant(const Scalar& c);
    static UniPoly x();
    static UniPoly monomial(int degree, const Scalar& c);
    // Product of (x - r) over the given roots.
    static UniPoly from_roots(std::span<const Scalar> roots);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const;
    const Scalar& leading() const;

    Scalar evaluate(const Scalar& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly scaled(const Scalar& s) const;
    // Gaussian-integer coefficients with trivial integer content.
    UniPoly primitive() const;
    // p(x) -> p(x + shift)
    UniPoly shifted(const Scalar& shift) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly operator-() const { return scaled(Scalar(-1)); }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    MultiPoly to_multi(int nvars, int var) const;
    // Requires a polynomial in at most the single variable `var`.
    static UniPoly from_multi(const MultiPoly& p, int var);

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// Monic gcd of all inputs; throws on an all-zero list.
UniPoly gcd_many(std::span<const UniPoly> fs);
// s with s*a = gcd(a, m) mod m, together with that gcd.
std::pair<UniPoly, UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m);
UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& m);

// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);
// Yun decomposition: entry k-1 is the monic product of roots of multiplicity k.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);
// Multiplicity of r as a root of f.
int root_order(const UniPoly& f, const Scalar& r);

}  // namespace linefan
