#pragma once

// Sparse multivariate polynomials over Q(i).

#include "linefan/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace linefan {

inline constexpr int kMaxVars = 8;
using Exponents = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponents& e);

class MultiPoly {
public:
    // Descending lex order: begin() is the lex-leading term.
    using TermMap = std::map<Exponents, Scalar, std::greater<>>;

    explicit MultiPoly(int nvars = 0);

    static MultiPoly constant(int nvars, const Scalar& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, const Exponents& e, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    // Lowest total degree of a term; -1 for zero.
    int order() const;
    bool is_homogeneous() const;
    bool uses_var(int var) const { return degree_in(var) > 0; }

    MultiPoly homogeneous_part(int d) const;
    MultiPoly truncated(int max_degree) const;
    Scalar coefficient(const Exponents& e) const;
    Scalar constant_term() const;
    const Scalar& leading_coefficient() const;
    const Exponents& leading_exponents() const;

    // Coefficient list in powers of `var`; entry k multiplies var^k.
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients_in(int var, int nvars, std::span<const MultiPoly> coeffs);

    Scalar evaluate(std::span<const Scalar> point) const;
    // Replace variable k by images[k]; all images share one target ring.
    MultiPoly substitute(std::span<const MultiPoly> images) const;
    // Fix variable var to a value, keeping the number of variables.
    MultiPoly specialize(int var, const Scalar& value) const;
    MultiPoly partial(int var) const;
    // Move variable k to target[k] in a ring with new_nvars variables.
    MultiPoly rename(std::span<const int> target, int new_nvars) const;
    MultiPoly with_nvars(int n) const;

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly monic() const;
    // Scaled to Gaussian-integer coefficients with trivial integer content,
    // leading coefficient with positive real part (or positive imaginary part).
    MultiPoly primitive() const;

    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p.scaled(c); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
    // Throws MathError when the division leaves a remainder.
    MultiPoly exact_quotient(const MultiPoly& divisor) const;

private:
    int nvars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned e);

// True when a == c * b for some nonzero scalar c.
bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace linefan
