#include "linefan/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace linefan {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

namespace {

void check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw MathError("unsupported number of variables");
}

Exponents add(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (int k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::uint16_t>(a[k] + b[k]);
    return r;
}

bool divides(const Exponents& d, const Exponents& e) {
    for (int k = 0; k < kMaxVars; ++k) {
        if (d[k] > e[k]) return false;
    }
    return true;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw MathError("variable index out of range");
    Exponents e{};
    e[index] = 1;
    return monomial(nvars, e, Scalar(1));
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Scalar& c) {
    MultiPoly p(nvars);
    for (int k = nvars; k < kMaxVars; ++k) {
        if (e[k] != 0) throw MathError("exponent on a missing variable");
    }
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, linefan::total_degree(e));
    return d;
}

int MultiPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

int MultiPoly::order() const {
    if (terms_.empty()) return -1;
    int d = linefan::total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, linefan::total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = linefan::total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return linefan::total_degree(t.first) == d; });
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (linefan::total_degree(e) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

MultiPoly MultiPoly::truncated(int max_degree) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (linefan::total_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar MultiPoly::constant_term() const { return coefficient(Exponents{}); }

const Scalar& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw MathError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return terms_.begin()->first;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)), MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out[e[var]].terms_.emplace(f, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(int var, int nvars, std::span<const MultiPoly> coeffs) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms_) {
            Exponents f = e;
            f[var] = static_cast<std::uint16_t>(f[var] + k);
            r.add_term(f, c);
        }
    }
    return r;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) < nvars_) throw MathError("evaluation point too short");
    std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(nvars_));
    auto power = [&](int var, int k) -> const Scalar& {
        auto& cache = powers[var];
        if (cache.empty()) cache.emplace_back(1);
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * point[var]);
        return cache[k];
    };
    Scalar sum;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] != 0) t *= power(k, e[k]);
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (static_cast<int>(images.size()) < nvars_) throw MathError("substitution list too short");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) {
        if (im.nvars() != target) throw MathError("substitution images in different rings");
    }
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(nvars_));
    auto power = [&](int var, int k) -> const MultiPoly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, Scalar(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[var]);
        return cache[k];
    };
    MultiPoly result(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] != 0) t *= power(k, e[k]);
        }
        result += t;
    }
    return result;
}

MultiPoly MultiPoly::specialize(int var, const Scalar& value) const {
    MultiPoly r(nvars_);
    std::vector<Scalar> powers{Scalar(1)};
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
        Exponents f = e;
        f[var] = 0;
        r.add_term(f, c * powers[e[var]]);
    }
    return r;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] = static_cast<std::uint16_t>(f[var] - 1);
        r.add_term(f, c * Scalar(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::rename(std::span<const int> target, int new_nvars) const {
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f{};
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (k >= static_cast<int>(target.size()) || target[k] < 0 || target[k] >= new_nvars) {
                throw MathError("rename drops a used variable");
            }
            f[target[k]] = static_cast<std::uint16_t>(f[target[k]] + e[k]);
        }
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::with_nvars(int n) const {
    check_nvars(n);
    for (int k = n; k < nvars_; ++k) {
        if (uses_var(k)) throw MathError("with_nvars drops a used variable");
    }
    MultiPoly r(n);
    r.terms_ = terms_;
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den = 1;
    for (const auto& [e, c] : terms_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class re = c.re().get_num() * (den / c.re().get_den());
        mpz_class im = c.im().get_num() * (den / c.im().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
    }
    mpq_class factor(den, g);
    factor.canonicalize();
    const Scalar& lc = leading_coefficient();
    if (sgn(lc.re()) < 0 || (sgn(lc.re()) == 0 && sgn(lc.im()) < 0)) factor = -factor;
    return scaled(Scalar(factor));
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw MathError("ring mismatch in addition");
    if (&o == this) return *this = scaled(Scalar(2));
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw MathError("ring mismatch in subtraction");
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw MathError("ring mismatch in multiplication");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(add(ea, eb));
            it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(Scalar(-1)); }

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.nvars_ != nvars_) throw MathError("ring mismatch in division");
    if (divisor.is_zero()) throw MathError("division by zero polynomial");
    MultiPoly quotient(nvars_);
    MultiPoly rem = *this;
    const Exponents& dlead = divisor.leading_exponents();
    Scalar dinv = divisor.leading_coefficient().inverse();
    while (!rem.is_zero()) {
        auto lead = *rem.terms_.begin();
        if (!divides(dlead, lead.first)) return std::nullopt;
        Exponents shift{};
        for (int k = 0; k < kMaxVars; ++k) shift[k] = static_cast<std::uint16_t>(lead.first[k] - dlead[k]);
        Scalar factor = lead.second * dinv;
        quotient.terms_.emplace_hint(quotient.terms_.end(), shift, factor);
        for (const auto& [e, c] : divisor.terms_) rem.add_term(add(e, shift), -(c * factor));
    }
    return quotient;
}

MultiPoly MultiPoly::exact_quotient(const MultiPoly& divisor) const {
    auto q = divide_exact(divisor);
    if (!q) throw MathError("inexact polynomial division");
    return *std::move(q);
}

MultiPoly pow(const MultiPoly& base, unsigned e) {
    MultiPoly result = MultiPoly::constant(base.nvars(), Scalar(1));
    MultiPoly b = base;
    while (e != 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size()) return false;
    Scalar ratio = a.leading_coefficient() / b.leading_coefficient();
    return a == b.scaled(ratio);
}

}  // namespace linefan
