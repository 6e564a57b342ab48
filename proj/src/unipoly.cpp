#include "linefan/unipoly.hpp"

#include "modular.hpp"

#include <algorithm>
#include <optional>

namespace linefan {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

UniPoly UniPoly::monomial(int degree, const Scalar& c) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree + 1));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Scalar> roots) {
    UniPoly p = constant(Scalar(1));
    for (const auto& r : roots) p = p * UniPoly(std::vector<Scalar>{-r, Scalar(1)});
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar();
    return c_[k];
}

const Scalar& UniPoly::leading() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
}

Scalar UniPoly::evaluate(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return {};
    std::vector<Scalar> v = c_;
    for (auto& c : v) c *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive() const {
    return from_multi(to_multi(1, 0).primitive(), 0);
}

UniPoly UniPoly::shifted(const Scalar& shift) const {
    // Horner in the shifted variable.
    UniPoly acc;
    UniPoly lin(std::vector<Scalar>{shift, Scalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += constant(*it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

MultiPoly UniPoly::to_multi(int nvars, int var) const {
    MultiPoly p(nvars);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        Exponents e{};
        e[var] = static_cast<std::uint16_t>(k);
        p.add_term(e, c_[k]);
    }
    return p;
}

UniPoly UniPoly::from_multi(const MultiPoly& p, int var) {
    std::vector<Scalar> v(static_cast<std::size_t>(std::max(0, p.degree_in(var) + 1)));
    for (const auto& [e, c] : p.terms()) {
        for (int k = 0; k < kMaxVars; ++k) {
            if (k != var && e[k] != 0) throw MathError("polynomial is not univariate");
        }
        v[e[var]] = c;
    }
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Scalar> rem = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    Scalar inv = b.leading().inverse();
    bool unit = b.leading().is_one();
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Scalar f = unit ? rem[k] : rem[k] * inv;
        for (int j = 0; j < db; ++j) {
            if (!bc[j].is_zero()) rem[k - db + j] -= f * bc[j];
        }
        rem[k] = Scalar();
        quot[k - db] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

namespace {

UniPoly conjugate(const UniPoly& f) {
    std::vector<Scalar> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.conj());
    return UniPoly(std::move(c));
}

bool divides(const UniPoly& d, const UniPoly& f) { return (f % d).is_zero(); }

// Monic gcd by Chinese remaindering over both embeddings of Q(i) into F_p,
// checked by exact division. Empty when the prime budget runs out.
std::optional<UniPoly> modular_gcd(const UniPoly& a, const UniPoly& b) {
    constexpr std::size_t kMaxPrimes = 400;
    const UniPoly ac = conjugate(a);
    const UniPoly bc = conjugate(b);
    int best = std::min(a.degree(), b.degree()) + 1;
    std::vector<mpz_class> re;
    std::vector<mpz_class> im;
    mpz_class modulus = 1;
    std::optional<UniPoly> previous;
    for (std::size_t k = 0; k < kMaxPrimes; ++k) {
        detail::PrimeField f = detail::PrimeField::nth(k);
        auto ap = f.reduce(a);
        auto bp = f.reduce(b);
        auto acp = f.reduce(ac);
        auto bcp = f.reduce(bc);
        if (!ap || !bp || !acp || !bcp) continue;
        if (detail::PrimeField::degree(*ap) != a.degree() || detail::PrimeField::degree(*bp) != b.degree() ||
            detail::PrimeField::degree(*acp) != a.degree() || detail::PrimeField::degree(*bcp) != b.degree()) {
            continue;
        }
        auto gp = f.gcd(*ap, *bp);
        auto gm = f.gcd(*acp, *bcp);
        int d = detail::PrimeField::degree(gp);
        if (detail::PrimeField::degree(gm) != d || d > best) continue;
        if (d == 0) return UniPoly::constant(Scalar(1));
        if (d < best) {
            best = d;
            re.assign(static_cast<std::size_t>(d + 1), mpz_class(0));
            im.assign(static_cast<std::size_t>(d + 1), mpz_class(0));
            modulus = 1;
            previous.reset();
        }
        const detail::u64 inv2 = f.inv(2);
        const detail::u64 inv2i = f.inv(f.mul(2, f.iota()));
        detail::Crt crt(modulus, f);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
            crt.combine(re[j], f.mul(f.add(gp[j], gm[j]), inv2));
            crt.combine(im[j], f.mul(f.sub(gp[j], gm[j]), inv2i));
        }
        modulus *= detail::to_mpz(f.p());

        std::vector<Scalar> cand;
        bool ok = true;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(d) && ok; ++j) {
            auto x = detail::rational_reconstruction(re[j], modulus);
            auto y = detail::rational_reconstruction(im[j], modulus);
            ok = x && y;
            if (ok) cand.emplace_back(*x, *y);
        }
        if (!ok) {
            previous.reset();
            continue;
        }
        UniPoly c(std::move(cand));
        if (previous && *previous == c && divides(c, a) && divides(c, b)) return c;
        previous = std::move(c);
    }
    return std::nullopt;
}

UniPoly euclid_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.monic();
    UniPoly y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPoly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(Scalar(1));
    if (a.degree() <= 2 && b.degree() <= 2) return euclid_gcd(a, b);
    if (auto g = modular_gcd(a, b)) return *g;
    return euclid_gcd(a, b);
}

UniPoly gcd_many(std::span<const UniPoly> fs) {
    std::vector<const UniPoly*> nonzero;
    for (const auto& f : fs) {
        if (!f.is_zero()) nonzero.push_back(&f);
    }
    if (nonzero.empty()) throw MathError("gcd of all-zero input");
    std::sort(nonzero.begin(), nonzero.end(),
              [](const UniPoly* a, const UniPoly* b) { return a->degree() < b->degree(); });
    UniPoly g = nonzero.front()->monic();
    for (std::size_t k = 1; k < nonzero.size() && g.degree() > 0; ++k) g = gcd(g, *nonzero[k]);
    return g;
}

std::pair<UniPoly, UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m) {
    // Extended Euclid tracking only the cofactor of a.
    UniPoly r0 = m;
    UniPoly r1 = a % m;
    UniPoly s0;
    UniPoly s1 = UniPoly::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly()};
    Scalar inv = r0.leading().inverse();
    return {s0.scaled(inv) % m, r0.scaled(inv)};
}

UniPoly mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& m) {
    UniPoly result = UniPoly::constant(Scalar(1)) % m;
    UniPoly b = base % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
        result = mul_mod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), k) != 0) result = mul_mod(result, b, m);
    }
    return result;
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw MathError("squarefree part of zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(Scalar(1));
    return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw MathError("squarefree decomposition of zero polynomial");
    std::vector<UniPoly> out;
    if (f.degree() == 0) return out;
    UniPoly fm = f.monic();
    UniPoly d = fm.derivative();
    UniPoly a = gcd(fm, d);
    UniPoly b = exact_div(fm, a);
    UniPoly c = exact_div(d, a);
    UniPoly e = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly g = gcd(b, e);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(e, g);
        e = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

int root_order(const UniPoly& f, const Scalar& r) {
    if (f.is_zero()) throw MathError("root order in zero polynomial");
    UniPoly lin(std::vector<Scalar>{-r, Scalar(1)});
    int k = 0;
    UniPoly g = f;
    for (;;) {
        auto [q, rem] = divmod(g, lin);
        if (!rem.is_zero()) return k;
        g = std::move(q);
        ++k;
    }
}

}  // namespace linefan
