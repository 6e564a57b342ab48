#include "linefan/roots.hpp"

#include "linefan/rng.hpp"

#include <algorithm>
#include <cstdint>

namespace linefan {

namespace {

using u64 = std::uint64_t;

// Polynomials over F_p, p < 2^31, low degree first.
class Fp {
public:
    explicit Fp(u64 p) : p_(p) {}

    u64 p() const { return p_; }
    u64 mul(u64 a, u64 b) const { return a * b % p_; }
    u64 add(u64 a, u64 b) const { return (a + b) % p_; }
    u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
    u64 pow(u64 b, u64 e) const {
        u64 r = 1;
        b %= p_;
        while (e != 0) {
            if (e & 1U) r = mul(r, b);
            b = mul(b, b);
            e >>= 1U;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p_ - 2); }

    using Poly = std::vector<u64>;

    static void trim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        }
        trim(r);
        return r;
    }

    Poly mod(Poly a, const Poly& b) const {
        u64 inv_lc = inv(b.back());
        std::size_t db = b.size() - 1;
        while (a.size() > db) {
            u64 f = mul(a.back(), inv_lc);
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j]));
            trim(a);
            if (a.size() > db && a.back() == 0) trim(a);
        }
        return a;
    }

    Poly monic(Poly a) const {
        if (a.empty()) return a;
        u64 f = inv(a.back());
        for (auto& c : a) c = mul(c, f);
        return a;
    }

    Poly gcd(Poly a, Poly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    Poly powmod(const Poly& base, u64 e, const Poly& m) const {
        Poly r{1};
        Poly b = mod(base, m);
        while (e != 0) {
            if (e & 1U) r = mod(mul(r, b), m);
            e >>= 1U;
            if (e != 0) b = mod(mul(b, b), m);
        }
        return r;
    }

    Poly derivative(const Poly& a) const {
        Poly d;
        for (std::size_t k = 1; k < a.size(); ++k) d.push_back(mul(a[k], k % p_));
        trim(d);
        return d;
    }

    // Roots of a squarefree product of distinct linear factors.
    void split(const Poly& f, Lcg& rng, std::vector<u64>& out) const {
        if (f.size() <= 1) return;
        if (f.size() == 2) {
            out.push_back(mul(sub(0, f[0]), inv(f[1])));
            return;
        }
        for (;;) {
            u64 delta = static_cast<u64>(rng.next() >> 33U) % p_;
            Poly g = powmod(Poly{delta, 1}, (p_ - 1) / 2, f);
            if (g.empty()) g = Poly{0};
            g[0] = sub(g[0], 1);
            trim(g);
            Poly d = gcd(f, g);
            if (d.size() > 1 && d.size() < f.size()) {
                split(d, rng, out);
                Poly q = quotient(f, d);
                split(q, rng, out);
                return;
            }
        }
    }

    Poly quotient(Poly a, const Poly& b) const {
        u64 inv_lc = inv(b.back());
        std::size_t db = b.size() - 1;
        Poly q(a.size() - db, 0);
        while (a.size() > db) {
            u64 f = mul(a.back(), inv_lc);
            std::size_t shift = a.size() - 1 - db;
            q[shift] = f;
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j]));
            a.pop_back();
        }
        trim(q);
        return q;
    }

private:
    u64 p_;
};

struct GaussianPoly {
    std::vector<mpz_class> re;
    std::vector<mpz_class> im;
};

// Integer-coefficient version of f (scaled by the lcm of denominators).
GaussianPoly integral(const UniPoly& f) {
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator_lcm().get_mpz_t());
    }
    GaussianPoly g;
    for (const auto& c : f.coeffs()) {
        g.re.push_back(c.re().get_num() * (den / c.re().get_den()));
        g.im.push_back(c.im().get_num() * (den / c.im().get_den()));
    }
    return g;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

u64 to_u64(const mpz_class& a) { return static_cast<u64>(a.get_ui()); }

// Square root of -1 modulo p (p = 1 mod 4).
u64 sqrt_minus_one(const Fp& fp) {
    for (u64 c = 2;; ++c) {
        u64 r = fp.pow(c, (fp.p() - 1) / 4);
        if (fp.mul(r, r) == fp.p() - 1) return r;
    }
}

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class twice = 2 * num + den;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return q;
}

}  // namespace

std::vector<Scalar> gaussian_rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw MathError("roots of the zero polynomial");
    std::vector<Scalar> roots;
    if (f.degree() < 1) return roots;
    UniPoly g = squarefree_part(f);
    if (g.degree() == 1) {
        roots.push_back(-g.coeff(0) / g.coeff(1));
        return roots;
    }
    GaussianPoly gi = integral(g);
    int d = g.degree();

    // Root bound for y = lc * x, a Gaussian integer for every root x in Q(i).
    mpz_class bound = 0;
    auto abs_bound = [](const mpz_class& a, const mpz_class& b) {
        mpz_class n = a * a + b * b;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        return mpz_class(s + 1);
    };
    for (int k = 0; k < d; ++k) bound = std::max(bound, abs_bound(gi.re[k], gi.im[k]));
    bound += abs_bound(gi.re[d], gi.im[d]);

    // Prime p = 1 mod 4 keeping the degree and squarefreeness.
    u64 p = (1ULL << 31U) - 1;
    Fp::Poly gp;
    u64 iota = 0;
    for (;; --p) {
        if (p % 4 != 1 || mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) continue;
        Fp fp(p);
        iota = sqrt_minus_one(fp);
        gp.assign(static_cast<std::size_t>(d + 1), 0);
        mpz_class pz(static_cast<unsigned long>(p));
        for (int k = 0; k <= d; ++k) {
            u64 re = to_u64(mod_pos(gi.re[k], pz));
            u64 im = to_u64(mod_pos(gi.im[k], pz));
            gp[k] = fp.add(re, fp.mul(im, iota));
        }
        if (gp.back() == 0) continue;
        if (fp.gcd(gp, fp.derivative(gp)).size() != 1) continue;
        break;
    }
    Fp fp(p);
    Fp::Poly xp = fp.powmod(Fp::Poly{0, 1}, p, gp);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = fp.sub(xp[1], 1);
    Fp::trim(xp);
    Fp::Poly lin = fp.gcd(gp, xp);
    std::vector<u64> modroots;
    Lcg rng(p);
    fp.split(lin, rng, modroots);
    if (modroots.empty()) return roots;

    // Lift precision: P > 64 * bound^2.
    mpz_class target = 64 * bound * bound;
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class P = pz;
    mpz_class iota_P(static_cast<unsigned long>(iota));
    std::vector<mpz_class> lifted;
    for (u64 r : modroots) lifted.emplace_back(static_cast<unsigned long>(r));
    while (P <= target) {
        mpz_class P2 = P * P;
        // Newton step for iota^2 + 1 = 0.
        mpz_class num = iota_P * iota_P + 1;
        mpz_class den = 2 * iota_P;
        mpz_class den_inv;
        mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), P2.get_mpz_t());
        iota_P = mod_pos(iota_P - num * den_inv, P2);
        std::vector<mpz_class> coeffs(static_cast<std::size_t>(d + 1));
        for (int k = 0; k <= d; ++k) coeffs[k] = mod_pos(gi.re[k] + gi.im[k] * iota_P, P2);
        for (auto& x : lifted) {
            mpz_class val = 0;
            mpz_class dval = 0;
            for (int k = d; k >= 0; --k) {
                dval = mod_pos(dval * x + val, P2);
                val = mod_pos(val * x + coeffs[k], P2);
            }
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), dval.get_mpz_t(), P2.get_mpz_t()) == 0) {
                throw std::logic_error("hensel lift hit a singular root");
            }
            x = mod_pos(x - val * inv, P2);
        }
        P = P2;
    }

    // Lattice {(m, n) : m + n*iota = 0 mod P}, Gauss-reduced.
    mpz_class b1x = P, b1y = 0;
    mpz_class b2x = mod_pos(-iota_P, P), b2y = 1;
    auto norm2 = [](const mpz_class& x, const mpz_class& y) { return mpz_class(x * x + y * y); };
    for (;;) {
        if (norm2(b2x, b2y) < norm2(b1x, b1y)) {
            std::swap(b1x, b2x);
            std::swap(b1y, b2y);
        }
        mpz_class mu = round_div(b1x * b2x + b1y * b2y, norm2(b1x, b1y));
        if (mu == 0) break;
        b2x -= mu * b1x;
        b2y -= mu * b1y;
    }
    mpz_class det = b1x * b2y - b1y * b2x;
    if (det < 0) {
        det = -det;
        b2x = -b2x;
        b2y = -b2y;
    }
    mpz_class lc_mod = mod_pos(gi.re[d] + gi.im[d] * iota_P, P);
    Scalar lc(mpq_class(gi.re[d]), mpq_class(gi.im[d]));
    for (const auto& x : lifted) {
        mpz_class t = mod_pos(lc_mod * x, P);
        // Babai rounding of (t, 0) in the reduced basis, plus neighbours.
        mpz_class c1 = round_div(t * b2y, det);
        mpz_class c2 = round_div(-t * b1y, det);
        for (int u = -1; u <= 1; ++u) {
            for (int v = -1; v <= 1; ++v) {
                mpz_class k1 = c1 + u;
                mpz_class k2 = c2 + v;
                mpz_class m = t - k1 * b1x - k2 * b2x;
                mpz_class n = -k1 * b1y - k2 * b2y;
                if (norm2(m, n) > bound * bound) continue;
                Scalar cand = Scalar(mpq_class(m), mpq_class(n)) / lc;
                if (g.evaluate(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end()) {
                    roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });
    return roots;
}

}  // namespace linefan
