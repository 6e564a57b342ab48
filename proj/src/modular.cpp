#include "modular.hpp"

#include <mutex>

namespace linefan::detail {

namespace {

u64 powmod_u64(u64 b, u64 e, u64 m) {
    unsigned __int128 r = 1;
    unsigned __int128 x = b % m;
    while (e != 0) {
        if (e & 1U) r = r * x % m;
        x = x * x % m;
        e >>= 1U;
    }
    return static_cast<u64>(r);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<u64>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p % 4 != 1 || !is_prime(p)) throw std::logic_error("PrimeField needs a prime = 1 mod 4");
    for (u64 c = 2;; ++c) {
        u64 r = pow(c, (p - 1) / 4);
        if (mul(r, r) == p - 1) {
            iota_ = r;
            break;
        }
    }
}

PrimeField PrimeField::nth(std::size_t k) {
    static std::mutex lock;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> guard(lock);
    u64 next = primes.empty() ? (1ULL << 62U) - 3 : primes.back() - 4;
    while (primes.size() <= k) {
        // next stays = 1 mod 4
        while (!is_prime(next)) next -= 4;
        primes.push_back(next);
        next -= 4;
    }
    return PrimeField(primes[k]);
}

u64 PrimeField::pow(u64 b, u64 e) const { return powmod_u64(b, e, p_); }

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw std::logic_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

std::optional<u64> PrimeField::reduce(const mpq_class& q) const {
    const mpz_class pz = to_mpz(p_);
    auto to_u64 = [&](const mpz_class& z) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
        u64 out = 0;
        mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
        return out;
    };
    u64 den = to_u64(q.get_den());
    if (den == 0) return std::nullopt;
    return mul(to_u64(q.get_num()), inv(den));
}

std::optional<u64> PrimeField::reduce(const Scalar& s) const {
    auto re = reduce(s.re());
    if (!re) return std::nullopt;
    if (s.is_real()) return re;
    auto im = reduce(s.im());
    if (!im) return std::nullopt;
    return add(*re, mul(*im, iota_));
}

std::optional<PrimeField::Poly> PrimeField::reduce(const UniPoly& f) const {
    Poly out;
    for (const auto& c : f.coeffs()) {
        auto v = reduce(c);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    trim(out);
    return out;
}

PrimeField::Poly PrimeField::add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] = add(r[k], b[k]);
    trim(r);
    return r;
}

PrimeField::Poly PrimeField::sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] = sub(r[k], b[k]);
    trim(r);
    return r;
}

PrimeField::Poly PrimeField::scale(const Poly& a, u64 c) const {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x = mul(x, c);
    return r;
}

PrimeField::Poly PrimeField::mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    // delay reductions: 2^124 / 2^124 leaves room for a few additions only
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
            if (acc[i + j] >= (static_cast<unsigned __int128>(1) << 126U)) acc[i + j] %= p_;
        }
    }
    Poly r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p_);
    trim(r);
    return r;
}

PrimeField::Poly PrimeField::rem(Poly a, const Poly& b) const {
    if (b.empty()) throw std::logic_error("division by zero polynomial in F_p");
    trim(a);
    u64 inv_lc = inv(b.back());
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        u64 f = mul(a.back(), inv_lc);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < db; ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j]));
        a.pop_back();
        trim(a);
    }
    return a;
}

PrimeField::Poly PrimeField::quotient(Poly a, const Poly& b) const {
    trim(a);
    if (a.size() < b.size()) return {};
    u64 inv_lc = inv(b.back());
    std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    while (a.size() > db) {
        u64 f = mul(a.back(), inv_lc);
        std::size_t shift = a.size() - 1 - db;
        q[shift] = f;
        for (std::size_t j = 0; j < db; ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j]));
        a.pop_back();
    }
    trim(q);
    return q;
}

PrimeField::Poly PrimeField::monic(Poly a) const {
    trim(a);
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

PrimeField::Poly PrimeField::gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

std::pair<PrimeField::Poly, PrimeField::Poly> PrimeField::inverse_mod(const Poly& a, const Poly& m) const {
    Poly r0 = m;
    Poly r1 = rem(a, m);
    Poly s0;
    Poly s1{1};
    while (!r1.empty()) {
        Poly q = quotient(r0, r1);
        Poly r2 = sub(r0, mul(q, r1));
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.empty()) return {{}, {}};
    u64 f = inv(r0.back());
    return {rem(scale(s0, f), m), scale(r0, f)};
}

PrimeField::Poly PrimeField::powmod(const Poly& base, u64 e, const Poly& m) const {
    Poly r{1};
    Poly b = rem(base, m);
    while (e != 0) {
        if (e & 1U) r = mul_mod(r, b, m);
        e >>= 1U;
        if (e != 0) b = mul_mod(b, b, m);
    }
    return rem(r, m);
}

PrimeField::Poly PrimeField::derivative(const Poly& a) const {
    Poly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(mul(a[k], k % p_));
    trim(d);
    return d;
}

u64 PrimeField::evaluate(const Poly& a, u64 x) const {
    u64 acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
}

mpz_class to_mpz(u64 v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

std::optional<mpq_class> rational_reconstruction(const mpz_class& u, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m;
    mpz_class r1;
    mpz_mod(r1.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    mpz_class s0 = 0;
    mpz_class s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (abs(s1) > bound || s1 == 0) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class out(r1, s1);
    out.canonicalize();
    return out;
}

Crt::Crt(const mpz_class& modulus, const PrimeField& f) : modulus_(modulus), p_(to_mpz(f.p())) {
    mpz_class m = modulus % p_;
    mpz_invert(inverse_.get_mpz_t(), m.get_mpz_t(), p_.get_mpz_t());
}

void Crt::combine(mpz_class& acc, u64 r) const {
    mpz_class t = (to_mpz(r) - acc) * inverse_;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
    acc += modulus_ * t;
}

}  // namespace linefan::detail
