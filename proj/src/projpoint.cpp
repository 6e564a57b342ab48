#include "linefan/projpoint.hpp"

#include <algorithm>

namespace linefan {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : c_(std::move(coords)) {
    if (std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw MathError("projective point with all coordinates zero");
    }
}

ProjPoint ProjPoint::from_ints(std::span<const long> coords) {
    std::vector<Scalar> c;
    for (long v : coords) c.emplace_back(v);
    return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::parse(std::string_view text) {
    std::vector<Scalar> c;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        c.push_back(Scalar::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::normalized() const {
    auto it = std::find_if(c_.begin(), c_.end(), [](const Scalar& s) { return !s.is_zero(); });
    Scalar inv = it->inverse();
    std::vector<Scalar> c;
    for (const auto& s : c_) c.push_back(s * inv);
    return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::primitive() const {
    mpz_class den = 1;
    for (const auto& s : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.denominator_lcm().get_mpz_t());
    mpz_class g = 0;
    std::vector<Scalar> c;
    for (const auto& s : c_) {
        Scalar t = s * Scalar(mpq_class(den));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.re().get_num().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.im().get_num().get_mpz_t());
        c.push_back(std::move(t));
    }
    // Sign convention: first nonzero coordinate has positive real part,
    // or zero real part and positive imaginary part.
    auto it = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (sgn(it->re()) < 0 || (sgn(it->re()) == 0 && sgn(it->im()) < 0)) g = -g;
    Scalar inv = Scalar(mpq_class(mpz_class(1), g));
    for (auto& s : c) s *= inv;
    return ProjPoint(std::move(c));
}

std::string ProjPoint::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k != 0) out += ',';
        out += c_[k].to_string();
    }
    return out;
}

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) return false;
    // a_j b_k = a_k b_j for all pairs against the first nonzero index of a
    std::size_t p = 0;
    while (p < a.size() && a[p].is_zero()) ++p;
    if (p == a.size()) return std::all_of(b.begin(), b.end(), [](const Scalar& s) { return s.is_zero(); });
    if (b[p].is_zero()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!(a[p] * b[k] == a[k] * b[p])) return false;
    }
    return true;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return proportional(a.c_, b.c_); }

}  // namespace linefan
