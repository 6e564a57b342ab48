#include "linefan/scalar.hpp"

#include <cctype>

namespace linefan {

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw MathError("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw MathError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

mpz_class Scalar::denominator_lcm() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
    return l;
}

std::string Scalar::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return imag;
    if (imag[0] != '-') imag = "+" + imag;
    return re_.get_str() + imag;
}

namespace {

mpq_class parse_rational(std::string_view s) {
    if (s.empty()) throw MathError("empty number");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') {
            throw MathError("bad number '" + std::string(s) + "'");
        }
    }
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw MathError("bad number '" + std::string(s) + "'");
    if (q.get_den() == 0) throw MathError("zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw MathError("empty number");
    Scalar total;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw MathError("bad number '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term(s.data() + pos, end - pos);
        if (term.empty()) throw MathError("bad number '" + s + "'");
        Scalar value;
        if (term.back() == 'i') {
            term.remove_suffix(1);
            if (!term.empty() && term.back() == '*') term.remove_suffix(1);
            value = term.empty() ? Scalar::i() : Scalar(mpq_class(0), parse_rational(term));
        } else {
            value = Scalar(parse_rational(term));
        }
        total += negative ? -value : value;
        pos = end;
    }
    return total;
}

Scalar pow(const Scalar& base, unsigned e) {
    Scalar result(1);
    Scalar b = base;
    while (e != 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

}  // namespace linefan
