#include "linefan/parse.hpp"

#include <cctype>
#include <vector>

namespace linefan {

ParseError::ParseError(int line, int column, const std::string& what)
    : MathError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedPolynomial run() {
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        if (saw_x_ && saw_y_) fail("mixed x and y variables");
        return {std::move(p), saw_y_};
    }

private:
    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
        int line = 1;
        int column = 1;
        for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            mpz_class e = digits();
            if (e > 10000) fail_at(start, "exponent too large");
            return pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    mpz_class digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    MultiPoly atom() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = digits();
            mpz_class den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                den = digits();
                if (den == 0) fail_at(at, "zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            return MultiPoly::constant(5, Scalar(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "i") return MultiPoly::constant(5, Scalar::i());
            if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
                std::string_view idx = name.substr(1);
                bool numeric = !idx.empty() && idx.size() <= 2;
                for (char d : idx) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
                if (numeric) {
                    int k = std::stoi(std::string(idx));
                    if (name[0] == 'x' && k <= 4 && idx.size() == 1) {
                        saw_x_ = true;
                        return MultiPoly::variable(5, k);
                    }
                    if (name[0] == 'y' && k >= 1 && k <= 4 && idx.size() == 1) {
                        saw_y_ = true;
                        return MultiPoly::variable(5, k);
                    }
                }
            }
            fail_at(start, "unknown variable '" + std::string(name) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    bool saw_x_ = false;
    bool saw_y_ = false;
};

std::string coefficient_text(const Scalar& c) {
    if (c.is_real()) return c.re().get_str();
    std::string s = "(";
    if (sgn(c.re()) != 0) s += c.re().get_str();
    mpq_class im = c.im();
    if (sgn(im) < 0) {
        s += "-";
        im = -im;
    } else if (sgn(c.re()) != 0) {
        s += "+";
    }
    if (im != 1) s += im.get_str() + "*";
    return s + "i)";
}

}  // namespace

ParsedPolynomial parse_polynomial_text(std::string_view text) { return Parser(text).run(); }

MultiPoly parse_polynomial(std::string_view text) { return parse_polynomial_text(text).poly; }

MultiPoly parse_hypersurface(std::string_view text) {
    ParsedPolynomial parsed = parse_polynomial_text(text);
    if (parsed.poly.is_zero()) throw MathError("zero equation");
    if (!parsed.affine) {
        if (!parsed.poly.is_homogeneous()) throw MathError("equation in x0..x4 must be homogeneous");
        return parsed.poly;
    }
    return homogenize(parsed.poly, 0);
}

MultiPoly homogenize(const MultiPoly& f, int var) {
    if (f.uses_var(var)) throw MathError("homogenizing variable already present");
    int d = f.total_degree();
    MultiPoly h(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponents g = e;
        g[var] = static_cast<std::uint16_t>(d - total_degree(e));
        h.add_term(g, c);
    }
    return h;
}

std::string to_string(const MultiPoly& f) {
    std::vector<std::string> names;
    for (int k = 0; k < f.nvars(); ++k) names.push_back((f.nvars() <= 5 ? "x" : "v") + std::to_string(k));
    return to_string(f, names);
}

std::string to_string(const MultiPoly& f, std::span<const std::string> names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string mono;
        for (int k = 0; k < f.nvars(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        bool negative = c.is_real() && sgn(c.re()) < 0;
        Scalar mag = negative ? -c : c;
        std::string coef;
        if (mono.empty()) {
            coef = coefficient_text(mag);
        } else if (!mag.is_one()) {
            coef = coefficient_text(mag) + "*";
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef + mono;
        first = false;
    }
    return out;
}

}  // namespace linefan
