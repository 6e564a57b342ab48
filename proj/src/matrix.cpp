#include "linefan/matrix.hpp"

#include <algorithm>
#include <utility>

namespace linefan {

namespace {

struct GaussInt {
    mpz_class re;
    mpz_class im;
};

bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_zero(const GaussInt& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

// a*b - c*d
mpz_class cross(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
    mpz_class r = a * b;
    mpz_submul(r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

GaussInt cross(const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d) {
    GaussInt r;
    r.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
    r.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
    return r;
}

void divexact(mpz_class& a, const mpz_class& b) {
    if (b == 1) return;
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void divexact(GaussInt& a, const GaussInt& b) {
    if (sgn(b.im) == 0) {
        if (b.re == 1) return;
        mpz_divexact(a.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_divexact(a.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
        return;
    }
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    a.re = std::move(re);
    a.im = std::move(im);
}

Scalar to_scalar(const mpz_class& a) { return Scalar(mpq_class(a)); }
Scalar to_scalar(const GaussInt& a) { return Scalar(mpq_class(a.re), mpq_class(a.im)); }

mpz_class one(const mpz_class*) { return 1; }
GaussInt one(const GaussInt*) { return GaussInt{1, 0}; }

template <typename R>
EchelonForm bareiss(std::vector<R> a, int rows, int cols, EchelonForm form) {
    auto at = [&](int r, int c) -> R& { return a[static_cast<std::size_t>(r) * cols + c]; };
    R prev = one(static_cast<R*>(nullptr));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && is_zero(at(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
            form.sign = -form.sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            bool lead_zero = is_zero(at(i, c));
            for (int j = c + 1; j < cols; ++j) {
                if (lead_zero && is_zero(at(i, j))) continue;
                R v = cross(at(r, c), at(i, j), at(i, c), at(r, j));
                divexact(v, prev);
                at(i, j) = std::move(v);
            }
            at(i, c) = R{};
        }
        prev = at(r, c);
        form.pivot_cols.push_back(c);
        ++r;
    }
    for (int k = 0; k < r; ++k) {
        std::vector<Scalar> row(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) row[j] = to_scalar(at(k, j));
        form.rows.push_back(std::move(row));
    }
    form.last_pivot = r > 0 ? to_scalar(prev) : Scalar();
    return form;
}

std::vector<Scalar> primitive_vector(std::vector<Scalar> v) {
    mpz_class den = 1;
    for (const auto& x : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.im().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class re = x.re().get_num() * (den / x.re().get_den());
        mpz_class im = x.im().get_num() * (den / x.im().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
    }
    if (sgn(g) == 0) return v;
    mpq_class f(den, g);
    f.canonicalize();
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (sgn(x.re()) < 0 || (sgn(x.re()) == 0 && sgn(x.im()) < 0)) f = -f;
        break;
    }
    for (auto& x : v) x *= Scalar(f);
    return v;
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) m.set_row(i, rows[i]);
    return m;
}

std::vector<Scalar> ExactMatrix::row(int r) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
            a_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + cols_)};
}

std::vector<Scalar> ExactMatrix::column(int c) const {
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void ExactMatrix::set_row(int r, std::span<const Scalar> values) {
    if (static_cast<int>(values.size()) != cols_) throw MathError("row length mismatch");
    std::copy(values.begin(), values.end(), a_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix shape mismatch");
    ExactMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) m.at(i, j) += x * b.at(k, j);
        }
    }
    return m;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> v) const {
    if (static_cast<int>(v.size()) != cols_) throw MathError("vector length mismatch");
    std::vector<Scalar> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

EchelonForm echelon(const ExactMatrix& m) {
    int rows = m.rows();
    int cols = m.cols();
    EchelonForm form;
    bool real = true;
    std::vector<mpz_class> scales(static_cast<std::size_t>(rows), 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Scalar& x = m.at(r, c);
            if (!x.is_real()) real = false;
            mpz_lcm(scales[r].get_mpz_t(), scales[r].get_mpz_t(), x.re().get_den_mpz_t());
            mpz_lcm(scales[r].get_mpz_t(), scales[r].get_mpz_t(), x.im().get_den_mpz_t());
        }
    }
    mpz_class total = 1;
    for (const auto& s : scales) total *= s;
    form.row_scale = Scalar(mpq_class(total));
    auto integral = [&](int r, const mpq_class& q) { return mpz_class(q.get_num() * (scales[r] / q.get_den())); };
    if (real) {
        std::vector<mpz_class> a(static_cast<std::size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) a[static_cast<std::size_t>(r) * cols + c] = integral(r, m.at(r, c).re());
        }
        return bareiss(std::move(a), rows, cols, std::move(form));
    }
    std::vector<GaussInt> a(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Scalar& x = m.at(r, c);
            a[static_cast<std::size_t>(r) * cols + c] = GaussInt{integral(r, x.re()), integral(r, x.im())};
        }
    }
    return bareiss(std::move(a), rows, cols, std::move(form));
}

int ExactMatrix::rank() const { return static_cast<int>(echelon(*this).pivot_cols.size()); }

std::vector<std::vector<Scalar>> ExactMatrix::kernel() const {
    EchelonForm form = echelon(*this);
    int rank = static_cast<int>(form.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : form.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(cols_));
        v[f] = Scalar(1);
        for (int k = rank - 1; k >= 0; --k) {
            int p = form.pivot_cols[k];
            const auto& row = form.rows[k];
            Scalar acc;
            for (int j = p + 1; j < cols_; ++j) {
                if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
            }
            v[p] = -acc / row[p];
        }
        basis.push_back(primitive_vector(std::move(v)));
    }
    if (rank + static_cast<int>(basis.size()) != cols_) throw std::logic_error("rank-nullity violated");
    for (const auto& v : basis) {
        for (const auto& x : apply(v)) {
            if (!x.is_zero()) throw std::logic_error("kernel vector does not annihilate the matrix");
        }
    }
    return basis;
}

Scalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw MathError("determinant of a non-square matrix");
    if (rows_ == 0) return Scalar(1);
    EchelonForm form = echelon(*this);
    if (static_cast<int>(form.pivot_cols.size()) < rows_) return Scalar();
    return Scalar(form.sign) * form.last_pivot / form.row_scale;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw MathError("inverse of a non-square matrix");
    int n = rows_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a.at(p, c).is_zero()) ++p;
        if (p == n) throw MathError("singular matrix");
        if (p != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        }
        Scalar f = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Scalar g = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= g * a.at(c, j);
                inv.at(i, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace linefan
