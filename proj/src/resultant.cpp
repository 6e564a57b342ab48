#include "linefan/resultant.hpp"

#include "recursive.hpp"

namespace linefan {

namespace {

void check_operands(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw MathError("zero operand");
    if (f.nvars() != g.nvars()) throw MathError("ring mismatch in resultant");
}

template <typename P>
P bareiss_det(std::vector<std::vector<P>> m, const P& one) {
    int n = static_cast<int>(m.size());
    P prev = one;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && detail::is_zero(m[p][k])) ++p;
        if (p == n) return one - one;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                P v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = detail::exact(v, prev);
            }
        }
        prev = m[k][k];
    }
    return sign < 0 ? P(-prev) : prev;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    check_operands(f, g);
    MultiPoly one = MultiPoly::constant(f.nvars(), Scalar(1));
    return detail::subresultant(f.coefficients_in(var), g.coefficients_in(var), one);
}

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    check_operands(f, g);
    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    int m = static_cast<int>(fc.size()) - 1;
    int n = static_cast<int>(gc.size()) - 1;
    MultiPoly zero(f.nvars());
    MultiPoly one = MultiPoly::constant(f.nvars(), Scalar(1));
    if (m + n == 0) return one;
    std::vector<std::vector<MultiPoly>> s(static_cast<std::size_t>(m + n),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(m + n), zero));
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) s[r][r + k] = fc[m - k];
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = gc[n - k];
    }
    return bareiss_det(std::move(s), one);
}

Scalar resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw MathError("zero operand");
    return detail::subresultant(f.coeffs(), g.coeffs(), Scalar(1));
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
    if (m.empty()) throw MathError("determinant of an empty matrix");
    MultiPoly one = MultiPoly::constant(m[0][0].nvars(), Scalar(1));
    return bareiss_det(std::move(m), one);
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
    if (m.empty()) throw MathError("determinant of an empty matrix");
    return bareiss_det(std::move(m), UniPoly::constant(Scalar(1)));
}

std::vector<MultiPoly> linear_forms(const ExactMatrix& a) {
    int n = a.cols();
    std::vector<MultiPoly> images;
    for (int k = 0; k < a.rows(); ++k) {
        MultiPoly l(n);
        for (int j = 0; j < n; ++j) {
            if (!a.at(k, j).is_zero()) l += MultiPoly::variable(n, j).scaled(a.at(k, j));
        }
        images.push_back(std::move(l));
    }
    return images;
}

MultiPoly linear_change(const MultiPoly& f, const ExactMatrix& a) {
    if (a.rows() != a.cols() || a.rows() != f.nvars()) throw MathError("linear change of wrong size");
    if (a.determinant().is_zero()) throw MathError("singular linear change");
    return f.substitute(linear_forms(a));
}

}  // namespace linefan
