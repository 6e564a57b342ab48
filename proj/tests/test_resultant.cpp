#include "linefan/parse.hpp"
#include "linefan/resultant.hpp"
#include "linefan/rng.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

MultiPoly P(const char* s) { return parse_polynomial(s); }

// Cofactor expansion of a polynomial matrix; independent of Bareiss.
MultiPoly laplace(const std::vector<std::vector<MultiPoly>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly acc(m[0][0].nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[r][c]);
            }
            minor.push_back(row);
        }
        MultiPoly t = m[0][j] * laplace(minor);
        if (j % 2 == 0) {
            acc += t;
        } else {
            acc -= t;
        }
    }
    return acc;
}

MultiPoly sylvester_by_cofactors(const MultiPoly& f, const MultiPoly& g, int var) {
    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    int m = static_cast<int>(fc.size()) - 1;
    int n = static_cast<int>(gc.size()) - 1;
    MultiPoly zero(f.nvars());
    std::vector<std::vector<MultiPoly>> s(m + n, std::vector<MultiPoly>(m + n, zero));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = fc[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = gc[n - k];
    return laplace(s);
}

MultiPoly random_poly(Lcg& rng, int nvars, int terms, int maxdeg) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (int k = 0; k < nvars; ++k) e[k] = static_cast<std::uint16_t>(rng.uniform(0, maxdeg));
        p.add_term(e, Scalar(rng.uniform(-5, 5)));
    }
    return p;
}

}  // namespace

TEST_CASE("resultant examples") {
    CHECK(resultant(P("x1 - 1"), P("x1 - 2"), 1) == P("-1"));
    CHECK(resultant(P("x1^2 + 1"), P("x1^2 + 1"), 1).is_zero());
    MultiPoly f = P("y1^2 + y2^2 + y3^2");
    MultiPoly g = P("y1^3 + y2^3 + y3^3");
    MultiPoly expected = P("(y1^3 + y2^3)^2 + (y1^2 + y2^2)^3");
    CHECK(sylvester_by_cofactors(f, g, 3) == expected);
    CHECK(resultant(f, g, 3) == expected);
    CHECK(sylvester_resultant(f, g, 3) == expected);
    CHECK_THROWS_WITH(resultant(MultiPoly(5), g, 3), "zero operand");
}

TEST_CASE("subresultant agrees with the Sylvester determinant") {
    Lcg rng(21);
    for (int t = 0; t < 30; ++t) {
        MultiPoly f = random_poly(rng, 3, 5, 3);
        MultiPoly g = random_poly(rng, 3, 4, 3);
        if (f.is_zero() || g.is_zero()) continue;
        MultiPoly r = resultant(f, g, 0);
        CHECK(r == sylvester_resultant(f, g, 0));
        if (f.degree_in(0) + g.degree_in(0) <= 5) CHECK(r == sylvester_by_cofactors(f, g, 0));
        // Swap rule: Res(g, f) = (-1)^(deg f * deg g) Res(f, g).
        int sign = (f.degree_in(0) * g.degree_in(0)) % 2 == 0 ? 1 : -1;
        CHECK(resultant(g, f, 0) == r.scaled(Scalar(sign)));
    }
}

TEST_CASE("resultant degree respects the Sylvester bound") {
    Lcg rng(22);
    for (int t = 0; t < 15; ++t) {
        MultiPoly f = random_poly(rng, 2, 6, 3);
        MultiPoly g = random_poly(rng, 2, 6, 3);
        if (f.is_zero() || g.is_zero()) continue;
        MultiPoly r = resultant(f, g, 1);
        int m = f.degree_in(1), n = g.degree_in(1);
        int bound = n * f.degree_in(0) + m * g.degree_in(0);
        CHECK(r.degree_in(0) <= bound);
    }
}

TEST_CASE("univariate resultant is the product formula") {
    UniPoly f = UniPoly::from_roots(std::vector<Scalar>{Scalar(1), Scalar(2)});
    UniPoly g({Scalar(3), Scalar(0), Scalar(1)});
    CHECK(resultant(f, g) == g.evaluate(Scalar(1)) * g.evaluate(Scalar(2)));
}

TEST_CASE("linear change") {
    MultiPoly f = P("x0^3");
    CHECK(linear_change(f, ExactMatrix::identity(5)) == f);
    ExactMatrix swap = ExactMatrix::identity(5);
    swap.at(0, 0) = 0;
    swap.at(1, 1) = 0;
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(linear_change(f, swap) == P("x1^3"));
    CHECK_THROWS(linear_change(f, ExactMatrix(5, 5)));
    Lcg rng(23);
    ExactMatrix a(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) a.at(i, j) = Scalar(rng.uniform(-3, 3) + (i == j ? 7 : 0));
    MultiPoly g = P("x4*x0^2 + x0*x1*x2 + x1^2*x3");
    MultiPoly h = linear_change(g, a);
    CHECK(h.total_degree() == 3);
    CHECK(linear_change(h, a.inverse()) == g);
}
