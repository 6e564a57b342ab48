#include "linefan/matrix.hpp"
#include "linefan/rng.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

ExactMatrix random_matrix(Lcg& rng, int r, int c, bool complex = false) {
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            m.at(i, j) = Scalar(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 3)),
                                mpq_class(complex ? rng.uniform(-3, 3) : 0));
        }
    }
    return m;
}

// Cofactor expansion, independent of the elimination code.
Scalar laplace(const ExactMatrix& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Scalar acc;
    for (int j = 0; j < n; ++j) {
        ExactMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Scalar t = m.at(0, j) * laplace(minor);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

}  // namespace

TEST_CASE("kernel examples") {
    CHECK(ExactMatrix::identity(3).kernel().empty());
    CHECK(ExactMatrix(2, 3).kernel().size() == 3);
}

TEST_CASE("conic through five points") {
    // Five points on x^2 + 2y^2 - 3 = 0 (affine), evaluated on the six conic monomials.
    std::vector<std::pair<Scalar, Scalar>> pts{
        {1, 1}, {-1, 1}, {1, -1}, {Scalar::ratio(5, 3), Scalar::ratio(1, 3)}, {-1, -1}};
    ExactMatrix m(5, 6);
    for (int r = 0; r < 5; ++r) {
        auto [x, y] = pts[r];
        std::vector<Scalar> row{x * x, x * y, y * y, x, y, Scalar(1)};
        m.set_row(r, row);
    }
    auto k = m.kernel();
    REQUIRE(k.size() == 1);
    for (int r = 0; r < 5; ++r) {
        auto [x, y] = pts[r];
        Scalar v = k[0][0] * x * x + k[0][1] * x * y + k[0][2] * y * y + k[0][3] * x + k[0][4] * y + k[0][5];
        CHECK(v.is_zero());
    }
}

TEST_CASE("rank-nullity and annihilation on random matrices") {
    Lcg rng(12);
    for (int t = 0; t < 20; ++t) {
        int r = static_cast<int>(rng.uniform(1, 6));
        int c = static_cast<int>(rng.uniform(1, 7));
        ExactMatrix a = random_matrix(rng, r, 3, t % 2 == 1);
        ExactMatrix b = random_matrix(rng, 3, c, t % 3 == 1);
        ExactMatrix m = a * b;  // rank at most 3
        auto ker = m.kernel();
        CHECK(m.rank() + static_cast<int>(ker.size()) == c);
        CHECK(m.rank() <= 3);
        for (const auto& v : ker) {
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    Lcg rng(13);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.uniform(1, 5));
        ExactMatrix m = random_matrix(rng, n, n, t % 2 == 0);
        CHECK(m.determinant() == laplace(m));
    }
}

TEST_CASE("inverse") {
    Lcg rng(14);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix m = random_matrix(rng, 4, 4, t % 2 == 0);
        if (m.determinant().is_zero()) continue;
        CHECK(m * m.inverse() == ExactMatrix::identity(4));
    }
    CHECK_THROWS(ExactMatrix(2, 2).inverse());
}
