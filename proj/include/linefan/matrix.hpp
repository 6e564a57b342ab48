#pragma once

// Dense matrices over Q(i) with fraction-free elimination.

#include "linefan/scalar.hpp"

#include <span>
#include <vector>

namespace linefan {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[index(r, c)]; }
    const Scalar& at(int r, int c) const { return a_[index(r, c)]; }
    std::vector<Scalar> row(int r) const;
    std::vector<Scalar> column(int c) const;
    void set_row(int r, std::span<const Scalar> values);

    ExactMatrix transpose() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    std::vector<Scalar> apply(std::span<const Scalar> v) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    int rank() const;
    // Basis of {v : M v = 0}; rank + nullity = cols is checked.
    std::vector<std::vector<Scalar>> kernel() const;
    Scalar determinant() const;
    // Throws on a singular matrix.
    ExactMatrix inverse() const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

// Row echelon data produced by fraction-free elimination.
struct EchelonForm {
    std::vector<int> pivot_cols;
    // Echelon rows (one per pivot), rescaled to Q(i).
    std::vector<std::vector<Scalar>> rows;
    // Row permutation sign and accumulated scaling, for determinants.
    int sign = 1;
    Scalar last_pivot;
    Scalar row_scale = Scalar(1);
};

EchelonForm echelon(const ExactMatrix& m);

}  // namespace linefan
