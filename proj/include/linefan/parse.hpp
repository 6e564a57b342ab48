#pragma once

// Text form of polynomials:
//   variables x0..x4 (projective) or y1..y4 (affine chart x0 = 1),
//   literals n and p/q, imaginary unit i, operators + - * ^ and parentheses.

#include "linefan/multipoly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace linefan {

class ParseError : public MathError {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParsedPolynomial {
    MultiPoly poly{5};  // y_k is stored as x_k
    bool affine = false;
};

ParsedPolynomial parse_polynomial_text(std::string_view text);
// Five-variable polynomial; y-variables map to x1..x4 without homogenizing.
MultiPoly parse_polynomial(std::string_view text);
// Homogeneous equation in x0..x4; affine input is homogenized with x0.
MultiPoly parse_hypersurface(std::string_view text);

MultiPoly homogenize(const MultiPoly& f, int var);

std::string to_string(const MultiPoly& f);
std::string to_string(const MultiPoly& f, std::span<const std::string> names);

}  // namespace linefan
