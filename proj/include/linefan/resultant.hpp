#pragma once

// Resultants and linear changes of coordinates.

#include "linefan/matrix.hpp"
#include "linefan/multipoly.hpp"
#include "linefan/unipoly.hpp"

namespace linefan {

// Res_var(f, g) by the subresultant PRS; equals the Sylvester determinant.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);
// Reference implementation: fraction-free determinant of the Sylvester matrix.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var);
Scalar resultant(const UniPoly& f, const UniPoly& g);

// Fraction-free determinant of a square matrix of polynomials.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

// f(A x): variable k is replaced by sum_j A(k, j) x_j.
MultiPoly linear_change(const MultiPoly& f, const ExactMatrix& a);
// Images of the variables under x -> A x, as linear forms.
std::vector<MultiPoly> linear_forms(const ExactMatrix& a);

}  // namespace linefan
