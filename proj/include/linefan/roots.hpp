#pragma once

#include "linefan/unipoly.hpp"

#include <vector>

namespace linefan {

// Distinct roots of f that lie in Q(i), sorted by (re, im). Exact: candidates
// come from a p-adic lift and are kept only after exact verification.
std::vector<Scalar> gaussian_rational_roots(const UniPoly& f);

}  // namespace linefan
