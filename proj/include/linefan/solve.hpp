#pragma once

// Zero-dimensional solving in the projective plane and in small affine
// spaces, by resultant elimination with exact back-substitution.

#include "linefan/matrix.hpp"
#include "linefan/multipoly.hpp"
#include "linefan/projpoint.hpp"
#include "linefan/unipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace linefan {

class PositiveDimensional : public MathError {
public:
    using MathError::MathError;
};

// Homogeneous curves in P^2 (three variables).
struct PlaneSystem {
    std::vector<MultiPoly> polys;
    std::vector<int> degrees;

    // Validates the variable count and homogeneity.
    static PlaneSystem make(std::vector<MultiPoly> polys);
};

// Polynomial in one variable with coefficients in K[x]/(m), low degree first.
using ResiduePoly = std::vector<UniPoly>;

struct SplitPiece {
    UniPoly modulus;
    ResiduePoly gcd;  // monic, or empty when every input vanishes mod modulus
};

// Gcd of polynomials over K[x]/(m) for squarefree m, splitting m whenever a
// leading coefficient is a zero divisor. The moduli of the pieces multiply to m.
std::vector<SplitPiece> split_gcd(const std::vector<ResiduePoly>& polys, const UniPoly& modulus);

struct FanPoint {
    ProjPoint point;
    int multiplicity;
};

// The points over the roots of `modulus`: coordinate k is coords[k](theta)
// for each root theta.
struct FanBranch {
    UniPoly modulus;
    std::vector<UniPoly> coords;
};

struct FanCount {
    int distinct = 0;
    int bezout_total = 0;
    bool infinite = false;
    // Multiplicity of every point over the closure, descending.
    std::vector<int> mult_profile;
    std::vector<FanPoint> rational_points;
    std::vector<FanBranch> branches;
    std::uint64_t seed = 0;
    int attempts = 0;
    ExactMatrix shear;
};

FanCount count_plane_points(const PlaneSystem& sys, std::uint64_t seed);

// True when the curves share a common component.
bool has_common_curve(const PlaneSystem& sys);

// Length of the local ring of the system at an isolated rational zero.
int local_multiplicity(const PlaneSystem& sys, const ProjPoint& pt);
bool is_reduced_at(const PlaneSystem& sys, const ProjPoint& pt);

// Number of solutions over the closure of a zero-dimensional system in the
// variables of the input ring (at most kMaxVars).
int count_affine_solutions(const std::vector<MultiPoly>& eqs, std::uint64_t seed);

}  // namespace linefan
