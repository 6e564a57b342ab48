#pragma once

// Lines in P^4, hypersurface charts at smooth points, restriction to lines.

#include "linefan/matrix.hpp"
#include "linefan/multipoly.hpp"
#include "linefan/projpoint.hpp"
#include "linefan/solve.hpp"
#include "linefan/unipoly.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace linefan {

inline constexpr int kAmbient = 5;  // homogeneous coordinates of P^4

// Line spanned by two independent points, with cached Pluecker vector
// p_ij = a_i b_j - a_j b_i ordered (01,02,03,04,12,13,14,23,24,34).
class LineP4 {
public:
    LineP4(ProjPoint a, ProjPoint b);
    // "a;b" with each point comma separated.
    static LineP4 parse(std::string_view text);

    const ProjPoint& a() const { return a_; }
    const ProjPoint& b() const { return b_; }
    const std::array<Scalar, 10>& plucker() const { return p_; }
    const Scalar& plucker(int i, int j) const;

    // s*a + t*b
    std::vector<Scalar> point_at(const Scalar& s, const Scalar& t) const;
    bool contains(const ProjPoint& q) const;
    bool meets(const LineP4& other) const;

    std::string to_string() const;

    // Same line: proportional Pluecker vectors.
    friend bool operator==(const LineP4& l, const LineP4& m);

private:
    ProjPoint a_;
    ProjPoint b_;
    std::array<Scalar, 10> p_;
};

LineP4 plucker_from_span(const ProjPoint& a, const ProjPoint& b);
int plucker_index(int i, int j);
// The five three-term quadrics p_ij p_kl - p_ik p_jl + p_il p_jk.
std::array<Scalar, 5> grassmann_relations(const std::array<Scalar, 10>& p);

// Images of x_0..x_4 under x = s*a + t*b, as forms in `nvars` variables
// where s and t are the variables `s_var`, `t_var`.
std::vector<MultiPoly> line_images(const LineP4& r, int nvars, int s_var, int t_var);
// G(s*a + t*b) as a binary form in (s, t).
MultiPoly restrict_to_line(const MultiPoly& g, const LineP4& r);
bool line_on_hypersurface(const MultiPoly& g, const LineP4& r);

std::vector<Scalar> gradient_at(const MultiPoly& g, std::span<const Scalar> x);

// Chart at a smooth point p: x = M (1, y1, y2, y3, y4) with T_pX = {y4 = 0}.
struct LocalModel {
    int n = 0;
    ProjPoint p;
    MultiPoly affine_eq;         // in y1..y4, linear part exactly y4
    std::vector<MultiPoly> F;    // F_2..F_n in y1..y3
    std::vector<MultiPoly> H;    // H_2..H_n in y1..y4
    ExactMatrix chart;           // M, columns (p, w1, w2, w3, w4)
    ExactMatrix chart_inverse;

    PlaneSystem fan_system() const;
    // Line through p in the tangent direction (y1 : y2 : y3).
    LineP4 line_of_direction(const ProjPoint& dir) const;
    // Tangent direction of a line through p.
    ProjPoint direction_of_line(const LineP4& r) const;
};

// Throws MathError when p is off the hypersurface or singular.
LocalModel normalize_chart(const MultiPoly& g, const ProjPoint& p);

struct GradientOnLine {
    std::array<UniPoly, kAmbient> partials;  // along a + s*b
    // Length of r meet Sing(X); n-1 together with the flag when r lies in it.
    int gcd_degree = 0;
    bool inside_singular_locus = false;
};

GradientOnLine restrict_gradient_to_line(const MultiPoly& g, const LineP4& r);

// Throws unless g is a nonzero form in five variables.
void check_hypersurface(const MultiPoly& g);

}  // namespace linefan
