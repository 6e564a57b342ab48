#pragma once

// Measurements of the family of lines on a threefold X = {G = 0} in P^4.

#include "linefan/geometry.hpp"
#include "linefan/rng.hpp"
#include "linefan/solve.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linefan {

// Lines on X through the smooth point p: the plane system F_2..F_n.
FanCount lines_through_point(const MultiPoly& g, const ProjPoint& p, std::uint64_t seed = 0);

using PointSampler = std::function<ProjPoint(Lcg&)>;

struct MuSample {
    ProjPoint point;
    std::optional<FanCount> fan;  // empty when the sample was singular
    std::string note;
};

struct MuResult {
    int mu = 0;
    std::vector<MuSample> samples;
};

// Largest distinct count attained by at least two finite samples, else the
// largest one attained at all. Throws when no sample gives a finite fan.
MuResult mu_generic(const MultiPoly& g, const PointSampler& sampler, int trials, std::uint64_t seed);

struct LineReducedness {
    bool reduced = false;
    int length = 0;
    ProjPoint base;
};

// Reducedness of the Fano scheme at r, read off the fan at a smooth point of r
// (the given one, or the first smooth point a + s*b, s = 0, 1, -1, 2, ...,
// at which r is an isolated line through the point).
LineReducedness reduced_at_line(const MultiPoly& g, const LineP4& r, const std::optional<ProjPoint>& base = {});

// Length of r meet Sing(X).
int singular_points_on_line(const MultiPoly& g, const LineP4& r);

// Lines on X meeting both of two skew lines of X.
int mubar(const MultiPoly& g, const LineP4& r, const LineP4& r2);

// Degree of the surface swept by the lines of X meeting r, as the number of
// its points on a seeded plane.
int sigma_degree(const MultiPoly& g, const LineP4& r, std::uint64_t seed);

// The same degree from an interpolated plane curve through algebraic points
// of the surface, cut by a hyperplane and projected to P^2.
int sigma_degree_interpolated(const MultiPoly& g, const LineP4& r, std::uint64_t seed, int max_degree = 12);

// Rank of the quadric F_2 at p; 0 at a cone point.
int f2_rank(const MultiPoly& g, const ProjPoint& p);

// Points of Sing(X) on a seeded plane.
int sing_locus_plane_count(const MultiPoly& g, std::uint64_t seed);

struct SurfaceLines {
    bool infinite = false;
    int count = 0;
};

// Lines on the surface {f = 0} in P^3 (f in four variables).
SurfaceLines lines_on_surface(const MultiPoly& f, std::uint64_t seed);

// The generic hyperplane section of X in coordinates of the hyperplane.
MultiPoly hyperplane_section(const MultiPoly& g, std::uint64_t seed);

// True when the sampled points of the surface swept by lines meeting r lie on
// a quadric that does not contain their linear span.
bool quadric_bundle_probe(const MultiPoly& g, const LineP4& r, std::uint64_t seed);

struct ProbeReport {
    int n = 0;
    std::optional<int> mu;
    std::vector<MuSample> mu_samples;
    std::optional<int> mubar;
    std::optional<int> sigma_deg;
    std::optional<int> f2_rank;
    std::map<std::string, int> sing_on_line;
    std::optional<int> sing_locus_plane_count;
    std::optional<int> nu;
    std::map<std::string, bool> reduced;
    std::optional<int> components_hint;
    std::optional<int> case_label;
    std::vector<std::string> unclassified_reasons;
    std::uint64_t seed = 0;
};

struct Classification {
    std::optional<int> case_label;
    std::vector<std::string> failed;
};

Classification classify(const ProbeReport& report);

// Binary-form coefficients of G(lambda*q + mu*q2) for points whose
// coordinates are polynomials in `nvars` parameters; entry k multiplies
// lambda^(n-k) mu^k.
std::vector<MultiPoly> join_coefficients(const MultiPoly& g, const std::vector<MultiPoly>& q, const std::vector<MultiPoly>& q2,
                                         int nvars);

}  // namespace linefan
