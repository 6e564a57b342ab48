#pragma once

// Threefolds of P^4 built as generic projections of classical varieties, with
// samplers of their rational points and implicit equations.

#include "linefan/geometry.hpp"
#include "linefan/matrix.hpp"
#include "linefan/probes.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linefan {

struct Expected {
    int n = 0;
    int mu = 0;
    int components = 1;
    int case_label = 0;
};

struct FamilySpec {
    std::string name;
    int ambient_dim = 4;
    PointSampler sampler;
    MultiPoly implicit_eq;
    // The first two, when present, are skew and lie in one component.
    std::vector<LineP4> known_lines;
    std::optional<ProjPoint> base_point;
    Expected expected;
    std::uint64_t seed = 0;
};

const std::vector<std::string>& family_names();

// Throws MathError for an unknown name or when every projection budget fails.
FamilySpec build_family(std::string_view name, std::uint64_t seed);

// The degree-d form through C(d+4,4)+10 sampled points, checked on 50 fresh
// samples. Throws "degree too low" for an empty kernel and "degree too high or
// degenerate samples" for a kernel of dimension two or more.
MultiPoly implicitize_interpolation(const PointSampler& sampler, int degree, std::uint64_t seed);

// Points of a source variety in P^m as coordinate vectors.
using SourceSampler = std::function<std::vector<Scalar>(Lcg&)>;

// Linear projection P^m -> P^4 whose center is the kernel of a 5 x (m+1)
// matrix of rank 5.
class Projection {
public:
    explicit Projection(ExactMatrix pi);
    // Entries in [-bound, bound], redrawn until the rank is full.
    static Projection random(int source_dim, Lcg& rng, long bound = 3);

    const ExactMatrix& matrix() const { return pi_; }
    int source_dim() const { return pi_.cols() - 1; }
    // Empty when x lies in the center.
    std::optional<ProjPoint> apply(std::span<const Scalar> x) const;

private:
    ExactMatrix pi_;
};

// Rational points of a cubic threefold by two tangent steps from `start`.
PointSampler cubic_point_sampler(const MultiPoly& g, const ProjPoint& start);

PointSampler project_from_center(SourceSampler source, Projection proj);

// Image of the line through a and b; throws when it meets the center.
LineP4 known_line_transport(const Projection& proj, std::span<const Scalar> a, std::span<const Scalar> b);

// Equation of the projection of {q1 = q2 = 0} from a point center, by
// eliminating the parameter along the projection direction.
MultiPoly project_complete_intersection(const MultiPoly& q1, const MultiPoly& q2, const Projection& proj);

}  // namespace linefan
