#pragma once

// Points of projective space with Q(i) coordinates.

#include "linefan/scalar.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linefan {

class ProjPoint {
public:
    // Throws MathError when every coordinate is zero.
    explicit ProjPoint(std::vector<Scalar> coords);
    static ProjPoint from_ints(std::span<const long> coords);
    // Comma separated coordinates, each "p/q" or "a+bi".
    static ProjPoint parse(std::string_view text);

    int size() const { return static_cast<int>(c_.size()); }
    const Scalar& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Scalar>& coords() const { return c_; }

    // Representative whose first nonzero coordinate is 1.
    ProjPoint normalized() const;
    // Representative with Gaussian-integer coordinates of trivial integer content.
    ProjPoint primitive() const;

    std::string to_string() const;

    // Equality of points: proportional coordinate vectors.
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<Scalar> c_;
};

bool proportional(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace linefan
