#include "linefan/catalog.hpp"
#include "linefan/parse.hpp"

#include <doctest.h>

using namespace linefan;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Projection coordinate_projection(int source_dim) {
    ExactMatrix m(5, source_dim + 1);
    for (int k = 0; k < 5; ++k) m.at(k, k) = Scalar(1);
    return Projection(std::move(m));
}

// Points of {x0 L1 + Q1 = 0, x1 L2 + Q2 = 0} in P^5: choose x2..x5, then
// solve the second equation for x1 and the first for x0.
struct TriangularPair {
    MultiPoly q1;
    MultiPoly q2;
};

TriangularPair triangular_pair() {
    auto x = [](int k) { return MultiPoly::variable(6, k); };
    MultiPoly l1 = x(1) + x(2).scaled(Scalar(2)) - x(5);
    MultiPoly q1 = x(1) * x(3) + x(2) * x(2) - x(4) * x(5).scaled(Scalar(3));
    MultiPoly l2 = x(2) - x(3) + x(4).scaled(Scalar(2));
    MultiPoly q2 = x(3) * x(3) + x(2) * x(5) - x(4) * x(4);
    return {x(0) * l1 + q1, x(1) * l2 + q2};
}

SourceSampler triangular_source(const TriangularPair& tp) {
    return [tp](Lcg& rng) {
        for (;;) {
            std::vector<Scalar> v(6);
            for (int k = 2; k < 6; ++k) v[static_cast<std::size_t>(k)] = Scalar(rng.uniform(-6, 6));
            v[0] = Scalar(0);
            v[1] = Scalar(0);
            // q2 = x1 * c1 + c0 with c_i read off by evaluation
            Scalar c0 = tp.q2.evaluate(v);
            v[1] = Scalar(1);
            Scalar c1 = tp.q2.evaluate(v) - c0;
            if (c1.is_zero()) continue;
            v[1] = -c0 / c1;
            v[0] = Scalar(0);
            Scalar d0 = tp.q1.evaluate(v);
            v[0] = Scalar(1);
            Scalar d1 = tp.q1.evaluate(v) - d0;
            if (d1.is_zero()) continue;
            v[0] = -d0 / d1;
            return v;
        }
    };
}

}  // namespace

TEST_CASE("interpolation of a hyperplane") {
    PointSampler plane = [](Lcg& rng) {
        std::vector<Scalar> c(5);
        for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = Scalar(rng.uniform(-9, 9));
        c[0] += Scalar(10);
        c[4] = Scalar(0);
        return ProjPoint(c);
    };
    MultiPoly f = implicitize_interpolation(plane, 1, 3);
    CHECK(proportional(f, MultiPoly::variable(5, 4)));
    CHECK_THROWS_WITH(implicitize_interpolation(plane, 2, 3), "degree too high or degenerate samples");
}

TEST_CASE("projection with trivial center keeps samples") {
    SourceSampler src = [](Lcg& rng) { return ints({1, rng.uniform(-3, 3), 2, 0, 5}); };
    PointSampler s = project_from_center(src, coordinate_projection(4));
    Lcg a(11);
    Lcg b(11);
    for (int k = 0; k < 5; ++k) CHECK(s(a) == ProjPoint(src(b)));
}

TEST_CASE("projection validates its matrix") {
    CHECK_THROWS(Projection(ExactMatrix(4, 6)));
    ExactMatrix m(5, 6);
    for (int k = 0; k < 4; ++k) m.at(k, k) = Scalar(1);
    CHECK_THROWS(Projection(m));
    Lcg rng(5);
    Projection p = Projection::random(7, rng);
    CHECK(p.source_dim() == 7);
    CHECK(p.matrix().rank() == 5);
}

TEST_CASE("line through the center") {
    Projection p = coordinate_projection(5);
    CHECK_THROWS_WITH(known_line_transport(p, ints({1, 0, 0, 0, 0, 0}), ints({0, 0, 0, 0, 0, 1})),
                      "line meets the projection center");
    LineP4 l = known_line_transport(p, ints({1, 0, 0, 0, 0, 7}), ints({0, 1, 0, 0, 0, 0}));
    CHECK(l == LineP4(ProjPoint::from_ints(std::vector<long>{1, 0, 0, 0, 0}), ProjPoint::from_ints(std::vector<long>{0, 1, 0, 0, 0})));
}

TEST_CASE("two routes to a projected complete intersection agree") {
    TriangularPair tp = triangular_pair();
    Lcg rng(21);
    Projection proj = Projection::random(5, rng);
    MultiPoly by_resultant = project_complete_intersection(tp.q1, tp.q2, proj);
    CHECK(by_resultant.total_degree() == 4);
    MultiPoly by_samples = implicitize_interpolation(project_from_center(triangular_source(tp), proj), 4, 8);
    CHECK(proportional(by_resultant, by_samples));
}

TEST_CASE("catalog families") {
    for (const auto& name : family_names()) {
        CAPTURE(name);
        FamilySpec spec = build_family(name, 7);
        CHECK(spec.name == name);
        CHECK(spec.implicit_eq.total_degree() == spec.expected.n);
        CHECK(spec.implicit_eq.is_homogeneous());
        REQUIRE_FALSE(spec.known_lines.empty());
        for (const auto& l : spec.known_lines) CHECK(line_on_hypersurface(spec.implicit_eq, l));
        if (spec.known_lines.size() >= 2) CHECK_FALSE(spec.known_lines[0].meets(spec.known_lines[1]));
        Lcg rng(99);
        for (int k = 0; k < 10; ++k) CHECK(spec.implicit_eq.evaluate(spec.sampler(rng).coords()).is_zero());

        ProbeReport rep;
        rep.n = spec.expected.n;
        rep.mu = spec.expected.mu;
        rep.components_hint = spec.expected.components;
        CHECK(classify(rep).case_label == spec.expected.case_label);
    }
}

TEST_CASE("rebuilding is deterministic") {
    for (const char* name : {"ci22", "grass_quintic"}) {
        FamilySpec a = build_family(name, 3);
        FamilySpec b = build_family(name, 3);
        CHECK(to_string(a.implicit_eq) == to_string(b.implicit_eq));
        REQUIRE(a.known_lines.size() == b.known_lines.size());
        for (std::size_t k = 0; k < a.known_lines.size(); ++k) {
            CHECK(a.known_lines[k].to_string() == b.known_lines[k].to_string());
        }
        Lcg r1(4);
        Lcg r2(4);
        CHECK(a.sampler(r1) == b.sampler(r2));
    }
}

TEST_CASE("quintic degree from interpolation") {
    FamilySpec spec = build_family("grass_quintic", 7);
    CHECK_THROWS_WITH(implicitize_interpolation(spec.sampler, 4, 1), "degree too low");
    CHECK(proportional(implicitize_interpolation(spec.sampler, 5, 2), spec.implicit_eq));
}

TEST_CASE("other seeds keep the invariants") {
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        FamilySpec spec = build_family("ci22", seed);
        CHECK(spec.implicit_eq.total_degree() == 4);
        CHECK(mu_generic(spec.implicit_eq, spec.sampler, 5, seed).mu == 4);
    }
}

TEST_CASE("cubic sampler stays on the cubic") {
    MultiPoly g = parse_hypersurface("y4 + y1^2 + y2^2 + y3^2 + y1^3 + y2^3 + y3^3 + y4^3");
    PointSampler s = cubic_point_sampler(g, ProjPoint::from_ints(std::vector<long>{1, 0, 0, 0, 0}));
    Lcg rng(2);
    for (int k = 0; k < 10; ++k) CHECK(g.evaluate(s(rng).coords()).is_zero());
}

TEST_CASE("unknown family") { CHECK_THROWS_WITH(build_family("quartic", 0), "unknown family quartic"); }
