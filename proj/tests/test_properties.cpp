#include "linefan/catalog.hpp"
#include "linefan/parse.hpp"
#include "linefan/resultant.hpp"

#include <doctest.h>

#include <map>

using namespace linefan;

namespace {

ExactMatrix random_invertible(Lcg& rng) {
    for (;;) {
        ExactMatrix a(5, 5);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) a.at(i, j) = Scalar(rng.uniform(-2, 2));
        }
        if (a.rank() == 5) return a;
    }
}

ProjPoint pull_back(const ExactMatrix& inv, const ProjPoint& p) { return ProjPoint(inv.apply(p.coords())); }

LineP4 pull_back(const ExactMatrix& inv, const LineP4& l) { return LineP4(pull_back(inv, l.a()), pull_back(inv, l.b())); }

// Families built once per seed; the probes below only read them.
const FamilySpec& family(const std::string& name, std::uint64_t seed) {
    static std::map<std::pair<std::string, std::uint64_t>, FamilySpec> cache;
    auto key = std::make_pair(name, seed);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_family(name, seed)).first;
    return it->second;
}

}  // namespace

TEST_CASE("probes are invariant under linear changes of coordinates") {
    MultiPoly g = parse_hypersurface("y4 + y1*y4 - y2^2 - y3^2 - y1*y2^2 - 2*y2*y3*y4 - y4^3");
    ProjPoint p = ProjPoint::from_ints(std::vector<long>{1, 0, 0, 0, 0});
    LineP4 r(p, ProjPoint::from_ints(std::vector<long>{0, 1, 0, 0, 0}));
    Lcg rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        ExactMatrix a = random_invertible(rng);
        ExactMatrix inv = a.inverse();
        MultiPoly h = linear_change(g, a).scaled(Scalar(trial + 2));
        ProjPoint q = pull_back(inv, p);
        LineP4 s = pull_back(inv, r);
        CAPTURE(trial);
        REQUIRE(h.evaluate(q.coords()).is_zero());
        FanCount fc = lines_through_point(h, q);
        CHECK(fc.distinct == 3);
        CHECK(fc.mult_profile == std::vector<int>{4, 1, 1});
        CHECK(reduced_at_line(h, s).length == 4);
        CHECK(singular_points_on_line(h, s) == 2);
        CHECK(f2_rank(h, q) == 2);
    }
}

TEST_CASE("mubar and mu are invariant under linear changes") {
    const FamilySpec& f = family("ci22", 7);
    Lcg rng(8);
    ExactMatrix a = random_invertible(rng);
    ExactMatrix inv = a.inverse();
    MultiPoly h = linear_change(f.implicit_eq, a);
    CHECK(mubar(h, pull_back(inv, f.known_lines[0]), pull_back(inv, f.known_lines[1])) == 2);
    PointSampler moved = [&](Lcg& r) { return pull_back(inv, f.sampler(r)); };
    CHECK(mu_generic(h, moved, 5, 4).mu == 4);
}

TEST_CASE("catalog invariants") {
    for (std::uint64_t seed : {7ULL, 2ULL}) {
        for (const auto& name : family_names()) {
            const FamilySpec& f = family(name, seed);
            const MultiPoly& g = f.implicit_eq;
            const int n = g.total_degree();
            CAPTURE(name);
            CAPTURE(seed);
            MuResult m = mu_generic(g, f.sampler, 5, seed);
            CHECK(m.mu == f.expected.mu);
            CHECK(m.mu <= 6);
            if (n > 3) CHECK(m.mu <= 4);
            for (const auto& smp : m.samples) {
                if (!smp.fan || smp.fan->infinite) continue;
                if (n == 3) CHECK(smp.fan->bezout_total <= 6);
                CHECK(f2_rank(g, smp.point) == (name == "example41" ? 2 : 3));
            }
            for (const auto& l : f.known_lines) {
                if (!reduced_at_line(g, l).reduced) continue;
                CHECK(singular_points_on_line(g, l) == n - 3);
            }
        }
    }
}

TEST_CASE("general cubic points see six lines") {
    const FamilySpec& f = family("cubic_smooth", 7);
    MuResult m = mu_generic(f.implicit_eq, f.sampler, 6, 1);
    int full = 0;
    for (const auto& smp : m.samples) {
        if (smp.fan && smp.fan->bezout_total == 6) ++full;
    }
    CHECK(full >= 5);
}

TEST_CASE("incidence counts follow mu") {
    // families whose lines of one component pass two through a general point
    for (const char* name : {"ci22", "grass_quintic", "segre_cube"}) {
        const FamilySpec& f = family(name, 7);
        CAPTURE(name);
        CHECK(mubar(f.implicit_eq, f.known_lines[0], f.known_lines[1]) == f.expected.mu - 2);
    }
    for (const char* name : {"ci22", "grass_quintic"}) {
        const FamilySpec& f = family(name, 7);
        CAPTURE(name);
        int want = 3 * f.expected.mu - 4;
        CHECK(sigma_degree(f.implicit_eq, f.known_lines[0], 7) == want);
        CHECK(sigma_degree_interpolated(f.implicit_eq, f.known_lines[0], 7) == want);
    }
}

TEST_CASE("quadric bundle probe separates the quartic from the Segre cube") {
    const FamilySpec& q = family("ci22", 7);
    CHECK_FALSE(quadric_bundle_probe(q.implicit_eq, q.known_lines[0], 7));
    const FamilySpec& s = family("segre_cube", 7);
    CHECK(quadric_bundle_probe(s.implicit_eq, s.known_lines[0], 7));
}
