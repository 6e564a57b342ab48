#include "linefan/parse.hpp"
#include "linefan/report.hpp"
#include "linefan/suite.hpp"

#include <doctest.h>

using namespace linefan;

TEST_CASE("report keys") {
    ProbeReport r;
    r.n = 5;
    r.mu = 3;
    r.seed = 9;
    Json j = report_to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"n", "mu", "mu_samples", "mubar", "sigma_deg", "f2_rank", "sing_on_line",
                                           "sing_locus_plane_count", "nu", "reduced", "components_hint", "case", "seed"});
    CHECK(j["mubar"].is_null());
    CHECK(j["nu"].is_null());
    CHECK(j["components_hint"] == "unknown");
    CHECK(j["case"] == "unclassified");
    CHECK(j["seed"] == 9);
}

TEST_CASE("report round trip") {
    ProbeReport r;
    r.n = 4;
    r.mu = 4;
    r.mubar = 2;
    r.sigma_deg = 8;
    r.components_hint = 1;
    r.sing_on_line["1,0,0,0,0;0,1,0,0,0"] = 1;
    r.reduced["1,0,0,0,0;0,1,0,0,0"] = true;
    r.case_label = 2;
    ProbeReport back = report_from_json(Json::parse(report_to_json(r).dump()));
    CHECK(back.n == 4);
    CHECK(back.mu == 4);
    CHECK(back.mubar == 2);
    CHECK(back.sigma_deg == 8);
    CHECK(back.components_hint == 1);
    CHECK(back.sing_on_line == r.sing_on_line);
    CHECK(back.reduced == r.reduced);
    CHECK(classify(back).case_label == 2);
    CHECK_THROWS(report_from_json(Json::parse("{\"mu\": 3}")));
    CHECK_THROWS(report_from_json(Json::parse("{\"n\": 4, \"mu\": \"four\"}")));
}

TEST_CASE("family spec documents") {
    FamilySpec spec = build_family("ci22", 5);
    Json j = family_to_json(spec);
    CHECK(j["name"] == "ci22");
    CHECK(j["expected"]["case"] == 2);
    Subject s = subject_from_json(Json::parse(j.dump()));
    REQUIRE(s.family.has_value());
    CHECK(s.g == spec.implicit_eq);
    CHECK(s.lines.size() == 2);
    // an edited equation keeps the document but drops the construction
    j["implicit_eq"] = "x0^4 + x1^4 + x2^4 + x3^4 + x4^4";
    Subject edited = subject_from_json(j);
    CHECK_FALSE(edited.family.has_value());
    CHECK(edited.g.total_degree() == 4);
    CHECK_THROWS(subject_from_json(Json::parse("{\"name\": \"ci22\"}")));
}

TEST_CASE("full report on a catalog quartic") {
    Subject s = subject_from_json(family_to_json(build_family("ci22", 7)));
    ProbeReport r = build_report(s, {7, 5});
    CHECK(r.n == 4);
    CHECK(r.mu == 4);
    CHECK(r.mubar == 2);
    CHECK(r.sigma_deg == 8);
    CHECK(r.f2_rank == 3);
    CHECK(r.components_hint == 1);
    CHECK(r.case_label == 2);
    CHECK_FALSE(r.nu.has_value());
    for (const auto& [line, len] : r.sing_on_line) CHECK(len == 1);
}

TEST_CASE("bare equation without a sampler") {
    Subject s = subject_from_text("x0^4 + x1^4 + x2^4 + x3^4 + x4^4");
    ProbeReport r = build_report(s, {0, 3});
    CHECK_FALSE(r.mu.has_value());
    CHECK_FALSE(r.case_label.has_value());
    CHECK(r.sing_locus_plane_count == 0);
    CHECK_FALSE(r.unclassified_reasons.empty());
}

TEST_CASE("suite filter and negative control") {
    SuiteOptions opt;
    opt.filter = "example41";
    auto ok = run_suite(opt);
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].index == 1);
    CHECK(ok[0].passed);
    opt.example41_text = kExample41Mutated;
    auto bad = run_suite(opt);
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].passed);
    Json j = suite_to_json(bad);
    CHECK(j["passed"] == false);
    CHECK(j["first_failure"] == "criterion 1 (example41 fan structure)");
    opt.filter = "no such criterion";
    CHECK(run_suite(opt).empty());
}
