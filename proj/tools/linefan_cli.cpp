// linefan: probes of the line geometry of hypersurfaces in P^4.
//
// JSON results go to stdout, human-readable tables to stderr.
// Exit status: 0 success, 1 probe or input error, 2 verification failure.

#include "linefan/parse.hpp"
#include "linefan/report.hpp"
#include "linefan/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace linefan;

namespace {

constexpr int kExitProbeError = 1;
constexpr int kExitVerifyFailed = 2;

struct Options {
    std::string eq_file;
    std::string point;
    std::vector<std::string> lines;
    std::uint64_t seed = 0;
    int trials = 7;
    std::string filter;
    std::string out;
    std::string fixture;
    std::string probe;
    std::string family;
    std::string report_file;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text << '\n';
}

Json envelope(const std::string& command, std::uint64_t seed) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Subject load_subject(const Options& o) {
    if (o.eq_file.empty()) throw UsageError("--eq is required");
    std::string text = read_file(o.eq_file);
    auto first = text.find_first_not_of(" \t\r\n");
    Subject s = first != std::string::npos && text[first] == '{' ? subject_from_json(Json::parse(text)) : subject_from_text(text);
    // explicit lines replace the known lines of a catalog document
    if (!o.lines.empty()) s.lines.clear();
    for (const auto& l : o.lines) s.lines.push_back(LineP4::parse(l));
    return s;
}

ProjPoint require_point(const Options& o, const Subject& s) {
    if (!o.point.empty()) return ProjPoint::parse(o.point);
    if (s.base_point) return *s.base_point;
    throw UsageError("--point is required");
}

const LineP4& require_line(const Subject& s, std::size_t k) {
    if (s.lines.size() <= k) throw UsageError(k == 0 ? "--line is required" : "a second --line is required");
    return s.lines[k];
}

Json run_probe(const Options& o, std::ostream& table) {
    Subject s = load_subject(o);
    Json r;
    const std::string& p = o.probe;
    if (p == "lines-at") {
        ProjPoint pt = require_point(o, s);
        FanCount fc = lines_through_point(s.g, pt, o.seed);
        r = fan_to_json(fc);
        table << "lines through " << pt.to_string() << ": " << fc.distinct << " distinct, " << fc.bezout_total << " with multiplicity\n";
    } else if (p == "mu") {
        PointSampler sampler;
        if (s.family) {
            sampler = s.family->sampler;
        } else if (s.g.total_degree() == 3) {
            sampler = cubic_point_sampler(s.g, require_point(o, s));
        } else {
            throw MathError("no rational point sampler: pass a catalog spec, or a cubic with --point");
        }
        MuResult m = mu_generic(s.g, sampler, o.trials, o.seed);
        r["mu"] = m.mu;
        r["samples"] = mu_samples_to_json(m.samples);
        for (const auto& smp : m.samples) {
            table << smp.point.to_string() << "  " << (smp.fan ? std::to_string(smp.fan->distinct) : std::string("-")) << "\n";
        }
        table << "mu = " << m.mu << "\n";
    } else if (p == "reduced") {
        const LineP4& l = require_line(s, 0);
        std::optional<ProjPoint> base;
        if (!o.point.empty()) base = ProjPoint::parse(o.point);
        LineReducedness red = reduced_at_line(s.g, l, base);
        r["line"] = l.to_string();
        r["reduced"] = red.reduced;
        r["length"] = red.length;
        r["base"] = red.base.to_string();
        table << "reduced: " << (red.reduced ? "yes" : "no") << " (length " << red.length << ")\n";
    } else if (p == "sing-on-line") {
        const LineP4& l = require_line(s, 0);
        r["line"] = l.to_string();
        r["length"] = singular_points_on_line(s.g, l);
        table << "singular length on line: " << r["length"].get<int>() << "\n";
    } else if (p == "mubar") {
        r["mubar"] = mubar(s.g, require_line(s, 0), require_line(s, 1));
        table << "mubar = " << r["mubar"].get<int>() << "\n";
    } else if (p == "sigma-deg") {
        r["sigma_deg"] = sigma_degree(s.g, require_line(s, 0), o.seed);
        table << "deg sigma(r) = " << r["sigma_deg"].get<int>() << "\n";
    } else if (p == "f2-rank") {
        r["f2_rank"] = f2_rank(s.g, require_point(o, s));
        table << "rank of F_2 = " << r["f2_rank"].get<int>() << "\n";
    } else if (p == "sing-locus") {
        r["sing_locus_plane_count"] = sing_locus_plane_count(s.g, o.seed);
        table << "singular points on a plane: " << r["sing_locus_plane_count"].get<int>() << "\n";
    } else if (p == "nu") {
        SurfaceLines sl = lines_on_surface(hyperplane_section(s.g, o.seed), o.seed);
        r["nu"] = sl.infinite ? Json(nullptr) : Json(sl.count);
        r["infinite"] = sl.infinite;
        table << "lines in a hyperplane section: " << (sl.infinite ? std::string("infinitely many") : std::to_string(sl.count)) << "\n";
    } else if (p == "report") {
        ProbeReport rep = build_report(s, {o.seed, o.trials});
        r = report_to_json(rep);
        for (const auto& why : rep.unclassified_reasons) table << "note: " << why << "\n";
        table << "case: " << r["case"].dump() << "\n";
    } else {
        throw UsageError("unknown probe " + p);
    }
    return r;
}

Json run_catalog(const Options& o, std::ostream& table) {
    FamilySpec spec = build_family(o.family, o.seed);
    Json j = family_to_json(spec);
    if (!o.out.empty()) write_file(o.out, j.dump(2));
    table << spec.name << ": degree " << spec.implicit_eq.total_degree() << ", " << spec.implicit_eq.size() << " terms, "
          << spec.known_lines.size() << " known lines\n";
    return j;
}

Json run_classify(const Options& o, std::ostream& table) {
    Json doc = Json::parse(read_file(o.report_file));
    const Json& body = doc.contains("result") ? doc.at("result") : doc;
    ProbeReport rep = report_from_json(body);
    Classification c = classify(rep);
    Json r;
    r["case"] = c.case_label ? Json(*c.case_label) : Json("unclassified");
    r["failed"] = c.failed;
    table << "case: " << r["case"].dump() << "\n";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line geometry of hypersurfaces in P^4"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
        sub->add_option("--out", o.out, "also write the JSON result to this file");
    };

    CLI::App* probe = app.add_subcommand("probe", "run one probe on an equation");
    probe->add_option("kind", o.probe, "mu|lines-at|reduced|sing-on-line|mubar|sigma-deg|f2-rank|sing-locus|nu|report")
        ->required()
        ->check(CLI::IsMember({"mu", "lines-at", "reduced", "sing-on-line", "mubar", "sigma-deg", "f2-rank", "sing-locus", "nu", "report"}));
    probe->add_option("--eq", o.eq_file, "equation file (polynomial text or catalog spec JSON)")->required();
    probe->add_option("--point", o.point, "point a,b,c,d,e");
    probe->add_option("--line", o.lines, "line p1;p2 (repeat for two lines)");
    probe->add_option("--trials", o.trials, "sample points for mu")->capture_default_str()->check(CLI::PositiveNumber);
    add_common(probe);

    CLI::App* catalog = app.add_subcommand("catalog", "catalog families");
    catalog->require_subcommand(1);
    CLI::App* build = catalog->add_subcommand("build", "build a family and print its spec");
    build->add_option("name", o.family, "family name")->required()->check(CLI::IsMember(family_names()));
    add_common(build);

    CLI::App* cls = app.add_subcommand("classify", "classify a probe report");
    cls->add_option("report", o.report_file, "report JSON")->required();
    cls->add_option("--seed", o.seed, "recorded only")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run the regression suite");
    verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
    verify->add_option("--trials", o.trials, "sample points for mu")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--filter", o.filter, "run criteria whose name or tags contain this");
    verify->add_option("--fixture", o.fixture, "replacement example41 equation file");
    verify->add_option("--out", o.out, "also write the JSON result to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        Json err = envelope("", o.seed);
        err["error"] = e.what();
        std::cout << err.dump(2) << '\n';
        return kExitProbeError;
    }

    std::string command;
    if (probe->parsed()) command = "probe " + o.probe;
    if (build->parsed()) command = "catalog build " + o.family;
    if (cls->parsed()) command = "classify";
    if (verify->parsed()) command = "verify";
    Json out = envelope(command, o.seed);
    int status = 0;
    try {
        if (probe->parsed()) {
            out["result"] = run_probe(o, std::cerr);
        } else if (build->parsed()) {
            out["result"] = run_catalog(o, std::cerr);
        } else if (cls->parsed()) {
            out["result"] = run_classify(o, std::cerr);
        } else {
            SuiteOptions so;
            so.seed = o.seed;
            so.trials = o.trials;
            so.filter = o.filter;
            if (!o.fixture.empty()) so.example41_text = read_file(o.fixture);
            auto results = run_suite(so);
            for (const auto& r : results) {
                std::fprintf(stderr, "%d  %-24s %-4s %8.2f s  %s\n", r.index, r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                             r.failure.c_str());
            }
            out["timestamp"] = utc_timestamp();
            out["result"] = suite_to_json(results);
            if (results.empty()) {
                out["error"] = "no criterion matches the filter";
                status = kExitProbeError;
            } else if (!out["result"]["passed"].get<bool>()) {
                out["error"] = out["result"]["first_failure"].get<std::string>() + " failed";
                status = kExitVerifyFailed;
            }
        }
    } catch (const std::exception& e) {
        out["error"] = e.what();
        status = kExitProbeError;
    }
    std::string text = out.dump(2);
    std::cout << text << '\n';
    if (!o.out.empty() && !build->parsed()) {
        try {
            write_file(o.out, text);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return kExitProbeError;
        }
    }
    return status;
}
