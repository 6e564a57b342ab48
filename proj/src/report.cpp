#include "linefan/report.hpp"

#include "linefan/parse.hpp"

#include <algorithm>

namespace linefan {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::optional<int> optional_int(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number_integer()) throw MathError(std::string("field ") + key + " is not an integer");
    return j.at(key).get<int>();
}

PointSampler sampler_for(const MultiPoly& g, const std::optional<ProjPoint>& base) {
    if (g.total_degree() != 3 || !base) return {};
    return cubic_point_sampler(g, *base);
}

}  // namespace

Json fan_to_json(const FanCount& fc) {
    Json j;
    j["distinct"] = fc.distinct;
    j["total"] = fc.bezout_total;
    j["infinite"] = fc.infinite;
    j["multiplicities"] = fc.mult_profile;
    Json pts = Json::array();
    for (const auto& p : fc.rational_points) pts.push_back(p.point.to_string());
    j["rational_points"] = pts;
    return j;
}

Json mu_samples_to_json(const std::vector<MuSample>& samples) {
    Json out = Json::array();
    for (const auto& s : samples) {
        Json j;
        j["point"] = s.point.to_string();
        if (s.fan) {
            j["distinct"] = s.fan->distinct;
            j["total"] = s.fan->bezout_total;
            j["infinite"] = s.fan->infinite;
        } else {
            j["distinct"] = nullptr;
        }
        if (!s.note.empty()) j["note"] = s.note;
        out.push_back(std::move(j));
    }
    return out;
}

Json report_to_json(const ProbeReport& r) {
    Json j;
    j["n"] = r.n;
    j["mu"] = optional_json(r.mu);
    j["mu_samples"] = mu_samples_to_json(r.mu_samples);
    j["mubar"] = optional_json(r.mubar);
    j["sigma_deg"] = optional_json(r.sigma_deg);
    j["f2_rank"] = optional_json(r.f2_rank);
    j["sing_on_line"] = Json::object();
    for (const auto& [line, len] : r.sing_on_line) j["sing_on_line"][line] = len;
    j["sing_locus_plane_count"] = optional_json(r.sing_locus_plane_count);
    j["nu"] = optional_json(r.nu);
    j["reduced"] = Json::object();
    for (const auto& [line, red] : r.reduced) j["reduced"][line] = red;
    j["components_hint"] = r.components_hint ? Json(*r.components_hint) : Json("unknown");
    j["case"] = r.case_label ? Json(*r.case_label) : Json("unclassified");
    j["seed"] = r.seed;
    return j;
}

ProbeReport report_from_json(const Json& j) {
    if (!j.is_object()) throw MathError("report is not a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw MathError("report has no degree n");
    ProbeReport r;
    r.n = j.at("n").get<int>();
    r.mu = optional_int(j, "mu");
    r.mubar = optional_int(j, "mubar");
    r.sigma_deg = optional_int(j, "sigma_deg");
    r.f2_rank = optional_int(j, "f2_rank");
    r.sing_locus_plane_count = optional_int(j, "sing_locus_plane_count");
    r.nu = optional_int(j, "nu");
    if (j.contains("components_hint") && j.at("components_hint").is_number_integer()) {
        r.components_hint = j.at("components_hint").get<int>();
    }
    if (j.contains("sing_on_line") && j.at("sing_on_line").is_object()) {
        for (const auto& [k, v] : j.at("sing_on_line").items()) r.sing_on_line[k] = v.get<int>();
    }
    if (j.contains("reduced") && j.at("reduced").is_object()) {
        for (const auto& [k, v] : j.at("reduced").items()) r.reduced[k] = v.get<bool>();
    }
    if (j.contains("seed") && j.at("seed").is_number_unsigned()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

Json family_to_json(const FamilySpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["seed"] = spec.seed;
    j["source_dim"] = spec.ambient_dim;
    j["implicit_eq"] = to_string(spec.implicit_eq);
    Json lines = Json::array();
    for (const auto& l : spec.known_lines) lines.push_back(l.to_string());
    j["known_lines"] = lines;
    j["base_point"] = spec.base_point ? Json(spec.base_point->to_string()) : Json(nullptr);
    j["expected"] = {{"n", spec.expected.n},
                     {"mu", spec.expected.mu},
                     {"components", spec.expected.components},
                     {"case", spec.expected.case_label}};
    return j;
}

Subject subject_from_json(const Json& doc) {
    const Json& j = doc.contains("result") ? doc.at("result") : doc;
    if (!j.is_object() || !j.contains("implicit_eq") || !j.at("implicit_eq").is_string()) {
        throw MathError("spec document has no implicit_eq");
    }
    Subject s;
    s.g = parse_hypersurface(j.at("implicit_eq").get<std::string>());
    if (j.contains("known_lines")) {
        for (const auto& l : j.at("known_lines")) s.lines.push_back(LineP4::parse(l.get<std::string>()));
    }
    if (j.contains("base_point") && j.at("base_point").is_string()) {
        s.base_point = ProjPoint::parse(j.at("base_point").get<std::string>());
    }
    if (j.contains("name") && j.contains("seed") && j.at("seed").is_number_unsigned()) {
        const auto name = j.at("name").get<std::string>();
        if (std::find(family_names().begin(), family_names().end(), name) != family_names().end()) {
            FamilySpec spec = build_family(name, j.at("seed").get<std::uint64_t>());
            if (spec.implicit_eq == s.g) s.family = std::move(spec);
        }
    }
    return s;
}

Subject subject_from_text(const std::string& text) {
    Subject s;
    s.g = parse_hypersurface(text);
    check_hypersurface(s.g);
    return s;
}

ProbeReport build_report(const Subject& s, const ReportOptions& opt) {
    ProbeReport r;
    r.n = s.g.total_degree();
    r.seed = opt.seed;
    auto attempt = [&](const char* what, auto&& probe) {
        try {
            probe();
        } catch (const MathError& e) {
            r.unclassified_reasons.push_back(std::string(what) + ": " + e.what());
        }
    };
    PointSampler sampler = s.family ? s.family->sampler : sampler_for(s.g, s.base_point);
    if (sampler) {
        attempt("mu", [&] {
            MuResult m = mu_generic(s.g, sampler, opt.trials, opt.seed);
            r.mu = m.mu;
            r.mu_samples = std::move(m.samples);
        });
    }
    std::optional<ProjPoint> smooth = s.base_point;
    for (const auto& sample : r.mu_samples) {
        if (sample.fan && !sample.fan->infinite) {
            smooth = sample.point;
            break;
        }
    }
    if (smooth) attempt("f2_rank", [&] { r.f2_rank = f2_rank(s.g, *smooth); });
    for (const auto& l : s.lines) {
        attempt("sing_on_line", [&] { r.sing_on_line[l.to_string()] = singular_points_on_line(s.g, l); });
        attempt("reduced", [&] { r.reduced[l.to_string()] = reduced_at_line(s.g, l).reduced; });
    }
    if (r.n >= 4 && !s.lines.empty()) {
        if (s.lines.size() >= 2) attempt("mubar", [&] { r.mubar = mubar(s.g, s.lines[0], s.lines[1]); });
        attempt("sigma_deg", [&] { r.sigma_deg = sigma_degree(s.g, s.lines[0], opt.seed); });
    }
    attempt("sing_locus", [&] { r.sing_locus_plane_count = sing_locus_plane_count(s.g, opt.seed); });
    if (r.n == 3) attempt("nu", [&] { r.nu = lines_on_surface(hyperplane_section(s.g, opt.seed), opt.seed).count; });
    if (s.family) r.components_hint = s.family->expected.components;
    if (!sampler) r.unclassified_reasons.emplace_back("mu: no rational point sampler for this input");
    Classification c = classify(r);
    r.case_label = c.case_label;
    for (auto& f : c.failed) r.unclassified_reasons.push_back(std::move(f));
    return r;
}

}  // namespace linefan
