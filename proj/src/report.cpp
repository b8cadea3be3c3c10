#include "holocert/report.hpp"

#include "holocert/expansion.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace holocert {

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string decimal_string(const Rational& q, unsigned digits10) {
    PrecisionGuard guard(digits10 + 10);
    BigFloat v(q);
    return v.str(static_cast<std::streamsize>(digits10));
}

nlohmann::json to_json(const RationalFunction& f, const std::string& var) {
    return f.str(var);
}

nlohmann::json to_json(const Recurrence& rec) {
    nlohmann::json j;
    j["name"] = rec.name;
    j["order"] = rec.order;
    j["offset"] = rec.offset;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : rec.coeffs) coeffs.push_back(c.str("n"));
    j["coeffs"] = coeffs;
    nlohmann::json initials = nlohmann::json::array();
    for (const auto& v : rec.initials) initials.push_back(to_string(v));
    j["initial"] = initials;
    if (rec.scale) j["scale"] = rec.scale->str("n");
    return j;
}

nlohmann::json to_json(const BoundPair& pair) {
    nlohmann::json j;
    j["g"] = pair.g.str("n");
    j["f"] = pair.f.str("n");
    j["valid_from"] = pair.valid_from;
    j["provenance"] = to_string(pair.provenance);
    return j;
}

nlohmann::json to_json(const BoundCertificate& cert) {
    nlohmann::json j;
    j["base_index"] = cert.base_index;
    j["base_check"] = {{"l", to_string(cert.base_l)},
                       {"b", to_string(cert.base_b)},
                       {"h", to_string(cert.base_h)}};
    j["map_direction"] = cert.map_decreasing ? "decreasing" : "increasing";
    j["induction_holds_from"] = {cert.induction_lower_hold, cert.induction_upper_hold};
    j["ratio_lower"] = cert.l.str("n");
    j["ratio_upper"] = cert.h.str("n");
    return j;
}

nlohmann::json to_json(const std::vector<BoundViolation>& violations) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : violations) {
        const char* kind = v.kind == BoundViolation::Kind::below_lower  ? "below-lower"
                           : v.kind == BoundViolation::Kind::above_upper ? "above-upper"
                                                                         : "pole";
        arr.push_back({{"n", v.n}, {"kind", kind}, {"boundary", v.boundary}});
    }
    return arr;
}

namespace {

nlohmann::json refinement_json(index_t horizon, const std::optional<index_t>& last_violation,
                               index_t refined_start, const std::vector<index_t>& boundaries,
                               std::size_t violation_count, const char* convention) {
    nlohmann::json j;
    j["horizon"] = horizon;
    if (last_violation) j["last_violation"] = *last_violation;
    j["refined_start"] = refined_start;
    j["violation_count"] = violation_count;
    j["boundary_indices"] = boundaries;
    j["index_convention"] = convention;
    j["beyond_horizon"] = "guaranteed by the asymptotic thresholds from N on";
    return j;
}

}  // namespace

nlohmann::json to_json(const LogMono3Report& report) {
    nlohmann::json j;
    j["check"] = "logmono3";
    j["sequence"] = report.sequence_name;
    if (report.scale) j["scale"] = report.scale->str("n");
    j["bounds"] = to_json(report.pair);
    if (report.certificate) j["certificate"] = to_json(*report.certificate);
    j["anchor"] = report.anchor;
    j["thresholds"] = {{"N1", report.N1},
                       {"N2", report.thresholds.N2},
                       {"N3", report.thresholds.N3},
                       {"N4", report.thresholds.N4},
                       {"N", report.thresholds.N}};
    j["refinement"] = refinement_json(
        report.refinement.horizon, report.refinement.last_violation, report.refinement.refined_start,
        report.refinement.boundary_indices, report.refinement.violation_count,
        "claim start M means the three u-inequalities hold for every n in (M, horizon]");
    j["sandwich_violations"] = to_json(report.sandwich_violations);
    j["claim"] = "3-log-monotone from index " + std::to_string(report.refinement.refined_start);
    return j;
}

nlohmann::json to_json(const Laguerre2Report& report) {
    nlohmann::json j;
    j["check"] = "laguerre2";
    j["sequence"] = report.sequence_name;
    if (report.scale) j["scale"] = report.scale->str("n");
    j["bounds"] = to_json(report.pair);
    if (report.certificate) j["certificate"] = to_json(*report.certificate);
    j["anchor"] = report.anchor;
    j["thresholds"] = {{"N1", report.N1}, {"N2", report.thresholds.N2}, {"N", report.thresholds.N}};
    j["refinement"] = refinement_json(
        report.refinement.horizon, report.refinement.last_violation, report.refinement.refined_start,
        report.refinement.boundary_indices, report.refinement.violation_count,
        "claim start M means L_2(a_n) > 0 for every n in [M, horizon]");
    j["sandwich_violations"] = to_json(report.sandwich_violations);
    j["claim"] =
        "order-2 Laguerre inequality from index " + std::to_string(report.refinement.refined_start);
    return j;
}

nlohmann::json report_envelope(const std::string& command, const std::string& input_path,
                               const std::string& input_bytes) {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    if (!input_path.empty())
        j["input"] = {{"path", input_path}, {"digest", content_digest(input_bytes)}};
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write report file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace holocert
