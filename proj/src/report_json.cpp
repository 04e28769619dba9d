#include "suq/report_json.hpp"

#include "suq/duality.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace suq {

using nlohmann::json;

nlohmann::json to_json(const Weight& w) {
    json j;
    j["coords"] = w.s; // n-scaled epsilon coordinates
    j["rank"] = w.rank();
    if (w.in_lattice() && w.is_dominant()) j["fundamental"] = fundamental_coords(w);
    return j;
}

Weight weight_from_json(const nlohmann::json& j) {
    return Weight(j.at("coords").get<Coords>());
}

nlohmann::json to_json(const WeightSystem& ws) {
    json j;
    j["highest"] = fundamental_coords(ws.highest);
    j["dim"] = ws.dim;
    json entries = json::array();
    for (const auto& [w, m] : ws.entries)
        entries.push_back(json{{"coords", w.s}, {"mult", m}});
    j["weights"] = std::move(entries);
    return j;
}

nlohmann::json to_json(const Hyperplane& h) {
    return json{{"normal", h.normal}};
}

nlohmann::json to_json(const Certificate& cert) {
    json j;
    j["lambda"] = to_json(cert.lambda);
    j["delta"] = cert.delta;
    json omega = json::array();
    for (const Weight& w : cert.omega) omega.push_back(w.s);
    j["omega"] = std::move(omega);
    j["hyperplane"] = to_json(cert.hyperplane);
    j["inn_outside_weighted"] = cert.inn_outside_weighted;
    j["lambda_outside"] = cert.lambda_outside;
    j["roots_outside"] = cert.roots_outside_count;
    j["kind"] = cert.kind == CertKind::NOSM ? "not-smooth" : "not-manifold";
    j["margin"] = cert.margin;
    j["route"] = cert.route;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate cert;
    cert.lambda = weight_from_json(j.at("lambda"));
    cert.delta = j.at("delta").get<int>();
    for (const auto& row : j.at("omega")) cert.omega.push_back(Weight(row.get<Coords>()));
    cert.hyperplane = Hyperplane{j.at("hyperplane").at("normal").get<Coords>()};
    cert.inn_outside_weighted = j.at("inn_outside_weighted").get<long long>();
    cert.lambda_outside = j.at("lambda_outside").get<long long>();
    cert.roots_outside_count = j.at("roots_outside").get<long long>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "not-smooth") cert.kind = CertKind::NOSM;
    else if (kind == "not-manifold") cert.kind = CertKind::NOM;
    else throw std::invalid_argument("invalid-input: unknown certificate kind");
    cert.margin = j.at("margin").get<long long>();
    cert.route = j.at("route").get<std::string>();
    return cert;
}

nlohmann::json to_json(const Report& rep) {
    json j;
    j["rank"] = rep.rank;
    j["input"] = to_json(rep.input);
    j["normalized"] = to_json(rep.normalized);
    j["delta"] = rep.delta;
    j["verdict"] = to_string(rep.verdict);
    j["mechanism"] = rep.mechanism;
    j["candidate_list_member"] = rep.candidate_list_member;
    j["mechanism_annotation"] = rep.mechanism_annotation;
    j["certificate"] = rep.certificate ? to_json(*rep.certificate) : json(nullptr);
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report rep;
    rep.rank = j.at("rank").get<int>();
    rep.input = weight_from_json(j.at("input"));
    rep.normalized = weight_from_json(j.at("normalized"));
    rep.delta = j.at("delta").get<int>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "CANDIDATE_SMOOTH") rep.verdict = Verdict::CANDIDATE_SMOOTH;
    else if (v == "NOT_SMOOTH") rep.verdict = Verdict::NOT_SMOOTH;
    else if (v == "NOT_MANIFOLD") rep.verdict = Verdict::NOT_MANIFOLD;
    else if (v == "UNRESOLVED") rep.verdict = Verdict::UNRESOLVED;
    else throw std::invalid_argument("invalid-input: unknown verdict");
    rep.mechanism = j.at("mechanism").get<std::string>();
    rep.candidate_list_member = j.at("candidate_list_member").get<bool>();
    rep.mechanism_annotation = j.at("mechanism_annotation").get<std::string>();
    if (!j.at("certificate").is_null())
        rep.certificate = certificate_from_json(j.at("certificate"));
    return rep;
}

nlohmann::json to_json(const CounterexampleRecord& rec) {
    json j;
    j["prop"] = rec.prop;
    j["x"] = rec.x.s;
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["c"] = json{{"num", rec.c_num}, {"den", rec.c_den}};
    j["observed"] = rec.observed;
    j["claimed"] = rec.claimed;
    j["tags"] = rec.tags;
    return j;
}

namespace {

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string report_csv_row(const Report& rep) {
    std::ostringstream os;
    os << rep.rank << ",\"" << join_ll(fundamental_coords(rep.input)) << "\","
       << rep.delta << "," << to_string(rep.verdict) << ",\"" << rep.mechanism
       << "\"," << (rep.certificate ? std::to_string(rep.certificate->margin) : "")
       << "," << orbit_size(rep.input) << "," << dimension(rep.input);
    return os.str();
}

std::string sweep_csv(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "rank,weight,delta,verdict,mechanism,margin,orbit_size,dim\n";
    for (const Report& rep : reports) os << report_csv_row(rep) << "\n";
    return os.str();
}

} // namespace suq
