// suq: exact combinatorics of SU(n) weight systems -- orbits, multiplicities,
// hyperplane-counting certificates, and the smooth-quotient classifier.

#include "suq/classifier.hpp"
#include "suq/duality.hpp"
#include "suq/paper_props.hpp"
#include "suq/report_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#ifdef SUQ_HAVE_OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace suq;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerificationFailure = 2;

std::vector<long long> parse_coord_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("invalid-input: bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("invalid-input: empty coordinate list");
    return out;
}

Weight parse_weight(int rank, const std::string& text, bool require_dominant = true) {
    const auto a = parse_coord_list(text);
    if (static_cast<int>(a.size()) != rank)
        throw std::invalid_argument("invalid-input: expected " + std::to_string(rank) +
                                    " coordinates, got " + std::to_string(a.size()));
    if (require_dominant)
        for (long long v : a)
            if (v < 0)
                throw std::invalid_argument(
                    "invalid-input: dominant weights need non-negative coordinates");
    return weight_from_fundamental(a);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
        if (text.empty() || text.back() != '\n') f << '\n';
    }
}

void apply_thread_env() {
#ifdef SUQ_HAVE_OPENMP
    if (const char* env = std::getenv("SUQ_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif
}

std::string text_report(const Report& rep) {
    std::ostringstream os;
    os << "rank " << rep.rank << "  weight [";
    const auto a = fundamental_coords(rep.input);
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "]  delta " << rep.delta << "  verdict " << to_string(rep.verdict);
    if (rep.certificate) os << "  margin " << rep.certificate->margin;
    if (!rep.mechanism.empty()) os << "  via " << rep.mechanism;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SU(n) weight combinatorics and quotient-smoothness classifier"};
    app.require_subcommand(1);

    int rank = 0;
    std::string weight_str, mu_str, out_path, format = "json";
    long long budget = kDefaultSearchBudget;
    int max_n = 7, coord_bound = 3, height_bound = 4;
    int r_min = 2, r_max = 8, height_max = 2;
    std::string props = "cmb1,cmb2,est,la2,elst,esn,es2n,ampl,eson,lah,lah1";
    std::string omega_kind, eval_mode = "search";

    auto add_rw = [&](CLI::App* sub, bool need_weight = true) {
        sub->add_option("-r,--rank", rank, "rank r of A_r (n = r+1)")->required();
        if (need_weight)
            sub->add_option("-w,--weight", weight_str,
                            "fundamental coordinates a1,...,ar")->required();
        sub->add_option("--out", out_path, "write output to a file");
        sub->add_option("--format", format, "json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* c_classify = app.add_subcommand("classify", "classify one highest weight");
    add_rw(c_classify);
    c_classify->add_option("--budget", budget, "certificate search node budget");

    auto* c_sweep = app.add_subcommand("sweep", "classify a whole range of weights");
    c_sweep->add_option("--r-min", r_min, "smallest rank");
    c_sweep->add_option("--r-max", r_max, "largest rank");
    c_sweep->add_option("--height-bound", height_max, "max coordinate sum");
    c_sweep->add_option("--budget", budget, "certificate search node budget");
    c_sweep->add_option("--out", out_path, "write output to a file");
    c_sweep->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* c_orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
    add_rw(c_orbit);

    auto* c_weights = app.add_subcommand("weights", "full weight diagram with multiplicities");
    add_rw(c_weights);

    auto* c_mult = app.add_subcommand("mult", "multiplicity of one weight in an irrep");
    add_rw(c_mult);
    c_mult->add_option("--mu", mu_str,
                       "target weight, fundamental coordinates (may be negative)")
        ->required();

    auto* c_dim = app.add_subcommand("dim", "Weyl dimension of an irrep");
    add_rw(c_dim);

    auto* c_delta = app.add_subcommand("delta", "duality data and realness index");
    add_rw(c_delta);

    auto* c_cert = app.add_subcommand("certificate", "find or evaluate a certificate");
    add_rw(c_cert);
    c_cert->add_option("--budget", budget, "search node budget");
    c_cert->add_option("--paper-omega", omega_kind,
                       "evaluate a published construction: alg, all, thi, ths")
        ->check(CLI::IsMember({"alg", "all", "thi", "ths"}));
    c_cert->add_option("--mode", eval_mode, "search, not-smooth, or not-manifold")
        ->check(CLI::IsMember({"search", "not-smooth", "not-manifold"}));

    auto* c_verify = app.add_subcommand("verify-paper",
                                        "exhaustive desk-scale proposition checks");
    c_verify->add_option("--max-n", max_n, "largest ambient dimension n");
    c_verify->add_option("--coord-bound", coord_bound, "coordinate bound for x");
    c_verify->add_option("--height-bound", height_bound, "height bound for lah");
    c_verify->add_option("--props", props, "comma-separated list of checks");
    c_verify->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    apply_thread_env();

    try {
        if (*c_classify) {
            const Report rep = classify(rank, parse_weight(rank, weight_str), budget);
            if (format == "json") emit(out_path, to_json(rep).dump(2));
            else if (format == "csv")
                emit(out_path, "rank,weight,delta,verdict,mechanism,margin,orbit_size,dim\n" +
                                   report_csv_row(rep));
            else emit(out_path, text_report(rep));
            return kExitOk;
        }
        if (*c_sweep) {
            SweepOptions opt;
            opt.r_min = r_min;
            opt.r_max = r_max;
            opt.height_max = height_max;
            opt.budget = budget;
            const std::vector<Report> reports = sweep(opt);
            if (format == "csv") emit(out_path, sweep_csv(reports));
            else if (format == "text") {
                std::ostringstream os;
                for (const Report& rep : reports) os << text_report(rep) << "\n";
                emit(out_path, os.str());
            } else {
                json arr = json::array();
                for (const Report& rep : reports) arr.push_back(to_json(rep));
                emit(out_path, arr.dump(2));
            }
            for (const Report& rep : reports)
                if (rep.verdict == Verdict::UNRESOLVED) return kExitVerificationFailure;
            return kExitOk;
        }
        if (*c_orbit) {
            const Weight lam = parse_weight(rank, weight_str);
            const Orbit orb = orbit(lam);
            json j;
            j["dominant"] = to_json(orb.dominant);
            j["size"] = static_cast<long long>(orb.elements.size());
            json els = json::array();
            for (const Weight& w : orb.elements) els.push_back(w.s);
            j["elements"] = std::move(els);
            emit(out_path, j.dump(2));
            return kExitOk;
        }
        if (*c_weights) {
            emit(out_path, to_json(weight_system(parse_weight(rank, weight_str))).dump(2));
            return kExitOk;
        }
        if (*c_mult) {
            const Weight lam = parse_weight(rank, weight_str);
            const Weight mu = parse_weight(rank, mu_str, /*require_dominant=*/false);
            emit(out_path, std::to_string(multiplicity(lam, mu)));
            return kExitOk;
        }
        if (*c_dim) {
            emit(out_path, std::to_string(dimension(parse_weight(rank, weight_str))));
            return kExitOk;
        }
        if (*c_delta) {
            const DualityInfo info = duality_info(parse_weight(rank, weight_str));
            json j;
            j["dual"] = to_json(info.dual);
            j["self_dual"] = info.self_dual;
            j["fs_indicator"] = info.fs_indicator;
            j["delta"] = info.delta;
            emit(out_path, j.dump(2));
            return kExitOk;
        }
        if (*c_cert) {
            const Weight lam = parse_weight(rank, weight_str);
            if (!omega_kind.empty()) {
                PaperOmega kind = omega_kind == "alg"   ? PaperOmega::alg
                                  : omega_kind == "all" ? PaperOmega::all
                                  : omega_kind == "thi" ? PaperOmega::thi
                                                        : PaperOmega::ths;
                const std::vector<Weight> omega = paper_omega(kind, rank);
                const CertResult res = eval_mode == "not-manifold"
                                           ? evaluate_nom(lam, omega)
                                           : evaluate_nosm(lam, omega);
                if (const auto* cert = std::get_if<Certificate>(&res)) {
                    emit(out_path, to_json(*cert).dump(2));
                    return kExitOk;
                }
                emit(out_path, json{{"rejected", std::get<Rejection>(res).reason}}.dump(2));
                return kExitVerificationFailure;
            }
            const std::optional<Certificate> cert = search_certificate(lam, budget);
            if (cert) {
                emit(out_path, to_json(*cert).dump(2));
                return kExitOk;
            }
            emit(out_path, json{{"rejected", "no certificate within budget"}}.dump(2));
            return kExitVerificationFailure;
        }
        if (*c_verify) {
            VerifyOptions opt;
            opt.max_n = max_n;
            opt.coord_bound = coord_bound;
            opt.height_bound = height_bound;
            const auto wanted = [&](const std::string& name) {
                return ("," + props + ",").find("," + name + ",") != std::string::npos;
            };
            json j;
            long long violations = 0;
            auto add = [&](const std::string& name,
                           const std::vector<CounterexampleRecord>& recs) {
                json arr = json::array();
                for (const auto& rec : recs) arr.push_back(to_json(rec));
                violations += static_cast<long long>(recs.size());
                j[name] = std::move(arr);
            };
            auto add_cmb = [&](const std::string& name,
                               const std::vector<CmbViolation>& recs) {
                json arr = json::array();
                for (const auto& v : recs)
                    arr.push_back(json{{"n", v.n}, {"parts", v.parts}, {"value", v.value}});
                violations += static_cast<long long>(recs.size());
                j[name] = std::move(arr);
            };
            if (wanted("cmb1")) add_cmb("cmb1", verify_cmb1(max_n));
            if (wanted("cmb2")) add_cmb("cmb2", verify_cmb2(max_n));
            if (wanted("est")) add("est", verify_est(opt));
            if (wanted("la2") || wanted("elst")) add("la2_elst", verify_la2_elst(opt));
            if (wanted("esn") || wanted("es2n") || wanted("ampl") || wanted("eson"))
                add("esn_es2n_ampl_eson", verify_esn_es2n_ampl_eson(opt));
            if (wanted("lah") || wanted("lah1")) {
                std::vector<int> rs;
                for (int r = 3; r <= max_n - 1; ++r) rs.push_back(r);
                add("lah", verify_lah(rs, opt));
            }
            j["violations"] = violations;
            emit(out_path, j.dump(2));
            return violations == 0 ? kExitOk : kExitVerificationFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitInvalidInput;
}
