#pragma once

#include "flagflow/holonomy.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace flagflow {

using Json = nlohmann::ordered_json;

/// One query record inside a scenario. Kind-specific rational parameters are
/// all carried as "p/q" strings in the JSON document.
struct Query {
    std::string kind;
    std::optional<Rat> s;
    std::optional<Rat> t;
    std::optional<Rat> h;
    std::vector<Rat> samples;
};

/// A self-contained problem description: base flag, Einstein constant,
/// bundle shape, fibers, and the list of queries to run.
struct Scenario {
    SimpleType root_type{Family::A, 1};
    std::vector<int> parabolic;  // 1-based simple-root indices
    Rat lambda = 1;
    std::optional<std::string> shape;  // "theorem_a" | "theorem_b"
    std::optional<Int> k;
    std::vector<IntVec> fibers;
    std::vector<Query> queries;
};

struct ScenarioError {
    std::string path;
    std::string message;
};

/// Thrown on structurally broken documents (exit code 2 territory).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when the document parses but fails validation; carries every
/// error found, not just the first (exit code 3 territory).
struct ValidationError : std::runtime_error {
    std::vector<ScenarioError> errors;
    explicit ValidationError(std::vector<ScenarioError> errs)
        : std::runtime_error(errs.empty() ? "validation failed" : errs.front().path + ": " + errs.front().message),
          errors(std::move(errs)) {}
};

namespace detail {

inline const std::set<std::string> kQueryKinds = {
    "describe", "pic0",     "flow",      "tflat",    "flat_time",         "balanced",
    "ode_check", "holonomy", "gh_limit", "cy_check", "pluriclosed_report"};

inline Rat json_rational(const Json& j, const std::string& path,
                         std::vector<ScenarioError>& errs) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            errs.push_back({path, e.what()});
            return Rat(0);
        }
    }
    errs.push_back({path, "expected an exact rational as \"p/q\" string (floats are rejected)"});
    return Rat(0);
}

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                                const std::string& path, std::vector<ScenarioError>& errs) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.contains(it.key())) errs.push_back({path + "." + it.key(), "unknown key"});
}

}  // namespace detail

/// Rebuilds the base flag named by a scenario.
inline FlagManifold scenario_flag(const Scenario& sc) {
    std::set<int> par;
    for (int i : sc.parabolic) par.insert(i - 1);
    return FlagManifold(build_root_system(sc.root_type), std::move(par));
}

/// Builds the validated bundle configuration, when the scenario has a shape.
inline TorusBundleConfig scenario_config(const Scenario& sc) {
    if (!sc.shape) throw std::domain_error("scenario has no bundle shape");
    std::vector<LineBundle> fibers;
    for (const auto& w : sc.fibers) fibers.push_back(LineBundle(w));
    if (*sc.shape == "theorem_a")
        return TorusBundleConfig::theorem_a(scenario_flag(sc), sc.lambda, sc.k.value_or(0),
                                            std::move(fibers));
    return TorusBundleConfig::theorem_b(scenario_flag(sc), sc.lambda, std::move(fibers));
}

inline Scenario parse_scenario(const std::string& document) {
    Json j;
    try {
        j = Json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("scenario document must be a JSON object");

    std::vector<ScenarioError> errs;
    Scenario sc;

    detail::reject_unknown_keys(
        j, {"root_type", "parabolic", "lambda", "shape", "k", "fibers", "queries"}, "$", errs);

    // root_type
    if (!j.contains("root_type") || !j["root_type"].is_object()) {
        errs.push_back({"$.root_type", "required object {\"family\", \"rank\"}"});
    } else {
        const Json& rt = j["root_type"];
        detail::reject_unknown_keys(rt, {"family", "rank"}, "$.root_type", errs);
        std::string fam = rt.value("family", "");
        int rank = rt.value("rank", 0);
        try {
            sc.root_type = SimpleType(family_from_letter(fam.size() == 1 ? fam[0] : '?'), rank);
        } catch (const std::exception& e) {
            errs.push_back({"$.root_type", e.what()});
        }
    }

    // parabolic
    if (j.contains("parabolic")) {
        if (!j["parabolic"].is_array()) {
            errs.push_back({"$.parabolic", "expected an array of 1-based simple-root indices"});
        } else {
            for (const auto& x : j["parabolic"]) {
                if (!x.is_number_integer()) {
                    errs.push_back({"$.parabolic", "indices must be integers"});
                    continue;
                }
                const int i = x.get<int>();
                if (i < 1 || i > sc.root_type.rank)
                    errs.push_back({"$.parabolic", "index " + std::to_string(i) + " out of range"});
                else
                    sc.parabolic.push_back(i);
            }
        }
    }

    // lambda
    if (j.contains("lambda")) {
        sc.lambda = detail::json_rational(j["lambda"], "$.lambda", errs);
        if (sc.lambda <= 0) errs.push_back({"$.lambda", "Einstein constant must be positive"});
    }

    // shape / k / fibers
    if (j.contains("shape")) {
        const std::string shape = j["shape"].is_string() ? j["shape"].get<std::string>() : "";
        if (shape != "theorem_a" && shape != "theorem_b")
            errs.push_back({"$.shape", "expected \"theorem_a\" or \"theorem_b\""});
        else
            sc.shape = shape;
    }
    if (j.contains("k")) {
        if (!j["k"].is_number_integer())
            errs.push_back({"$.k", "expected an integer"});
        else
            sc.k = Int(j["k"].get<long long>());
    }
    if (sc.shape == "theorem_a" && !sc.k) errs.push_back({"$.k", "theorem_a requires k"});
    if (sc.shape == "theorem_b" && sc.k) errs.push_back({"$.k", "theorem_b takes no k"});
    if (j.contains("fibers")) {
        if (!j["fibers"].is_array()) {
            errs.push_back({"$.fibers", "expected an array of integer weight vectors"});
        } else {
            for (const auto& f : j["fibers"]) {
                IntVec w;
                if (!f.is_array()) {
                    errs.push_back({"$.fibers", "each fiber is an integer vector over Pi \\ Pi_P"});
                    continue;
                }
                for (const auto& x : f) {
                    if (!x.is_number_integer())
                        errs.push_back({"$.fibers", "fiber entries must be integers"});
                    else
                        w.push_back(Int(x.get<long long>()));
                }
                sc.fibers.push_back(std::move(w));
            }
        }
    }

    // queries
    if (j.contains("queries")) {
        if (!j["queries"].is_array()) {
            errs.push_back({"$.queries", "expected an array of query records"});
        } else {
            int qi = 0;
            for (const auto& q : j["queries"]) {
                const std::string path = "$.queries[" + std::to_string(qi++) + "]";
                Query query;
                if (!q.is_object() || !q.contains("kind") || !q["kind"].is_string()) {
                    errs.push_back({path, "query needs a string \"kind\""});
                    continue;
                }
                detail::reject_unknown_keys(q, {"kind", "s", "t", "h", "samples"}, path, errs);
                query.kind = q["kind"].get<std::string>();
                if (!detail::kQueryKinds.contains(query.kind))
                    errs.push_back({path + ".kind", "unknown query kind '" + query.kind + "'"});
                if (q.contains("s")) query.s = detail::json_rational(q["s"], path + ".s", errs);
                if (q.contains("t")) query.t = detail::json_rational(q["t"], path + ".t", errs);
                if (q.contains("h")) query.h = detail::json_rational(q["h"], path + ".h", errs);
                if (q.contains("samples")) {
                    if (!q["samples"].is_array())
                        errs.push_back({path + ".samples", "expected an array of rationals"});
                    else
                        for (const auto& x : q["samples"])
                            query.samples.push_back(
                                detail::json_rational(x, path + ".samples", errs));
                }
                sc.queries.push_back(std::move(query));
            }
        }
    }

    // semantic validation of the bundle shape (Picard hypothesis, Pic0
    // membership) happens by building the config once
    if (errs.empty() && sc.shape) {
        try {
            scenario_config(sc);
        } catch (const std::exception& e) {
            errs.push_back({"$", e.what()});
        }
    }

    if (!errs.empty()) throw ValidationError(std::move(errs));
    return sc;
}

inline Json serialize_scenario(const Scenario& sc) {
    Json j;
    j["root_type"] = {{"family", std::string(1, family_letter(sc.root_type.family))},
                      {"rank", sc.root_type.rank}};
    j["parabolic"] = sc.parabolic;
    j["lambda"] = to_string(sc.lambda);
    if (sc.shape) j["shape"] = *sc.shape;
    if (sc.k) j["k"] = sc.k->convert_to<long long>();
    Json fibers = Json::array();
    for (const auto& f : sc.fibers) {
        Json fw = Json::array();
        for (const auto& x : f) fw.push_back(x.convert_to<long long>());
        fibers.push_back(fw);
    }
    j["fibers"] = fibers;
    Json queries = Json::array();
    for (const auto& q : sc.queries) {
        Json qj;
        qj["kind"] = q.kind;
        if (q.s) qj["s"] = to_string(*q.s);
        if (q.t) qj["t"] = to_string(*q.t);
        if (q.h) qj["h"] = to_string(*q.h);
        if (!q.samples.empty()) {
            Json ss = Json::array();
            for (const auto& x : q.samples) ss.push_back(to_string(x));
            qj["samples"] = ss;
        }
        queries.push_back(qj);
    }
    j["queries"] = queries;
    return j;
}

namespace detail {

inline Json rat_vec_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(to_string(x));
    return out;
}

inline Json int_vec_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(x.str());
    return out;
}

inline std::string query_source(const std::string& kind) {
    if (kind == "describe") return "flag-manifold generalities";
    if (kind == "pic0") return "degree-zero Picard sublattice";
    if (kind == "flow") return "Theorem A/B (b), closed-form solution";
    if (kind == "tflat") return "Theorem A (c)";
    if (kind == "flat_time") return "Theorem A (c)";
    if (kind == "balanced") return "Theorem B (c)";
    if (kind == "ode_check") return "flow equation, finite-difference residual";
    if (kind == "holonomy") return "holonomy pairing matrix";
    if (kind == "gh_limit") return "Corollary F";
    if (kind == "cy_check") return "Theorem A (d)";
    if (kind == "pluriclosed_report") return "balanced pluriclosed-flow corollary";
    return "";
}

}  // namespace detail

struct RunResult {
    Json report;
    int exit_code = 0;  // 0 ok, 4 if any query errored
};

/// Executes every query of a valid scenario; per-query errors are isolated
/// into the report's error list and never suppress other queries.
inline RunResult run_scenario(const Scenario& sc) {
    Json report;
    report["scenario"] = serialize_scenario(sc);
    Json results = Json::array();
    Json errors = Json::array();

    const FlagManifold X = scenario_flag(sc);
    std::optional<TorusBundleConfig> cfg;
    if (sc.shape) cfg.emplace(scenario_config(sc));

    auto need_s = [](const Query& q) -> const Rat& {
        if (!q.s) throw std::domain_error("query requires parameter s");
        return *q.s;
    };
    auto need_cfg = [&]() -> const TorusBundleConfig& {
        if (!cfg) throw std::domain_error("query requires a bundle shape in the scenario");
        return *cfg;
    };

    for (std::size_t i = 0; i < sc.queries.size(); ++i) {
        const Query& q = sc.queries[i];
        Json r;
        r["query"] = i;
        r["kind"] = q.kind;
        bool errored = false;
        try {
            if (q.kind == "describe") {
                r["type"] = sc.root_type.name();
                Json idx = Json::array();
                for (int c : X.complement_simples()) idx.push_back(c + 1);
                r["complement_simples"] = idx;
                r["dim_complex"] = X.dim_complex();
                r["picard_rank"] = X.picard_rank();
                r["delta_p"] = detail::rat_vec_json(X.delta_p().coords);
                try {
                    r["fano_index"] = X.fano_index().str();
                } catch (const std::exception& e) {
                    r["fano_index"] = nullptr;
                    errors.push_back({{"query", i}, {"kind", q.kind}, {"error", e.what()}});
                    errored = true;
                }
            } else if (q.kind == "pic0") {
                const KEData ke = ke_metric(X, sc.lambda);
                r["degree_functional"] =
                    detail::rat_vec_json(degree_functional(X, ke.metric).coeffs);
                Json basis = Json::array();
                for (const LineBundle& b : pic0_basis(X, ke.metric))
                    basis.push_back(detail::int_vec_json(b.weight));
                r["basis"] = basis;
            } else if (q.kind == "flow") {
                r["s"] = to_string(need_s(q));
                r["base_metric"] =
                    detail::rat_vec_json(flow_state(need_cfg(), need_s(q)).base_metric.coords);
            } else if (q.kind == "tflat") {
                r["s"] = to_string(need_s(q));
                r["value"] = to_string(t_flat_parameter(need_cfg(), need_s(q)));
            } else if (q.kind == "flat_time") {
                if (!q.t) throw std::domain_error("query requires parameter t");
                r["t"] = to_string(*q.t);
                r["value"] = to_string(flat_time(need_cfg(), *q.t));
            } else if (q.kind == "balanced") {
                const BalancedCertificate cert = is_balanced(need_cfg(), need_s(q));
                r["s"] = to_string(need_s(q));
                r["balanced"] = cert.balanced;
                r["certificate"] = detail::rat_vec_json(cert.lambda_values);
            } else if (q.kind == "ode_check") {
                if (!q.t || !q.h) throw std::domain_error("query requires parameters t and h");
                r["s"] = to_string(need_s(q));
                r["t"] = to_string(*q.t);
                r["h"] = to_string(*q.h);
                r["residual"] =
                    detail::rat_vec_json(verify_flow_ode(need_cfg(), *q.t, need_s(q), *q.h));
            } else if (q.kind == "holonomy") {
                Json m = Json::array();
                for (const RatVec& row : holonomy_matrix(need_cfg()))
                    m.push_back(detail::rat_vec_json(row));
                r["matrix"] = m;
                r["rank"] = holonomy_rank(need_cfg());
            } else if (q.kind == "gh_limit") {
                const HolonomyReport h = gh_limit(need_cfg());
                r["rank"] = h.rank;
                r["closed"] = h.closed;
                r["gh_limit_dim"] = h.gh_limit_dim;
                r["limit"] = h.limit_label;
            } else if (q.kind == "cy_check") {
                const CalabiYauReport cy = calabi_yau_integrality(need_cfg());
                r["real_class_vanishes"] = cy.real_class_vanishes;
                if (cy.integral)
                    r["integral"] = *cy.integral;
                else
                    r["integral"] = nullptr;
            } else if (q.kind == "pluriclosed_report") {
                const PluriclosedFlowReport p = pluriclosed_flow_report(need_cfg(), q.samples);
                r["bismut_ricci_class"] = detail::rat_vec_json(p.bismut_ricci_class.coords);
                Json certs = Json::array();
                for (std::size_t c = 0; c < p.certificates.size(); ++c)
                    certs.push_back({{"s", to_string(p.samples[c])},
                                     {"balanced", p.certificates[c].balanced},
                                     {"certificate",
                                      detail::rat_vec_json(p.certificates[c].lambda_values)}});
                r["samples"] = certs;
                r["non_kahler"] = p.non_kahler;
                r["non_pluriclosed"] = p.non_pluriclosed;
            } else {
                throw std::domain_error("unknown query kind '" + q.kind + "'");
            }
        } catch (const std::exception& e) {
            errors.push_back({{"query", i}, {"kind", q.kind}, {"error", e.what()}});
            errored = true;
        }
        r["source"] = detail::query_source(q.kind);
        results.push_back(r);
        (void)errored;
    }

    report["results"] = results;
    report["errors"] = errors;
    return RunResult{std::move(report), errors.empty() ? 0 : 4};
}

/// Plain-text rendering of a JSON report, one block per query.
inline std::string render_text(const Json& report) {
    std::ostringstream out;
    auto scalar = [](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    out << "scenario: " << report["scenario"].dump() << "\n";
    for (const auto& r : report["results"]) {
        out << "-- query " << r["query"] << " [" << scalar(r["kind"]) << "]\n";
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (it.key() == "query" || it.key() == "kind") continue;
            out << "   " << it.key() << ": " << scalar(it.value()) << "\n";
        }
    }
    for (const auto& e : report["errors"])
        out << "!! query " << e["query"] << ": " << scalar(e["error"]) << "\n";
    return out.str();
}

}  // namespace flagflow
