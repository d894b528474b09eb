// flagflow: exact invariant geometry of torus bundles over flag manifolds.
//
//   flagflow run <scenario.json> [--format json|text] [--out <path>]
//   flagflow describe --type A --rank 2 --parabolic ""
//   flagflow selftest
//
// Exit codes: 0 success, 2 parse error, 3 semantic validation error,
// 4 at least one query failed.

#include "flagflow/scenario.hpp"
#include "flagflow/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_command(const std::string& scenario_path, const std::string& format,
                const std::string& out_path) {
    std::ifstream in(scenario_path);
    if (!in) {
        std::cerr << "cannot open scenario file: " << scenario_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    flagflow::Scenario sc;
    try {
        sc = flagflow::parse_scenario(buf.str());
    } catch (const flagflow::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const flagflow::ValidationError& e) {
        for (const auto& err : e.errors)
            std::cerr << "validation error at " << err.path << ": " << err.message << "\n";
        return 3;
    }

    const flagflow::RunResult result = flagflow::run_scenario(sc);
    const std::string rendered = format == "text" ? flagflow::render_text(result.report)
                                                  : result.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write: " << out_path << "\n";
            return 4;
        }
        out << rendered;
    }
    return result.exit_code;
}

int describe_command(const std::string& type, int rank, const std::string& parabolic) {
    try {
        std::set<int> par;
        std::stringstream ss(parabolic);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok.empty()) continue;
            par.insert(std::stoi(tok) - 1);
        }
        const flagflow::SimpleType st(
            flagflow::family_from_letter(type.size() == 1 ? type[0] : '?'), rank);
        const flagflow::FlagManifold X(flagflow::build_root_system(st), par);
        flagflow::Json j;
        j["type"] = st.name();
        flagflow::Json comp = flagflow::Json::array();
        for (int i : X.complement_simples()) comp.push_back(i + 1);
        j["complement_simples"] = comp;
        j["dim_complex"] = X.dim_complex();
        j["picard_rank"] = X.picard_rank();
        j["positive_roots"] = X.root_system().positive_roots().size();
        j["delta_p"] = flagflow::detail::rat_vec_json(X.delta_p().coords);
        if (X.picard_rank() > 0) j["fano_index"] = X.fano_index().str();
        std::cout << j.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant Hermitian geometry of torus bundles over flag manifolds"};
    app.require_subcommand(1);

    std::string scenario_path, format = "json", out_path;
    auto* run = app.add_subcommand("run", "Run a scenario file and emit a report");
    run->add_option("scenario", scenario_path, "Scenario JSON document")->required();
    run->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    run->add_option("--out", out_path, "Write the report to a file");

    std::string type = "A", parabolic;
    int rank = 1;
    auto* describe = app.add_subcommand("describe", "Describe a flag manifold");
    describe->add_option("--type", type, "Simple family A..G")->required();
    describe->add_option("--rank", rank, "Rank of the root system")->required();
    describe->add_option("--parabolic", parabolic,
                         "Comma-separated 1-based simple-root indices of Pi_P");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in golden suite");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(scenario_path, format, out_path);
    if (describe->parsed()) return describe_command(type, rank, parabolic);
    if (selftest->parsed()) return flagflow::run_selftest(std::cout) ? 0 : 1;
    return 1;
}
