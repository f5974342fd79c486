// Command-line front end: construct covers and voltage tables, report
// eigenspace dimensions, verify the 72-vertex support, identify local
// actions, and run the full certification pipeline.
//
// Exit codes: 0 success, 1 check failure, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atcover/certify.hpp"
#include "atcover/eigenspace.hpp"
#include "atcover/localaction.hpp"
#include "atcover/mk.hpp"

namespace {

int cmd_build(int n, const std::string& out_dir, bool dot) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    atcover::Graph mk = atcover::build_mk();
    atcover::VoltageAssignment zeta = atcover::mk_voltage(mk, n);
    atcover::Cover cover = atcover::derived_cover(zeta);

    auto write_file = [](const fs::path& path, const std::string& text) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << text;
    };
    const std::string suffix = "_n" + std::to_string(n);
    write_file(fs::path(out_dir) / ("cover" + suffix + ".json"), atcover::to_json(cover.graph));
    write_file(fs::path(out_dir) / ("voltage" + suffix + ".json"), zeta.to_json());
    if (dot) write_file(fs::path(out_dir) / ("cover" + suffix + ".dot"), atcover::to_dot(cover.graph));
    std::cout << "wrote cover with " << cover.graph.n << " vertices to " << out_dir << "\n";
    return 0;
}

int cmd_eigen(int n) {
    atcover::Cover cover = atcover::derived_cover(atcover::mk_voltage(atcover::build_mk(), n));
    std::cout << atcover::eigen_report(cover).to_json();
    return 0;
}

int cmd_verify_support(int n, const std::string& file) {
    atcover::Cover cover = atcover::derived_cover(atcover::mk_voltage(atcover::build_mk(), n));
    auto support = file.empty() ? atcover::support72_vertices(cover)
                                : atcover::support72_vertices(cover, file);
    atcover::SupportCheck sc = atcover::verify_eigen_support(cover.graph, support);
    nlohmann::json j;
    j["n"] = n;
    j["support_size"] = support.size();
    j["ok"] = sc.ok;
    auto violations = nlohmann::json::array();
    for (int v : sc.violations) violations.push_back(cover.vertex_label(v));
    j["violations"] = std::move(violations);
    std::cout << j.dump(2) << "\n";
    return sc.ok ? 0 : 1;
}

int cmd_local_action(int n, const std::string& group, const std::string& vertex_label) {
    atcover::GammaScaffold gs = atcover::build_gamma(n);
    atcover::Construction c;
    if (group == "g1")
        c = atcover::Construction::G1;
    else if (group == "g2")
        c = atcover::Construction::G2;
    else if (group == "g3")
        c = atcover::Construction::G3;
    else
        throw CLI::ValidationError("--group must be one of g1, g2, g3");

    int vertex = -1;
    if (!vertex_label.empty()) {
        vertex = atcover::find_vertex(gs.cover.graph, vertex_label);
        if (vertex < 0) throw std::runtime_error("unknown cover vertex label: " + vertex_label);
    }
    std::cout << atcover::local_action(gs, c, vertex).to_json();
    return 0;
}

int cmd_certify(int n_max, bool parallel, const std::string& json_path) {
    atcover::CertifyOptions options;
    options.n_max = n_max;
    options.parallel = parallel;
    atcover::CertifyResult result = atcover::certify(options);
    std::string text = result.report.dump(2) + "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text;
    }
    std::cout << text;
    return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and certification for voltage covers of the "
                 "Moebius-Kantor graph and their doubled 6-valent graphs"};
    app.require_subcommand(1);

    int n = 1;
    std::string out_dir = ".";
    bool dot = false;
    auto* build = app.add_subcommand("build", "write a cover graph and its voltage table");
    build->add_option("--n", n, "cover modulus")->required()->check(CLI::PositiveNumber);
    build->add_option("--out", out_dir, "output directory")->required();
    build->add_flag("--dot", dot, "also write DOT output");

    int eigen_n = 1;
    auto* eigen = app.add_subcommand("eigen", "report the 1-eigenspace dimension");
    eigen->add_option("--n", eigen_n, "cover modulus")->required()->check(CLI::PositiveNumber);

    int vs_n = 3;
    std::string vs_file;
    auto* verify = app.add_subcommand("verify-s1", "verify the 72-vertex eigenvector support");
    verify->add_option("--n", vs_n, "cover modulus (>= 3)")->required()->check(CLI::PositiveNumber);
    verify->add_option("--file", vs_file, "alternative support fixture file");

    int la_n = 1;
    std::string la_group, la_vertex;
    auto* local = app.add_subcommand("local-action", "identify a vertex-stabiliser local action");
    local->add_option("--n", la_n, "cover modulus")->required()->check(CLI::PositiveNumber);
    local->add_option("--group", la_group, "construction: g1, g2 or g3")->required();
    local->add_option("--vertex", la_vertex, "cover vertex label, e.g. \"a 0 0 0 0\"");

    int n_max = 3;
    bool parallel = false, big = false;
    std::string json_path;
    auto* cert = app.add_subcommand("certify", "run the full certification pipeline");
    cert->add_option("--n-max", n_max, "largest cover modulus")->check(CLI::PositiveNumber);
    cert->add_flag("--parallel", parallel, "fan the moduli out across threads");
    cert->add_flag("--big", big, "allow n >= 4 (the n = 4 cover has 4096 vertices)");
    cert->add_option("--json", json_path, "also write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(n, out_dir, dot);
        if (eigen->parsed()) return cmd_eigen(eigen_n);
        if (verify->parsed()) return cmd_verify_support(vs_n, vs_file);
        if (local->parsed()) return cmd_local_action(la_n, la_group, la_vertex);
        if (cert->parsed()) {
            if (n_max >= 4 && !big) {
                std::cerr << "certify: n-max >= 4 needs --big (large covers; expect extra "
                             "runtime and memory)\n";
                return 2;
            }
            return cmd_certify(n_max, parallel, json_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
