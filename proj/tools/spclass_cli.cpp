#include "CLI11.hpp"
#include "json.hpp"

#include "spclass/catalog.hpp"
#include "spclass/driver.hpp"
#include "spclass/io.hpp"
#include "spclass/polytope.hpp"
#include "spclass/scenarios.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace spc;

namespace {

int run_validate(const std::string& path, const std::string& format) {
    WeightSystem ws = load_instance(path);
    auto violations = validate(ws);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (auto& v : violations) j.push_back({{"code", v.code}, {"message", v.message}});
        std::cout << j.dump(2) << "\n";
    } else {
        if (violations.empty()) std::cout << "ok\n";
        for (auto& v : violations) std::cout << v.code << ": " << v.message << "\n";
    }
    return violations.empty() ? 0 : 2;
}

int run_hull(const std::string& path, const std::string& format) {
    WeightSystem ws = load_instance(path);
    AffineConfig cfg(ws.points(), ws.d);
    nlohmann::json j;
    j["dim"] = hull_dim(cfg);
    auto describe = [&](const Face& f) {
        nlohmann::json o;
        o["members"] = nlohmann::json::array();
        for (int m : f.members) o["members"].push_back(ws.weights[static_cast<std::size_t>(m)].entries);
        return o;
    };
    nlohmann::json verts = nlohmann::json::array(), edges = nlohmann::json::array(),
                   faces = nlohmann::json::array();
    for (const Face& f : hull_faces(cfg, 0)) verts.push_back(describe(f));
    for (const Face& f : hull_faces(cfg, 1)) edges.push_back(describe(f));
    if (hull_dim(cfg) > 2)
        for (const Face& f : hull_faces(cfg, 2)) faces.push_back(describe(f));
    j["vertices"] = verts;
    j["edges"] = edges;
    j["two_faces"] = faces;
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "hull dimension " << j["dim"] << "\n"
                  << verts.size() << " vertices, " << edges.size() << " edges, " << faces.size()
                  << " two-faces\n";
    }
    return 0;
}

int run_classify(const std::string& path, const std::string& format, unsigned seed, double tol,
                 bool disconnected) {
    WeightSystem ws = load_instance(path);
    if (disconnected) ws.k_connected = false;
    ClassifyOptions opt;
    opt.seed = seed;
    opt.tol = tol;
    Verdict v = classify_instance(ws, opt);
    std::cout << (format == "json" ? verdict_to_json(v) : verdict_to_text(v)) << "\n";
    return 0;
}

int run_solve(const std::string& path, const std::string& support_path, const std::string& format,
              unsigned seed, double tol, bool verify_too) {
    WeightSystem ws = load_instance(path);
    if (!ws.a_values) throw input_error("solve needs numeric coefficients in the instance");
    SupportSet C;
    if (!support_path.empty()) {
        C = load_support(support_path, ws.r());
    } else {
        auto pivot = fano_pivot(ws);
        if (!pivot) throw input_error("no support file and no canonical support available");
        C = fano_support(ws, *pivot);
    }
    auto violations = check_support(C, ws);
    EqnSystem sys = build_eqnF(C, ws);
    CoefficientAssignment sol = solve(sys, seed, tol);
    nlohmann::json j;
    j["support_violations"] = nlohmann::json::array();
    for (auto& v : violations)
        j["support_violations"].push_back({{"code", v.code}, {"message", v.message}});
    j["status"] = sol.status == CoefficientAssignment::Status::SOLVED      ? "SOLVED"
                  : sol.status == CoefficientAssignment::Status::INFEASIBLE ? "INFEASIBLE"
                                                                            : "UNDECIDED";
    j["values"] = sol.values;
    j["residual"] = sol.residual;
    j["detail"] = sol.detail;
    nlohmann::json pts = nlohmann::json::array();
    for (const QVector& p : C.points) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i < p.size(); ++i) row.push_back(to_string(p[i]));
        pts.push_back(row);
    }
    j["support"] = pts;
    if (verify_too && sol.status == CoefficientAssignment::Status::SOLVED) {
        VerifyReport rep = verify(C, sol.values, ws, tol, seed);
        j["verify"] = {{"pass", rep.pass},
                       {"max_equation_residual", rep.max_equation_residual},
                       {"max_spot_defect", rep.max_spot_defect}};
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status " << j["status"].get<std::string>() << ", residual " << sol.residual
                  << "\n";
    }
    return 0;
}

int run_verify(const std::string& path, const std::string& solution_path,
               const std::string& format, unsigned seed, double tol) {
    WeightSystem ws = load_instance(path);
    if (!ws.a_values) throw input_error("verify needs numeric coefficients in the instance");
    nlohmann::json sj = nlohmann::json::parse(read_file(solution_path));
    SupportSet C;
    for (auto& row : sj["support"]) {
        std::vector<Rat> e;
        for (auto& x : row)
            e.push_back(x.is_string() ? parse_rational(x.get<std::string>())
                                      : parse_rational(x.dump()));
        C.points.push_back(QVector(std::move(e)));
    }
    std::vector<double> F;
    for (auto& x : sj["values"]) F.push_back(x.get<double>());
    VerifyReport rep = verify(C, F, ws, tol, seed);
    nlohmann::json j = {{"pass", rep.pass},
                        {"max_equation_residual", rep.max_equation_residual},
                        {"max_spot_defect", rep.max_spot_defect}};
    std::cout << (format == "json" ? j.dump(2) : std::string(rep.pass ? "pass" : "FAIL")) << "\n";
    return rep.pass ? 0 : 1;
}

int run_catalog(const std::string& format, const std::string& filter) {
    auto matches = [&](const std::string& tag) {
        if (filter.empty()) return true;
        if (filter.back() == '*') return tag.rfind(filter.substr(0, filter.size() - 1), 0) == 0;
        return tag == filter;
    };
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const FaceShape& s : catalog()) {
            if (!matches(s.tag)) continue;
            nlohmann::json o;
            o["tag"] = s.tag;
            o["kind"] = static_cast<int>(s.kind);
            o["vertices"] = s.verts;
            o["extras"] = s.extras;
            o["never_face"] = s.never_face;
            if (s.is_triangle()) {
                auto dump_vec = [](const std::vector<Rat>& v) {
                    nlohmann::json a = nlohmann::json::array();
                    for (const Rat& x : v) a.push_back(to_string(x));
                    return a;
                };
                o["c"] = dump_vec(s.c);
                o["a"] = dump_vec(s.a);
                o["a2"] = dump_vec(s.ap);
                o["constraints"] = constraints_for(s.tag).str();
            }
            j.push_back(o);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const FaceShape& s : catalog()) {
        if (!matches(s.tag)) continue;
        std::cout << std::left << std::setw(6) << s.tag;
        for (const auto& v : s.verts) {
            std::cout << " (";
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
            std::cout << ")";
        }
        if (s.never_face) std::cout << "  [never a face]";
        std::cout << "\n";
    }
    return 0;
}

int run_regress(const std::string& filter, const std::string& format, long dmax_override,
                unsigned seed) {
    bool all_pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const Scenario& sc : named_scenarios()) {
        if (!filter.empty() && sc.name.find(filter) == std::string::npos &&
            sc.group.find(filter) == std::string::npos)
            continue;
        auto t0 = std::chrono::steady_clock::now();
        long dmax = dmax_override > 0 ? dmax_override : sc.dmax;
        ScenarioResult res = sc.run(dmax, seed);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        all_pass = all_pass && res.pass;
        if (format == "json") {
            rows.push_back({{"name", sc.name},
                            {"group", sc.group},
                            {"pass", res.pass},
                            {"expected", res.expected},
                            {"observed", res.observed},
                            {"ms", ms}});
        } else {
            std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(22)
                      << sc.name << " expected: " << res.expected;
            if (!res.pass) std::cout << "  observed: " << res.observed;
            std::cout << "  (" << ms << " ms)\n";
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superpotential existence classifier for cohomogeneity-one weight systems"};
    app.require_subcommand(1);

    std::string instance, support_file, solution_file, format = "text", filter, scenario;
    unsigned seed = 1;
    double tol = 1e-10;
    long dmax = 0;
    bool disconnected = false;

    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "random seed");
    app.add_option("--tol", tol, "numeric tolerance");
    app.add_option("--dmax", dmax, "dimension search bound override");
    app.add_flag("--k-disconnected", disconnected, "drop the connected-isotropy hypothesis");

    auto* v = app.add_subcommand("validate", "structural checks on an instance");
    v->add_option("instance", instance)->required();
    auto* h = app.add_subcommand("hull", "hull dimension and face lists");
    h->add_option("instance", instance)->required();
    auto* c = app.add_subcommand("classify", "run the full classification pipeline");
    c->add_option("instance", instance)->required();
    auto* so = app.add_subcommand("solve", "assemble and solve the coefficient system");
    so->add_option("instance", instance)->required();
    so->add_option("--support", support_file, "support set file");
    auto* ve = app.add_subcommand("verify", "re-verify a solution file");
    ve->add_option("instance", instance)->required();
    ve->add_option("--solution", solution_file, "solution file (output of solve)")->required();
    auto* ca = app.add_subcommand("catalog", "dump the 2-face catalog");
    ca->add_option("--filter", filter, "tag or prefix* filter");
    auto* re = app.add_subcommand("regress", "run the regression scenarios");
    re->add_option("--scenario", scenario, "name or group substring filter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return run_validate(instance, format);
        if (h->parsed()) return run_hull(instance, format);
        if (c->parsed()) return run_classify(instance, format, seed, tol, disconnected);
        if (so->parsed()) return run_solve(instance, support_file, format, seed, tol, true);
        if (ve->parsed()) return run_verify(instance, solution_file, format, seed, tol);
        if (ca->parsed()) return run_catalog(format, filter);
        if (re->parsed()) return run_regress(scenario, format, dmax, seed);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const standing_assumption_error& e) {
        std::cerr << "standing assumption violated: " << e.what() << "\n";
        return 3;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
