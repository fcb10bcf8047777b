// Command-line surface: series expansion, terminating evaluation, ODE
// derivation, exponent analysis, pullbacks, and catalog verification.
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "appell/catalog.hpp"
#include "json.hpp"

using namespace appell;

namespace {

// exit codes: 0 success / all pass, 1 verification failure, 2 usage error
constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2;

ParamMap parse_params(const std::string& text) {
    ParamMap m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--params expects name=p/q pairs, got '" + item + "'");
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        m[key] = parse_rat(item.substr(eq + 1));
    }
    return m;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Curve parse_curve(const std::string& text) {
    auto parts = split_list(text, ';');
    if (parts.size() != 2)
        throw std::invalid_argument("--curve expects \"x=<ratfunc>;y=<ratfunc>\"");
    RatFunc comp[2];
    for (auto& p : parts) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("curve component needs '='");
        std::string name = p.substr(0, eq);
        name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
        int idx = name == "x" ? 0 : name == "y" ? 1 : -1;
        if (idx < 0) throw std::invalid_argument("curve components are named x and y");
        comp[idx] = parse_ratfunc(p.substr(eq + 1), "t");
    }
    return Curve{comp[0], comp[1]};
}

AppellSpec parse_system(const std::string& name, const ParamMap& p) {
    auto need = [&](const char* k) {
        auto it = p.find(k);
        if (it == p.end())
            throw std::invalid_argument(std::string("--params is missing '") + k + "'");
        return it->second;
    };
    if (name == "F1") return AppellSpec::f1(need("a"), need("b1"), need("b2"), need("c"));
    if (name == "F2")
        return AppellSpec::f2(need("a"), need("b1"), need("b2"), need("c1"), need("c2"));
    if (name == "F3")
        return AppellSpec::f3(need("a1"), need("a2"), need("b1"), need("b2"), need("c"));
    if (name == "F4") return AppellSpec::f4(need("a"), need("b"), need("c1"), need("c2"));
    throw std::invalid_argument("--system must be one of F1, F2, F3, F4");
}

// --ode accepts a JSON file path or builtin:<name>:<p1,p2,...>
Lode load_ode(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        auto rest = spec.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--ode builtin:<euler|hpg32|kato>:<p1,p2,...>");
        std::vector<Rat> params;
        for (const auto& s : split_list(rest.substr(colon + 1), ','))
            params.push_back(parse_rat(s));
        return builtin_ode(rest.substr(0, colon), params);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open ODE file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return lode_from_json(buf.str());
}

std::string genval_text(const GenSeries2& g, const std::vector<std::string>& vars, int order) {
    GenSeries2 n = g.normalized();
    std::string vx = vars.size() > 0 ? vars[0] : "t";
    std::string vy = vars.size() > 1 ? vars[1] : "s";
    std::ostringstream os;
    if (n.alpha != 0) os << vx << "^(" << rat_str(n.alpha) << ") * ";
    if (n.beta != 0) os << vy << "^(" << rat_str(n.beta) << ") * ";
    os << "[" << n.body.truncated(order).str(vx, vy) << "]";
    return os.str();
}

nlohmann::json genval_json(const GenSeries2& g, int order) {
    GenSeries2 n = g.normalized();
    nlohmann::json j;
    j["schema"] = "series/1";
    j["alpha"] = rat_str(n.alpha);
    j["beta"] = rat_str(n.beta);
    j["order"] = std::min(order, n.body.order());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, v] : n.body.terms()) {
        if (k.first + k.second > order) continue;
        terms.push_back({{"i", k.first}, {"j", k.second}, {"c", rat_str(v)}});
    }
    j["terms"] = terms;
    return j;
}

int run_verify(const std::vector<const IdentityRecord*>& records, uint64_t seed, int samples,
               int order, int jobs, bool json_out) {
    struct Task {
        const IdentityRecord* rec;
        ParamMap sample;
    };
    std::vector<Task> tasks;
    for (const auto* rec : records)
        for (auto& m : sample_parameters(*rec, seed, samples)) tasks.push_back({rec, m});
    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = verify_identity(*tasks[i].rec, tasks[i].sample, order);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    int failed = 0, rejected = 0;
    for (const auto& r : reports) {
        if (r.rejected()) ++rejected;
        else if (!r.passed()) ++failed;
        if (json_out) {
            std::cout << report_to_json(r) << "\n";
        } else {
            std::cout << (r.passed() ? "pass" : r.rejected() ? "rejected" : "FAIL") << "  "
                      << r.id << "  [" << params_str(r.sample) << "]";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
    }
    if (!json_out)
        std::cout << tasks.size() - failed - rejected << " passed, " << failed << " failed, "
                  << rejected << " rejected\n";
    return failed == 0 ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Appell/Gauss hypergeometric kernel"};
    app.require_subcommand(1);

    std::string expr_text, params_text, vars_text = "t,s", at_text, format = "text";
    std::string system_name, curve_text, ode_spec, point_text, phi_text, theta_text, out_file;
    std::string verify_id;
    int order = 8, max_order = 4, prolong = 2, samples = 5, jobs = 1, verify_order = 0;
    uint64_t seed = 1;
    bool verify_all = false;

    auto* taylor = app.add_subcommand("taylor", "expand an expression as a truncated series");
    taylor->add_option("expr", expr_text, "expression in the catalog grammar")->required();
    taylor->add_option("--order", order, "truncation order")->check(CLI::Range(0, 128));
    taylor->add_option("--params", params_text, "rational parameters name=p/q,...");
    taylor->add_option("--vars", vars_text, "variable names in axis order");
    taylor->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* eval = app.add_subcommand("eval", "evaluate a terminating Appell sum exactly");
    eval->add_option("expr", expr_text, "Appell call, e.g. \"F2(1/2; -1,-1; -2,-2; x, y)\"")
        ->required();
    eval->add_option("--at", at_text, "evaluation point x,y")->required();
    eval->add_option("--params", params_text, "rational parameters");
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string spec_file;
    auto* derive = app.add_subcommand("derive-ode",
                                      "minimal ODE of a specialized Appell function");
    derive->add_option("--system", system_name, "F1|F2|F3|F4");
    derive->add_option("--params", params_text, "system parameters");
    derive->add_option("--curve", curve_text, "x=<ratfunc in t>;y=<ratfunc in t>");
    derive->add_option("--spec", spec_file,
                       "JSON descriptor {system, params, curve:{x,y}} instead of flags");
    derive->add_option("--max-order", max_order);
    derive->add_option("--prolong", prolong, "extra prolongation order");
    derive->add_option("--out", out_file, "write the equation as JSON");
    derive->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* expo = app.add_subcommand("exponents", "local exponents at a point");
    expo->add_option("--ode", ode_spec, "JSON file or builtin:<name>:<params>")->required();
    expo->add_option("--point", point_text, "rational point or inf")->required();
    expo->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* pull = app.add_subcommand("pullback", "pullback transform of an equation");
    pull->add_option("--ode", ode_spec)->required();
    pull->add_option("--phi", phi_text, "rational function of t")->required();
    pull->add_option("--theta", theta_text, "prefactor factors \"(root,exp);(root,exp)\"");
    pull->add_option("--out", out_file);
    pull->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "verify catalog identities");
    verify->add_option("id", verify_id, "record id");
    verify->add_flag("--all", verify_all, "verify every record");
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples)->check(CLI::Range(1, 1 << 20));
    verify->add_option("--order", verify_order, "override truncation order")
        ->check(CLI::Range(2, 64));
    verify->add_option("--jobs", jobs, "parallel verification tasks")->check(CLI::Range(1, 256));
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cata = app.add_subcommand("catalog", "catalog inspection");
    cata->add_subcommand("list", "list records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (taylor->parsed()) {
            ExprContext ctx;
            if (!params_text.empty()) ctx.params = parse_params(params_text);
            ctx.vars = split_list(vars_text, ',');
            GenSeries2 g = expr_expand(parse_expr(expr_text, ctx), order);
            if (format == "json")
                std::cout << genval_json(g, order).dump(2) << "\n";
            else
                std::cout << genval_text(g, ctx.vars, order) << "\n";
            return kOk;
        }
        if (eval->parsed()) {
            ExprContext ctx;
            if (!params_text.empty()) ctx.params = parse_params(params_text);
            ctx.vars = {"x", "y"};
            ExprP e = parse_expr(expr_text, ctx);
            if (e->kind != Expr::Kind::appell)
                throw std::invalid_argument("eval expects a single Appell call");
            auto pt = split_list(at_text, ',');
            if (pt.size() != 2) throw std::invalid_argument("--at expects x,y");
            auto v = appell_terminating_eval(*e->appell_spec, parse_rat(pt[0]), parse_rat(pt[1]));
            if (format == "json") {
                nlohmann::json j{{"schema", "eval/1"},
                                 {"value", rat_str(v.value)},
                                 {"terms", v.terms}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rat_str(v.value) << "  (" << v.terms << " terms)\n";
            }
            return kOk;
        }
        if (derive->parsed()) {
            if (!spec_file.empty()) {
                std::ifstream in(spec_file);
                if (!in) throw std::invalid_argument("cannot open --spec file");
                nlohmann::json j = nlohmann::json::parse(in);
                system_name = j.at("system").get<std::string>();
                ParamMap pj;
                for (auto& [k, v] : j.at("params").items())
                    pj[k] = parse_rat(v.get<std::string>());
                params_text.clear();
                for (auto& [k, v] : pj)
                    params_text += (params_text.empty() ? "" : ",") + k + "=" + rat_str(v);
                curve_text = "x=" + j.at("curve").at("x").get<std::string>() +
                             ";y=" + j.at("curve").at("y").get<std::string>();
            } else if (system_name.empty() || params_text.empty() || curve_text.empty()) {
                throw std::invalid_argument(
                    "derive-ode needs --spec or all of --system/--params/--curve");
            }
            AppellSpec sys = parse_system(system_name, parse_params(params_text));
            Curve curve = parse_curve(curve_text);
            auto r = minimal_ode(sys, curve, max_order, prolong);
            if (!r.found()) {
                std::cout << "no ODE found within bounds (max order " << max_order
                          << ", prolongation " << prolong << ")\n";
                return kVerifyFail;
            }
            std::string js = lode_to_json(r.ode);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << js << "\n";
            }
            if (format == "json")
                std::cout << js << "\n";
            else
                std::cout << "order " << r.order << ": " << r.ode.canonical().str() << "\n";
            return kOk;
        }
        if (expo->parsed()) {
            Lode L = load_ode(ode_spec);
            OdePoint pt = point_text == "inf" || point_text == "infinity"
                              ? OdePoint::infinity()
                              : OdePoint::at(parse_rat(point_text));
            auto rep = local_exponents(L, pt);
            if (format == "json") {
                nlohmann::json j;
                j["schema"] = "exponents/1";
                j["point"] = rep.point.str();
                j["indicial"] = rep.indicial.str("r");
                nlohmann::json roots = nlohmann::json::array();
                for (const auto& r : rep.rational_roots) roots.push_back(rat_str(r));
                j["exponents"] = roots;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "indicial at " << rep.point.str() << ": " << rep.indicial.str("r")
                          << "\nexponents:";
                for (const auto& r : rep.rational_roots) std::cout << " " << rat_str(r);
                std::cout << "\n";
            }
            return kOk;
        }
        if (pull->parsed()) {
            Lode L = load_ode(ode_spec);
            RatFunc phi = parse_ratfunc(phi_text, "t");
            std::vector<ThetaFactor> theta;
            for (const auto& part : split_list(theta_text, ';')) {
                auto inner = part;
                if (inner.front() == '(') inner = inner.substr(1, inner.size() - 2);
                auto comma = inner.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("--theta expects (root,exponent) factors");
                theta.push_back(
                    {parse_rat(inner.substr(0, comma)), parse_rat(inner.substr(comma + 1))});
            }
            Lode P = pullback_transform(L, phi, theta);
            std::string js = lode_to_json(P);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << js << "\n";
            }
            if (format == "json")
                std::cout << js << "\n";
            else
                std::cout << "order " << P.order() << ": " << P.canonical().str() << "\n";
            return kOk;
        }
        if (verify->parsed()) {
            std::vector<const IdentityRecord*> records;
            if (verify_all) {
                for (const auto& r : catalog_entries()) records.push_back(&r);
            } else {
                if (verify_id.empty())
                    throw std::invalid_argument("verify needs a record id or --all");
                const auto* rec = catalog_find(verify_id);
                if (!rec) throw std::invalid_argument("unknown record '" + verify_id + "'");
                records.push_back(rec);
            }
            return run_verify(records, seed, samples, verify_order, jobs, format == "json");
        }
        if (cata->parsed()) {
            if (format == "json") {
                nlohmann::json j;
                j["schema"] = "catalog/1";
                j["records"] = nlohmann::json::parse(catalog_list_json());
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : catalog_entries())
                    std::cout << r.id << "  [" << verify_mode_name(r.mode) << ", N=" << r.order
                              << "]  " << r.provenance << "\n";
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
