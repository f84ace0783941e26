// Command-line front end: axiom and contraction checks, iteration engines,
// the derived-metric construction, theorem suites, the falsifier, and the
// instance generator.  Exit codes: 0 all checks passed, 1 a checked property
// failed, 2 malformed input or usage.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixpoint/contraction.hpp"
#include "fixpoint/falsify.hpp"
#include "fixpoint/instances.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/json_io.hpp"
#include "fixpoint/maia.hpp"
#include "fixpoint/oracle.hpp"
#include "fixpoint/space.hpp"

namespace {

using namespace fixpoint;

struct SourceOpts {
    std::string instance_file;
    std::string library_name;
    std::string gen_desc;
};

void add_source_opts(CLI::App* app, SourceOpts& src) {
    auto* a = app->add_option("--instance", src.instance_file, "instance JSON file");
    auto* b = app->add_option("--library", src.library_name, "builtin instance name");
    auto* c = app->add_option("--gen", src.gen_desc,
                              "generator settings, e.g. seed=3,n=6,target=T2");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

GeneratorParams parse_gen_desc(const std::string& desc) {
    GeneratorParams gp;
    std::stringstream ss(desc);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("generator settings must be key=value: " + item);
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (key == "seed") gp.seed = std::stoull(val);
        else if (key == "n") gp.n = std::stoi(val);
        else if (key == "alpha") gp.alpha = std::stod(val);
        else if (key == "density") gp.order_density = std::stod(val);
        else if (key == "target") gp.target = theorem_from_string(val);
        else if (key == "components") gp.components = std::stoi(val);
        else if (key == "chain") gp.chain = val == "1" || val == "true";
        else throw InputError("unknown generator key: " + key);
    }
    return gp;
}

InstanceSpec load_spec(const SourceOpts& src) {
    if (!src.instance_file.empty()) {
        std::ifstream in(src.instance_file);
        if (!in) throw InputError("cannot open " + src.instance_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_instance(buf.str());
    }
    if (!src.library_name.empty()) return library_instance(src.library_name);
    if (!src.gen_desc.empty()) {
        GeneratorParams gp = parse_gen_desc(src.gen_desc);
        return gp.target ? gen_theorem_instance(gp) : gen_tree_instance(gp);
    }
    throw InputError("one of --instance, --library, --gen is required");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw InputError("cannot write " + out_file);
    out << text << '\n';
}

AxiomMode mode_from_string(const std::string& s) {
    if (s == "metric") return AxiomMode::Metric;
    if (s == "almost") return AxiomMode::AlmostMetric;
    if (s == "quasi-order") return AxiomMode::QuasiOrder;
    if (s == "order") return AxiomMode::Order;
    throw InputError("unknown axiom mode: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered fixed-point toolkit"};
    app.require_subcommand(1);

    SourceOpts src;
    std::string out_file, gauge_json, mode_str = "metric", variant_str, theorem_str;
    std::vector<std::string> drops;
    std::string falsify_drop;
    double alpha = 0.5, lambda = -1.0, tol = 1e-9, mu = 0.5;
    int start = 0, trials = 1000, max_n = 8;
    std::uint64_t seed = 7;
    std::string solve_mode = "picard", trace_file;

    auto* check = app.add_subcommand("check", "verify axioms or a contraction variant");
    add_source_opts(check, src);
    check->add_option("--mode", mode_str, "metric|almost|quasi-order|order");
    check->add_option("--variant", variant_str,
                      "contraction variant; omit for axiom checks");
    check->add_option("--alpha", alpha, "contraction constant");
    check->add_option("--gauge", gauge_json, "scalar gauge JSON");
    check->add_option("--out", out_file, "write the report here");

    auto* solve = app.add_subcommand("solve", "run an iteration engine");
    add_source_opts(solve, src);
    solve->add_option("--start", start, "starting point index");
    solve->add_option("--mode", solve_mode, "picard|variable");
    solve->add_option("--gauge", gauge_json, "scalar gauge JSON");
    solve->add_option("--tol", tol, "settle tolerance (variable mode)");
    solve->add_option("--trace", trace_file, "write the orbit trace CSV here");
    solve->add_option("--out", out_file, "write the report here");

    auto* maia = app.add_subcommand("maia", "build and verify the derived metric");
    add_source_opts(maia, src);
    maia->add_option("--lambda", lambda, "series weight; default sqrt(1/alpha)");
    maia->add_option("--tol", tol, "truncation tail bound");
    maia->add_option("--out", out_file, "write the report here");

    auto* suite = app.add_subcommand("suite", "run a theorem suite");
    add_source_opts(suite, src);
    suite->add_option("--theorem", theorem_str, "T1|T2|T3|T4|C1|C2|T6|T7|T8|T9")
        ->required();
    suite->add_option("--drop", drops, "hypothesis ids to drop");
    suite->add_option("--mu", mu, "second-metric contraction constant (T3)");
    suite->add_option("--out", out_file, "write the verdict here");

    auto* falsify = app.add_subcommand("falsify", "search for counterexamples");
    falsify->add_option("--theorem", theorem_str, "target theorem")->required();
    falsify->add_option("--drop", falsify_drop, "hypothesis id to drop");
    falsify->add_option("--trials", trials, "trial budget");
    falsify->add_option("--seed", seed, "campaign seed");
    falsify->add_option("--max-n", max_n, "largest carrier size");
    falsify->add_option("--out", out_file, "write the result here");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--gen", src.gen_desc, "generator settings, e.g. seed=3,n=6,target=T2")
        ->required();
    gen->add_option("--out", out_file, "write the instance here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            InstanceSpec spec = load_spec(src);
            if (variant_str.empty()) {
                auto report = check_axioms(spec.space, mode_from_string(mode_str));
                emit(export_axiom_report(report), out_file);
                return report.all_pass() ? 0 : 1;
            }
            ContractionVariant variant;
            variant.tag = variant_from_string(variant_str);
            variant.alpha = check->count("--alpha") ? alpha : spec.alpha;
            if (!gauge_json.empty()) variant.phi = parse_scalar_gauge(gauge_json);
            else if (spec.phi) variant.phi = spec.phi;
            else variant.phi = linear_gauge(variant.alpha);
            variant.family = spec.family;
            variant.exponents = spec.exponents;
            auto report = check_contraction(spec.space, variant);
            emit(export_contraction_report(report), out_file);
            return report.holds ? 0 : 1;
        }

        if (solve->parsed()) {
            InstanceSpec spec = load_spec(src);
            if (solve_mode == "picard") {
                ScalarGauge phi = !gauge_json.empty() ? parse_scalar_gauge(gauge_json)
                                  : spec.phi ? *spec.phi
                                             : linear_gauge(spec.alpha);
                auto result = run_picard(spec.space, start, phi);
                if (!trace_file.empty())
                    emit(export_trace_csv(result.trace), trace_file);
                emit(export_fixed_point_result(result), out_file);
                return result.converged && result.bound_ok ? 0 : 1;
            }
            if (solve_mode == "variable") {
                if (!spec.family) throw InputError("variable mode needs a point family");
                auto trace =
                    run_variable_exponent(spec.space, start, *spec.family, 64, tol);
                bool ok = trace.ascending && trace.cauchy && trace.bounds_dominate;
                std::ostringstream msg;
                msg << "{\n  \"ascending\": " << (trace.ascending ? "true" : "false")
                    << ",\n  \"cauchy\": " << (trace.cauchy ? "true" : "false")
                    << ",\n  \"bounds_dominate\": "
                    << (trace.bounds_dominate ? "true" : "false")
                    << ",\n  \"blocks\": " << trace.exponents.size()
                    << ",\n  \"t0\": " << trace.t0 << "\n}";
                emit(msg.str(), out_file);
                return ok ? 0 : 1;
            }
            throw InputError("unknown solve mode: " + solve_mode);
        }

        if (maia->parsed()) {
            InstanceSpec spec = load_spec(src);
            double lam = maia->count("--lambda")
                             ? lambda
                             : spec.lambda.value_or(default_lambda(spec.alpha));
            double t = maia->count("--tol") ? tol : 1e-9;
            auto dm = build_maia_metric(spec.space, spec.alpha, lam, t);
            auto props = verify_maia_properties(dm);
            emit(export_derived_metric(dm, &props), out_file);
            return props.pass() ? 0 : 1;
        }

        if (suite->parsed()) {
            InstanceSpec spec = load_spec(src);
            SuiteParams params = spec.suite_params();
            params.mu = mu;
            auto verdict =
                theorem_suite(spec.space, theorem_from_string(theorem_str), params, drops);
            emit(export_suite_verdict(verdict), out_file);
            return verdict.hypotheses_pass() && verdict.conclusions_pass() ? 0 : 1;
        }

        if (falsify->parsed()) {
            FalsifyParams params;
            params.theorem = theorem_from_string(theorem_str);
            if (!falsify_drop.empty()) params.drop = falsify_drop;
            params.trials = trials;
            params.seed = seed;
            params.max_n = max_n;
            auto result = falsify_campaign(params);
            emit(export_falsify_result(result), out_file);
            // dropping a hypothesis means a hit is the expected outcome
            if (params.drop) return result.found ? 0 : 1;
            return result.found ? 1 : 0;
        }

        if (gen->parsed()) {
            GeneratorParams gp = parse_gen_desc(src.gen_desc);
            InstanceSpec spec = gp.target ? gen_theorem_instance(gp) : gen_tree_instance(gp);
            emit(export_instance(spec), out_file);
            return 0;
        }
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << '\n';
        return 2;
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << '\n';
        return 2;
    } catch (const PreconditionError& err) {
        std::cerr << "precondition failed [" << err.hypothesis << "]: " << err.what()
                  << '\n';
        return 1;
    } catch (const GenerationError& err) {
        std::cerr << "generation failed: " << err.what() << '\n';
        return 1;
    } catch (const GaugeError& err) {
        std::cerr << "gauge error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
