#include "fixpoint/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fixpoint {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("/", err.what());
    }
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path, "expected a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
}

DistTable parse_dist(const json& j, int n, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError(path, "expected an array of " + std::to_string(n) + " rows");
    DistTable d(n);
    for (int i = 0; i < n; ++i) {
        const std::string row = path + "/" + std::to_string(i);
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw ParseError(row, "expected " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            d[i].push_back(require_number(j[i][k], row + "/" + std::to_string(k)));
    }
    return d;
}

BoolTable parse_order(const json& j, int n, const std::string& path) {
    BoolTable o(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) o[i][i] = 1;
    if (!j.is_array()) throw ParseError(path, "expected an array");
    // matrix when the shape matches exactly; otherwise a pair list
    bool matrix_like = static_cast<int>(j.size()) == n;
    for (size_t i = 0; matrix_like && i < j.size(); ++i)
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) matrix_like = false;
    if (!matrix_like) {
        for (size_t p = 0; p < j.size(); ++p) {
            const std::string at = path + "/" + std::to_string(p);
            if (!j[p].is_array() || j[p].size() != 2)
                throw ParseError(at, "expected an [i, j] pair");
            int a = require_int(j[p][0], at + "/0");
            int b = require_int(j[p][1], at + "/1");
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(at, "index out of range");
            o[a][b] = 1;
        }
        return o;
    }
    for (int i = 0; i < n; ++i) {
        const std::string row = path + "/" + std::to_string(i);
        for (int k = 0; k < n; ++k) {
            int v = require_int(j[i][k], row + "/" + std::to_string(k));
            if (v != 0 && v != 1)
                throw ParseError(row + "/" + std::to_string(k), "expected 0 or 1");
            o[i][k] = static_cast<std::uint8_t>(v);
        }
    }
    for (int i = 0; i < n; ++i)
        if (!o[i][i]) throw ParseError(path, "order must be reflexive");
    return o;
}

ScalarGauge gauge_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("family"))
        throw ParseError(path, "expected an object with a \"family\" key");
    const std::string fam = j["family"].is_string() ? j["family"].get<std::string>() : "";
    if (fam == "linear")
        return linear_gauge(require_number(j.value("alpha", json()), path + "/alpha"));
    if (fam == "rational")
        return rational_gauge(require_number(j.value("c", json()), path + "/c"));
    if (fam == "zero") return zero_gauge();
    if (fam == "identity") return identity_gauge();
    throw ParseError(path + "/family", "unknown gauge family: " + fam);
}

PointGaugeFamily family_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("family"))
        throw ParseError(path, "expected an object with a \"family\" key");
    const std::string fam = j["family"].is_string() ? j["family"].get<std::string>() : "";
    if (fam != "scaled-max" && fam != "tail-max")
        throw ParseError(path + "/family", "unknown point family: " + fam);
    double c = require_number(j.value("c", json()), path + "/c");
    if (!j.contains("n") || !j["n"].is_array())
        throw ParseError(path + "/n", "expected an exponent array");
    std::vector<int> exps;
    for (size_t i = 0; i < j["n"].size(); ++i)
        exps.push_back(require_int(j["n"][i], path + "/n/" + std::to_string(i)));
    return fam == "scaled-max" ? scaled_max_point_family(exps, c)
                               : tail_max_point_family(exps, c);
}

json gauge_to_json(const ScalarGauge& g) {
    json j;
    j["family"] = g.tag;
    if (g.tag == "linear") j["alpha"] = g.p1;
    if (g.tag == "rational") j["c"] = g.p1;
    return j;
}

json family_to_json(const PointGaugeFamily& f) {
    json j;
    j["family"] = f.tag;
    j["c"] = f.p1;
    j["n"] = f.exponent;
    return j;
}

json table_to_json(const DistTable& t) { return json(t); }

json order_to_json(const BoolTable& o) {
    json rows = json::array();
    for (const auto& row : o) {
        json r = json::array();
        for (auto v : row) r.push_back(static_cast<int>(v));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("/", "expected an object");
    if (!j.contains("n")) throw ParseError("/n", "missing carrier size");
    int n = require_int(j["n"], "/n");
    if (n < 1) throw ParseError("/n", "carrier size must be positive");

    InstanceSpec spec;
    spec.provenance = "file";
    spec.space.n = n;
    if (!j.contains("dist")) throw ParseError("/dist", "missing distance table");
    spec.space.dist = parse_dist(j["dist"], n, "/dist");
    if (!j.contains("order")) throw ParseError("/order", "missing order relation");
    spec.space.order = parse_order(j["order"], n, "/order");
    if (j.contains("selfmap")) {
        const json& m = j["selfmap"];
        if (!m.is_array() || static_cast<int>(m.size()) != n)
            throw ParseError("/selfmap", "expected " + std::to_string(n) + " entries");
        std::vector<int> map;
        for (int i = 0; i < n; ++i) {
            int v = require_int(m[i], "/selfmap/" + std::to_string(i));
            if (v < 0 || v >= n)
                throw ParseError("/selfmap/" + std::to_string(i), "index out of range");
            map.push_back(v);
        }
        spec.space.selfmap = map;
    }

    spec.space.slack = 1e-12;
    if (j.contains("meta")) {
        const json& m = j["meta"];
        if (!m.is_object()) throw ParseError("/meta", "expected an object");
        if (m.contains("name")) spec.name = m["name"].get<std::string>();
        if (m.contains("provenance")) spec.provenance = m["provenance"].get<std::string>();
        if (m.contains("alpha")) spec.alpha = require_number(m["alpha"], "/meta/alpha");
        if (m.contains("lambda")) spec.lambda = require_number(m["lambda"], "/meta/lambda");
        if (m.contains("slack")) spec.space.slack = require_number(m["slack"], "/meta/slack");
        if (m.contains("gauge")) spec.phi = gauge_from_json(m["gauge"], "/meta/gauge");
        if (m.contains("family"))
            spec.family = family_from_json(m["family"], "/meta/family");
        if (m.contains("exponents")) {
            std::vector<int> exps;
            const json& e = m["exponents"];
            if (!e.is_array()) throw ParseError("/meta/exponents", "expected an array");
            for (size_t i = 0; i < e.size(); ++i)
                exps.push_back(
                    require_int(e[i], "/meta/exponents/" + std::to_string(i)));
            spec.exponents = exps;
        }
    }
    spec.space.validate_shape();
    if (spec.family && spec.family->size() != n)
        throw ParseError("/meta/family/n", "family size does not match the carrier");
    return spec;
}

std::string export_instance(const InstanceSpec& spec, int indent) {
    json j;
    j["n"] = spec.space.n;
    j["dist"] = table_to_json(spec.space.dist);
    j["order"] = order_to_json(spec.space.order);
    if (spec.space.selfmap) j["selfmap"] = *spec.space.selfmap;
    json meta;
    meta["name"] = spec.name;
    meta["provenance"] = spec.provenance;
    meta["alpha"] = spec.alpha;
    meta["slack"] = spec.space.slack;
    if (spec.lambda) meta["lambda"] = *spec.lambda;
    if (spec.phi) meta["gauge"] = gauge_to_json(*spec.phi);
    if (spec.family) meta["family"] = family_to_json(*spec.family);
    if (spec.exponents) meta["exponents"] = *spec.exponents;
    j["meta"] = meta;
    return j.dump(indent);
}

ScalarGauge parse_scalar_gauge(const std::string& text) {
    return gauge_from_json(parse_text(text), "/");
}

PointGaugeFamily parse_point_family(const std::string& text) {
    return family_from_json(parse_text(text), "/");
}

std::string export_axiom_report(const AxiomReport& report, int indent) {
    json j;
    j["mode"] = to_string(report.mode);
    j["pass"] = report.all_pass();
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(indent);
}

std::string export_contraction_report(const ContractionReport& report, int indent) {
    json j;
    j["holds"] = report.holds;
    j["pairs_checked"] = report.pairs_checked;
    if (report.witness) {
        j["witness"] = {(*report.witness)[0], (*report.witness)[1]};
        j["lhs"] = report.lhs;
        j["rhs"] = report.rhs;
    }
    return j.dump(indent);
}

std::string export_suite_verdict(const SuiteVerdict& verdict, int indent) {
    json j;
    j["theorem"] = to_string(verdict.theorem);
    j["hypotheses_pass"] = verdict.hypotheses_pass();
    j["conclusions_pass"] = verdict.conclusions_pass();
    j["implication_respected"] = verdict.implication_respected();
    if (!verdict.dropped.empty()) j["dropped"] = verdict.dropped;
    json hyps = json::array();
    for (const auto& h : verdict.hypotheses) {
        json e;
        e["id"] = h.id;
        e["pass"] = h.pass;
        e["automatic"] = h.automatic;
        if (!h.note.empty()) e["note"] = h.note;
        hyps.push_back(e);
    }
    j["hypotheses"] = hyps;
    json concl = json::array();
    for (const auto& c : verdict.conclusions) {
        json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        concl.push_back(e);
    }
    j["conclusions"] = concl;
    return j.dump(indent);
}

std::string export_picard_report(const PicardReport& report, int indent) {
    json j;
    j["mode"] = to_string(report.mode);
    j["picard"] = report.picard();
    j["fix_set"] = report.fix_set;
    j["fix_singleton"] = report.fix_singleton;
    json starts = json::array();
    for (const auto& s : report.starts) {
        json e;
        e["start"] = s.start;
        e["converged"] = s.converged;
        if (s.converged) e["limit"] = s.limit;
        e["ascent_ok"] = s.ascent_ok;
        starts.push_back(e);
    }
    j["starts"] = starts;
    if (!report.maximality.empty()) {
        json m = json::array();
        for (const auto& [fp, ok] : report.maximality)
            m.push_back({{"fixed_point", fp}, {"maximal", ok}});
        j["maximality"] = m;
    }
    return j.dump(indent);
}

std::string export_fixed_point_result(const FixedPointResult& result, int indent) {
    json j;
    j["converged"] = result.converged;
    if (result.converged) j["fixed_point"] = result.fixed_point;
    j["steps"] = result.steps;
    j["final_step_distance"] = result.final_step_distance;
    j["final_bound"] = result.final_bound;
    j["bound_ok"] = result.bound_ok;
    j["end"] = to_string(result.trace.end);
    return j.dump(indent);
}

std::string export_derived_metric(const DerivedMetric& dm,
                                 const MaiaPropertyReport* props, int indent) {
    json j;
    j["n"] = dm.space.n;
    j["alpha"] = dm.alpha;
    j["lambda"] = dm.lambda;
    j["truncation_N"] = dm.truncation_N;
    j["table"] = table_to_json(dm.table);
    double max_tail = 0.0;
    for (const auto& row : dm.tail_bound)
        for (double t : row) max_tail = std::max(max_tail, t);
    j["max_tail_bound"] = max_tail;
    if (props) {
        json p;
        p["identity"] = props->identity;
        p["subordination"] = props->subordination;
        p["axioms"] = props->axioms;
        p["contraction_mu"] = props->contraction_mu;
        p["max_identity_defect"] = props->max_identity_defect;
        p["pass"] = props->pass();
        j["properties"] = p;
    }
    return j.dump(indent);
}

std::string export_falsify_result(const FalsifyResult& result, int indent) {
    json j;
    j["found"] = result.found;
    j["trials_run"] = result.trials_run;
    if (result.found) {
        j["trial"] = result.trial;
        j["strategy"] = result.strategy;
        j["counterexample"] = json::parse(export_instance(*result.counterexample, -1));
        j["verdict"] = json::parse(export_suite_verdict(*result.verdict, -1));
    }
    return j.dump(indent);
}

std::string export_trace_csv(const OrbitTrace& trace) {
    std::ostringstream out;
    out << "step,point,step_distance,bound\n";
    for (size_t k = 0; k < trace.points.size(); ++k) {
        out << k << ',' << trace.points[k] << ',';
        if (k < trace.step_dist.size()) out << trace.step_dist[k];
        out << ',';
        if (k < trace.bounds.size()) out << trace.bounds[k];
        out << '\n';
    }
    return out.str();
}

}  // namespace fixpoint
