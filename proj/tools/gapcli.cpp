// Command-line front end for the symgap library: symbol prolongations,
// Tanaka prolongations, distribution flags and symmetries, Killing-tensor
// dimensions, Lie algebra diagnostics, and a consolidated dimension report.

#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symgap/distribution.hpp"
#include "symgap/errors.hpp"
#include "symgap/geo_integrals.hpp"
#include "symgap/gnla.hpp"
#include "symgap/lie_analysis.hpp"
#include "symgap/parser.hpp"
#include "symgap/symbol.hpp"
#include "symgap/tanaka.hpp"

using json = nlohmann::json;
using namespace symgap;

namespace {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 1;
    std::optional<int> cap;
    int extra_orders = 6;
    std::map<std::string, Rational> params;
    std::optional<std::string> expect;
    std::string format = "text";
};

// ---------------------------------------------------------------- utilities

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
    if (!j.is_object()) throw SchemaError(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw SchemaError(where + ": unknown field \"" + it.key() + "\"");
    for (const auto& k : required)
        if (!j.contains(k))
            throw SchemaError(where + ": missing required field \"" + k + "\"");
}

int get_int(const json& j, const std::string& where, const std::string& key) {
    if (!j.at(key).is_number_integer())
        throw SchemaError(where + ": field \"" + key + "\" must be an integer");
    return j.at(key).get<int>();
}

std::string get_string(const json& j, const std::string& where, const std::string& key) {
    if (!j.at(key).is_string())
        throw SchemaError(where + ": field \"" + key + "\" must be a string");
    return j.at(key).get<std::string>();
}

Rational parse_rat(const std::string& s, const std::string& where) {
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '-' && (i == 0 || s[i - 1] == '/')) continue;
        if (c == '/' && !seen_slash && seen_digit) { seen_slash = true; continue; }
        if (c >= '0' && c <= '9') { seen_digit = true; continue; }
        throw SchemaError(where + ": \"" + s + "\" is not a rational p/q");
    }
    if (!seen_digit || s.empty() || s.back() == '/')
        throw SchemaError(where + ": \"" + s + "\" is not a rational p/q");
    return Rational(s);
}

Rational get_rat(const json& j, const std::string& where, const std::string& key) {
    if (j.at(key).is_number_integer()) return Rational(j.at(key).get<long long>());
    if (j.at(key).is_string()) return parse_rat(j.at(key).get<std::string>(), where);
    throw SchemaError(where + ": field \"" + key + "\" must be an integer or \"p/q\" string");
}

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

// ---------------------------------------------------------- input builders

MongeEquation monge_from_json(const json& j, const Options& opt) {
    check_keys(j, "monge", {"preset", "m", "n", "j", "c", "F"}, {});
    if (j.contains("preset")) {
        std::string p = get_string(j, "monge", "preset");
        if (p == "hilbert_cartan") {
            check_keys(j, "monge", {"preset"}, {"preset"});
            return monge_hilbert_cartan();
        }
        if (p == "power") {
            check_keys(j, "monge", {"preset", "m", "n"}, {"preset", "m"});
            int n = j.contains("n") ? get_int(j, "monge", "n") : 2;
            return monge_power(get_int(j, "monge", "m"), n);
        }
        if (p == "perturbed") {
            check_keys(j, "monge", {"preset", "n", "j", "c"}, {"preset", "n", "j", "c"});
            return monge_perturbed(get_int(j, "monge", "n"), get_int(j, "monge", "j"),
                                   get_rat(j, "monge", "c"));
        }
        throw SchemaError("monge: unknown preset \"" + p + "\"");
    }
    check_keys(j, "monge", {"n", "F"}, {"n", "F"});
    MongeEquation eq;
    eq.n = get_int(j, "monge", "n");
    if (eq.n < 1) throw SchemaError("monge: n must be >= 1");
    eq.F = parse_expression(get_string(j, "monge", "F"), monge_var_names(eq.n), opt.params);
    return eq;
}

std::vector<VectorField> fields_from_json(const json& j) {
    check_keys(j, "fields", {"preset", "m", "n", "eps"}, {"preset"});
    std::string p = get_string(j, "fields", "preset");
    if (p == "power") {
        check_keys(j, "fields", {"preset", "m"}, {"preset", "m"});
        return power_symmetries(get_int(j, "fields", "m"));
    }
    if (p == "perturbed") {
        check_keys(j, "fields", {"preset", "n", "eps"}, {"preset", "n", "eps"});
        return perturbed_symmetries(get_int(j, "fields", "n"), get_rat(j, "fields", "eps"));
    }
    throw SchemaError("fields: unknown preset \"" + p + "\"");
}

Metric metric_from_json(const json& j, const Options& opt) {
    check_keys(j, "metric", {"preset", "n", "sign", "R", "f"}, {"preset", "n"});
    std::string p = get_string(j, "metric", "preset");
    int n = get_int(j, "metric", "n");
    if (p == "flat") {
        check_keys(j, "metric", {"preset", "n"}, {"preset", "n"});
        return flat_metric(n);
    }
    if (p == "scaled") {
        check_keys(j, "metric", {"preset", "n"}, {"preset", "n"});
        return scaled_flat_metric(n);
    }
    if (p == "rotational") {
        check_keys(j, "metric", {"preset", "n", "sign", "R"}, {"preset", "n", "sign", "R"});
        int sign = get_int(j, "metric", "sign");
        if (sign != 1 && sign != -1) throw SchemaError("metric: sign must be 1 or -1");
        return rotational_metric(n, sign, get_rat(j, "metric", "R"));
    }
    if (p == "revolution") {
        check_keys(j, "metric", {"preset", "n", "f"}, {"preset", "n", "f"});
        std::vector<std::string> vars;
        for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        vars[0] = "r";
        auto f = parse_rational_function(get_string(j, "metric", "f"), vars, opt.params);
        return revolution_metric(n, f);
    }
    throw SchemaError("metric: unknown preset \"" + p + "\"");
}

GradedNilpotentAlgebra gnla_from_json(const json& j) {
    check_keys(j, "algebra", {"preset", "dim", "dims", "brackets"}, {});
    if (j.contains("preset")) {
        std::string p = get_string(j, "algebra", "preset");
        if (p == "free235") {
            check_keys(j, "algebra", {"preset"}, {"preset"});
            return free_nilpotent_235();
        }
        if (p == "heisenberg") {
            check_keys(j, "algebra", {"preset", "dim"}, {"preset", "dim"});
            return heisenberg_algebra(get_int(j, "algebra", "dim"));
        }
        if (p == "abelian") {
            check_keys(j, "algebra", {"preset", "dim"}, {"preset", "dim"});
            return abelian_algebra(get_int(j, "algebra", "dim"));
        }
        if (p == "submax6") {
            check_keys(j, "algebra", {"preset"}, {"preset"});
            return submax6_negative();
        }
        throw SchemaError("algebra: unknown preset \"" + p + "\"");
    }
    check_keys(j, "algebra", {"dims", "brackets"}, {"dims"});
    GradedNilpotentAlgebra m;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer() || d.get<int>() < 1)
            throw SchemaError("algebra: dims must be positive integers");
        m.dims.push_back(d.get<int>());
    }
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            check_keys(b, "bracket", {"i", "j", "v"}, {"i", "j", "v"});
            int bi = get_int(b, "bracket", "i"), bj = get_int(b, "bracket", "j");
            std::vector<Rational> v;
            for (const auto& c : b.at("v"))
                v.push_back(c.is_string() ? parse_rat(c.get<std::string>(), "bracket")
                                          : Rational(c.get<long long>()));
            if (static_cast<int>(v.size()) != m.total_dim())
                throw SchemaError("algebra: bracket value has wrong length");
            m.set_bracket(bi, bj, v);
        }
    }
    validate(m);
    return m;
}

LieAlgebraPresentation presentation_from_json(const json& j, const Options& opt) {
    check_keys(j, "liealg", {"preset", "dim"}, {"preset"});
    std::string p = get_string(j, "liealg", "preset");
    LieAlgebraPresentation L;
    if (p == "sl2") L = sl2_presentation();
    else if (p == "heisenberg") {
        check_keys(j, "liealg", {"preset", "dim"}, {"preset", "dim"});
        L = heisenberg_presentation(get_int(j, "liealg", "dim"));
    } else if (p == "cartan7") L = cartan7();
    else if (p == "w7") L = w7();
    else if (p == "w7_jordan") L = w7_jordan();
    else if (p == "submax9") L = submax9();
    else if (p == "graded11") L = graded11_presentation();
    else throw SchemaError("liealg: unknown preset \"" + p + "\"");

    if (!opt.params.empty()) {
        std::vector<Rational> vals;
        for (const auto& name : L.params) {
            auto it = opt.params.find(name);
            if (it == opt.params.end())
                throw SchemaError("missing --param " + name + " for preset " + p);
            vals.push_back(it->second);
        }
        L = L.specialize(vals);
    }
    return L;
}

// ------------------------------------------------------------- subcommands

json run_symbol(const json& in, const Options& opt) {
    check_keys(in, "symbol", {"preset", "n", "d", "g0_dim"}, {"preset", "n"});
    std::string p = get_string(in, "symbol", "preset");
    int n = get_int(in, "symbol", "n");
    SymbolSpace g;
    long g0 = n;
    if (p == "killing") {
        check_keys(in, "symbol", {"preset", "n", "d", "g0_dim"}, {"preset", "n", "d"});
        int d = get_int(in, "symbol", "d");
        g = killing_symbol(n, d);
        g0 = symmetric_dim(n, d);
    } else if (p == "so") g = so_symbol(n);
    else if (p == "co") g = co_symbol(n);
    else if (p == "gl") g = gl_symbol(n);
    else if (p == "sl") g = sl_symbol(n);
    else throw SchemaError("symbol: unknown preset \"" + p + "\"");
    if (in.contains("g0_dim")) g0 = get_int(in, "symbol", "g0_dim");

    auto seq = prolongation_sequence(g, opt.cap.value_or(10));
    json values;
    values["dims"] = seq.dims();
    values["terminated"] = seq.terminated;
    values["g0_dim"] = g0;
    std::string result;
    if (seq.terminated) {
        int bound = dimension_bound(seq, static_cast<int>(g0));
        values["bound"] = bound;
        result = std::to_string(bound);
    } else {
        result = "not-terminated";
    }
    return json{{"values", values}, {"result", result}};
}

json run_tanaka(const json& in, const Options& opt) {
    check_keys(in, "tanaka", {"algebra", "g0", "monge"}, {});
    if (in.contains("algebra") == in.contains("monge"))
        throw SchemaError("tanaka: provide exactly one of \"algebra\" or \"monge\"");
    GradedNilpotentAlgebra m = in.contains("monge")
        ? symbol_at_point(monge_distribution(monge_from_json(in.at("monge"), opt)), opt.seed)
        : gnla_from_json(in.at("algebra"));

    std::optional<std::vector<Endomorphism>> g0;
    if (in.contains("g0")) {
        std::string gp = get_string(in, "tanaka", "g0");
        if (gp != "co") throw SchemaError("tanaka: unknown g0 preset \"" + gp + "\"");
        int N = m.total_dim();
        std::vector<Endomorphism> endos;
        Endomorphism id(N, std::vector<Rational>(N, 0));
        for (int i = 0; i < N; ++i) id[i][i] = 1;
        endos.push_back(id);
        for (int i = 0; i < N; ++i)
            for (int k = i + 1; k < N; ++k) {
                Endomorphism e(N, std::vector<Rational>(N, 0));
                e[i][k] = 1;
                e[k][i] = -1;
                endos.push_back(std::move(e));
            }
        g0 = std::move(endos);
    }

    auto t = tanaka_prolongation(m, g0, opt.cap.value_or(12));
    json values;
    values["negative_dims"] = m.dims;
    values["nonneg_dims"] = t.nonneg_dims();
    values["terminated"] = t.terminated;
    values["total_dim"] = t.total_dim();
    std::string result = t.terminated ? std::to_string(dimension_certificate(t))
                                      : "not-terminated";
    return json{{"values", values}, {"result", result}};
}

json run_flag(const json& in, const Options& opt) {
    check_keys(in, "flag", {"monge"}, {"monge"});
    auto d = monge_distribution(monge_from_json(in.at("monge"), opt));
    auto gv = derived_flag(d, opt.seed);
    json values;
    values["growth"] = gv.dims;
    values["saturated"] = gv.saturated;
    return json{{"values", values}, {"result", "(" + join_ints(gv.dims) + ")"}};
}

json run_symcheck(const json& in, const Options& opt) {
    check_keys(in, "symcheck", {"monge", "fields"}, {"monge", "fields"});
    auto d = monge_distribution(monge_from_json(in.at("monge"), opt));
    auto W = fields_from_json(in.at("fields"));
    json per_field = json::array();
    int passing = 0;
    for (const auto& w : W) {
        bool ok = is_symmetry(w, d);
        per_field.push_back(ok);
        if (ok) ++passing;
    }
    json values;
    values["symmetry"] = per_field;
    values["passing"] = passing;
    values["total"] = static_cast<int>(W.size());
    if (passing == static_cast<int>(W.size())) {
        auto L = structure_constants(W);
        values["algebra_dim"] = L.dim();
        values["jacobi"] = jacobi_check(L);
    }
    return json{{"values", values},
                {"result", std::to_string(passing) + "/" + std::to_string(W.size())}};
}

json run_polysym(const json& in, const Options& opt) {
    check_keys(in, "polysym", {"monge"}, {"monge"});
    auto d = monge_distribution(monge_from_json(in.at("monge"), opt));
    int cap = opt.cap.value_or(4);
    auto ps = polynomial_symmetries(d, cap);
    json values;
    values["degree_cap"] = cap;
    values["dimension"] = ps.dimension;
    return json{{"values", values}, {"result", std::to_string(ps.dimension)}};
}

json run_killing(const json& in, const Options& opt) {
    check_keys(in, "killing", {"metric", "d"}, {"metric", "d"});
    auto m = metric_from_json(in.at("metric"), opt);
    int d = get_int(in, "killing", "d");
    if (d < 1) throw SchemaError("killing: d must be >= 1");
    int dim = integral_dimension(m, d, opt.extra_orders, opt.seed);
    json values;
    values["n"] = m.n;
    values["d"] = d;
    values["dimension"] = dim;
    return json{{"values", values}, {"result", std::to_string(dim)}};
}

json run_liealg(const json& in, const Options& opt) {
    auto L = presentation_from_json(in, opt);
    json values;
    values["dim"] = L.dim();
    values["params"] = L.params;
    values["jacobi"] = jacobi_check(L);
    auto ds = series_dims(derived_series(L));
    values["derived_series"] = std::vector<long>(ds.begin(), ds.end());
    values["center_dim"] = static_cast<long>(center(L).size());
    return json{{"values", values}, {"result", std::to_string(L.dim())}};
}

// consolidated closed-form vs computed table
struct ReportRow {
    std::string structure;
    long expected;
    long computed;
    bool match;
    bool lower_bound; // realized sub-maximal model: computed is an exact realization
};

std::vector<ReportRow> build_gap_rows(const Options& opt) {
    std::vector<ReportRow> rows;
    auto add = [&](const std::string& name, long exp, long got, bool lb = false) {
        rows.push_back({name, exp, got, exp == got, lb});
    };

    for (int n = 2; n <= 5; ++n) {
        add("isometries n=" + std::to_string(n), static_cast<long>(n) * (n + 1) / 2,
            dimension_bound(prolongation_sequence(killing_symbol(n, 1)), n));
        add("affine n=" + std::to_string(n), static_cast<long>(n) + n * n,
            dimension_bound(std::vector<int>{n * n, 0}, n));
        add("projective n=" + std::to_string(n), static_cast<long>(n) * n + 2 * n,
            dimension_bound(std::vector<int>{n * n, n, 0}, n));
        if (n >= 3)
            add("conformal n=" + std::to_string(n), static_cast<long>(n + 1) * (n + 2) / 2,
                dimension_bound(prolongation_sequence(co_symbol(n)), n));
        long N = n + 1;
        add("quadratic-integrals n=" + std::to_string(n), N * N * (N * N - 1) / 12,
            dimension_bound(prolongation_sequence(killing_symbol(n, 2)),
                            static_cast<int>(symmetric_dim(n, 2))));
    }

    // rank-2 distributions: maximal model vs realized sub-maximal model
    add("growth-(2,3,5) max", 14,
        dimension_certificate(tanaka_prolongation(free_nilpotent_235())));
    {
        auto d = monge_distribution(monge_power(3, 2));
        auto W = power_symmetries(3);
        bool all = true;
        for (const auto& w : W) all = all && is_symmetry(w, d);
        add("growth-(2,3,5) submax", 7, all ? structure_constants(W).dim() : -1, true);
    }
    add("growth-(2,1,2,1) max", 11,
        dimension_certificate(tanaka_prolongation(submax6_negative())));
    for (int n = 3; n <= 4; ++n) {
        auto sym = symbol_at_point(monge_distribution(monge_power(2, n)), opt.seed);
        add("jet-rank2 n=" + std::to_string(n) + " max", 2L * n + 5,
            dimension_certificate(tanaka_prolongation(sym)));
        auto d = monge_distribution(monge_perturbed(n, n - 1, 1));
        auto W = perturbed_symmetries(n, 1);
        bool all = true;
        for (const auto& w : W) all = all && is_symmetry(w, d);
        add("jet-rank2 n=" + std::to_string(n) + " submax", 2L * n + 3,
            all ? structure_constants(W).dim() : -1, true);
    }
    return rows;
}

json run_gap_report(const json& in, const Options& opt) {
    if (!in.is_null()) check_keys(in, "gap-report", {}, {});
    auto rows = build_gap_rows(opt);
    bool all = true;
    json table = json::array();
    for (const auto& r : rows) {
        table.push_back(json{{"structure", r.structure},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"match", r.match},
                             {"realized", r.lower_bound}});
        all = all && r.match;
    }
    json values;
    values["rows"] = table;
    values["all_match"] = all;
    return json{{"values", values}, {"result", all ? std::string("ok") : std::string("mismatch")}};
}

json dispatch(const std::string& cmd, const json& in, const Options& opt);

json run_batch(const json& in, const Options& opt) {
    check_keys(in, "batch", {"jobs"}, {"jobs"});
    if (!in.at("jobs").is_array()) throw SchemaError("batch: \"jobs\" must be an array");
    struct Job {
        std::string command;
        json input;
        Options opt;
    };
    std::vector<Job> jobs;
    for (const auto& jj : in.at("jobs")) {
        check_keys(jj, "job",
                   {"command", "input", "seed", "cap", "extra_orders", "params", "expect"},
                   {"command"});
        Job job;
        job.command = get_string(jj, "job", "command");
        if (job.command == "batch") throw SchemaError("batch: jobs cannot be nested");
        job.input = jj.contains("input") ? jj.at("input") : json();
        job.opt = opt;
        if (jj.contains("seed")) job.opt.seed = jj.at("seed").get<std::uint64_t>();
        if (jj.contains("cap")) job.opt.cap = get_int(jj, "job", "cap");
        if (jj.contains("extra_orders")) job.opt.extra_orders = get_int(jj, "job", "extra_orders");
        if (jj.contains("expect")) job.opt.expect = get_string(jj, "job", "expect");
        if (jj.contains("params")) {
            for (auto it = jj.at("params").begin(); it != jj.at("params").end(); ++it)
                job.opt.params[it.key()] =
                    it.value().is_string() ? parse_rat(it.value().get<std::string>(), "params")
                                           : Rational(it.value().get<long long>());
        }
        jobs.push_back(std::move(job));
    }

    std::vector<std::future<json>> futures;
    for (const auto& job : jobs)
        futures.push_back(std::async(std::launch::async, [&job] {
            try {
                json r = dispatch(job.command, job.input, job.opt);
                r["command"] = job.command;
                r["seed"] = job.opt.seed;
                r["status"] =
                    (job.opt.expect && *job.opt.expect != r.at("result").get<std::string>())
                        ? "expect-mismatch"
                        : "ok";
                if (job.opt.expect) r["expect"] = *job.opt.expect;
                return r;
            } catch (const std::exception& e) {
                return json{{"command", job.command}, {"status", "error"}, {"error", e.what()}};
            }
        }));

    json reports = json::array();
    bool any_error = false, any_mismatch = false;
    for (auto& f : futures) {
        json r = f.get();
        std::string st = r.at("status").get<std::string>();
        any_error = any_error || st == "error";
        any_mismatch = any_mismatch || st == "expect-mismatch";
        reports.push_back(std::move(r));
    }
    std::string result = any_error ? "error" : any_mismatch ? "expect-mismatch" : "ok";
    json values;
    values["jobs"] = reports;
    return json{{"values", values}, {"result", result}};
}

json dispatch(const std::string& cmd, const json& in, const Options& opt) {
    if (cmd == "symbol") return run_symbol(in, opt);
    if (cmd == "tanaka") return run_tanaka(in, opt);
    if (cmd == "flag") return run_flag(in, opt);
    if (cmd == "symcheck") return run_symcheck(in, opt);
    if (cmd == "polysym") return run_polysym(in, opt);
    if (cmd == "killing") return run_killing(in, opt);
    if (cmd == "liealg") return run_liealg(in, opt);
    if (cmd == "gap-report") return run_gap_report(in, opt);
    if (cmd == "batch") return run_batch(in, opt);
    throw SchemaError("unknown command \"" + cmd + "\"");
}

// ------------------------------------------------------------------ output

void print_value(std::ostream& os, const json& v) {
    if (v.is_string()) os << v.get<std::string>();
    else os << v.dump();
}

void print_text(std::ostream& os, const std::string& cmd, const json& report) {
    if (cmd == "gap-report") {
        const auto& rows = report.at("values").at("rows");
        std::size_t w = 0;
        for (const auto& r : rows)
            w = std::max(w, r.at("structure").get<std::string>().size());
        os << std::left << std::setw(static_cast<int>(w)) << "structure"
           << "  expected  computed  match\n";
        for (const auto& r : rows) {
            os << std::left << std::setw(static_cast<int>(w))
               << r.at("structure").get<std::string>() << "  " << std::right << std::setw(8)
               << r.at("expected").get<long>() << "  " << std::setw(8)
               << r.at("computed").get<long>() << "  "
               << (r.at("match").get<bool>() ? "yes" : "NO")
               << (r.at("realized").get<bool>() ? "  (realized model)" : "") << "\n";
        }
        os << "result: " << report.at("result").get<std::string>() << "\n";
        return;
    }
    if (cmd == "batch") {
        for (const auto& r : report.at("values").at("jobs")) {
            os << r.at("command").get<std::string>() << ": "
               << r.at("status").get<std::string>();
            if (r.contains("result")) {
                os << "  result=";
                print_value(os, r.at("result"));
            }
            if (r.contains("error")) os << "  " << r.at("error").get<std::string>();
            os << "\n";
        }
        os << "result: " << report.at("result").get<std::string>() << "\n";
        return;
    }
    for (auto it = report.at("values").begin(); it != report.at("values").end(); ++it) {
        os << it.key() << " = ";
        print_value(os, it.value());
        os << "\n";
    }
    os << "result: " << report.at("result").get<std::string>() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetry and integral dimension computations"};
    app.require_subcommand(1);

    Options opt;
    std::string input_path;
    std::vector<std::string> param_args;
    std::string expect_arg;
    int cap_arg = -1;

    const std::vector<std::string> commands = {"symbol", "tanaka",  "flag",       "symcheck",
                                               "polysym", "killing", "liealg",     "gap-report",
                                               "batch"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : commands) {
        auto* s = app.add_subcommand(c);
        s->add_option("--input", input_path, "JSON job description");
        s->add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
        s->add_option("--cap", cap_arg, "iteration cap override");
        s->add_option("--extra-orders", opt.extra_orders, "extra jet orders past the base")
            ->capture_default_str();
        s->add_option("--param", param_args, "parameter binding name=value (repeatable)");
        s->add_option("--expect", expect_arg, "expected result; mismatch exits 2");
        s->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "machine"}))
            ->capture_default_str();
        subs[c] = s;
    }

    CLI11_PARSE(app, argc, argv);

    std::string cmd;
    for (const auto& [name, s] : subs)
        if (s->parsed()) cmd = name;

    try {
        if (cap_arg >= 0) opt.cap = cap_arg;
        if (!expect_arg.empty()) opt.expect = expect_arg;
        for (const auto& p : param_args) {
            auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0)
                throw SchemaError("--param expects name=value, got \"" + p + "\"");
            opt.params[p.substr(0, eq)] = parse_rat(p.substr(eq + 1), "--param");
        }

        json in;
        if (!input_path.empty()) in = load_input(input_path);
        else if (cmd != "gap-report")
            throw SchemaError(cmd + ": --input FILE is required");

        json report = dispatch(cmd, in, opt);
        report["command"] = cmd;
        report["seed"] = opt.seed;
        if (opt.cap) report["cap"] = *opt.cap;
        if (cmd == "killing" || cmd == "batch") report["extra_orders"] = opt.extra_orders;

        bool mismatch = false;
        std::string result = report.at("result").get<std::string>();
        if (opt.expect && *opt.expect != result) mismatch = true;
        if (cmd == "gap-report" && result != "ok") mismatch = true;
        if (cmd == "batch" && result == "expect-mismatch") mismatch = true;
        if (cmd == "batch" && result == "error") {
            if (opt.format == "machine") std::cout << report.dump() << "\n";
            else print_text(std::cout, cmd, report);
            return 1;
        }
        report["status"] = mismatch ? "expect-mismatch" : "ok";

        if (opt.format == "machine") std::cout << report.dump() << "\n";
        else print_text(std::cout, cmd, report);
        return mismatch ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
