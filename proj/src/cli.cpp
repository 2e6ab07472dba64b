#include "shadowsum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadowsum/charvar.hpp"
#include "shadowsum/checks.hpp"
#include "shadowsum/errors.hpp"
#include "shadowsum/statesum.hpp"

namespace shadowsum::cli {

namespace {

using Record = nlohmann::ordered_json;

struct RunFailure {
    int code;
    std::string kind;
    std::string type;
    std::string message;
};

std::string dec(const Real& x) { return x.to_string(); }

Record complex_record(const Complex& z) { return Record::array({dec(z.re), dec(z.im)}); }

class Sink {
public:
    Sink(std::ostream& out, bool human) : out_(out), human_(human) {}

    void emit(const Record& r) {
        if (!human_) {
            out_ << r.dump() << '\n';
            return;
        }
        for (const auto& [k, v] : r.items()) out_ << k << ": " << render(v) << '\n';
        out_ << '\n';
    }

private:
    static std::string render(const Record& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string())
            return v[0].get<std::string>() + " + " + v[1].get<std::string>() + "i";
        return v.dump();
    }

    std::ostream& out_;
    bool human_;
};

Record error_record(const RunFailure& f) {
    Record r;
    r["record"] = "error";
    r["kind"] = f.kind;
    r["type"] = f.type;
    r["message"] = f.message;
    r["exit"] = f.code;
    return r;
}

EvalOptions options_of(const RunConfig& c) {
    EvalOptions opt;
    opt.epsilon = c.epsilon;
    opt.max_shells = c.max_shells;
    opt.workers = c.workers;
    return opt;
}

Shadow load_input(const RunConfig& c) {
    if (c.input.empty()) throw UsageError(c.subcommand + " needs an input file");
    return load_shadow(c.input);
}

Record eval_record(const std::string& command, const ScalarContext& ctx, const EvalResult& r) {
    Record rec;
    rec["record"] = command;
    rec["t"] = ctx.describe();
    rec["status"] = to_string(r.status);
    rec["value"] = complex_record(r.value);
    rec["exact"] = r.exact ? Record(r.exact->get_str()) : Record(nullptr);
    rec["closed_form"] = r.closed_form ? Record(r.closed_form->to_string()) : Record(nullptr);
    rec["tail_bound"] = r.tail_bound ? Record(dec(*r.tail_bound)) : Record(nullptr);
    rec["shells_summed"] = r.shells_summed;
    rec["diagnostics"] = r.diagnostics;
    return rec;
}

int run_eval(const RunConfig& c, Sink& sink) {
    Shadow s = load_input(c);
    ScalarContext ctx = parse_scalar(c.t, c.precision_bits);
    EvalResult r = evaluate(s, ctx, options_of(c));
    sink.emit(eval_record("eval", ctx, r));
    return kOk;
}

int run_shadow(const RunConfig& c, Sink& sink) {
    Shadow s = load_input(c);
    ScalarContext ctx = parse_scalar(c.t, c.precision_bits);
    const EvalOptions opt = options_of(c);
    if (s.closed() && ctx.mode != ScalarMode::RootOfUnity) {
        Classification cl = classify_convergence(s, ctx, opt);
        if (cl.verdict == Convergence::DivergenceDetected) {
            Record r = error_record({kDivergence, "divergence", "Divergent", "series diverges: " + cl.reason});
            r["status"] = to_string(cl.verdict);
            r["t"] = ctx.describe();
            sink.emit(r);
            return kDivergence;
        }
    }
    EvalResult r = eval_shadow(s, ctx, opt);
    sink.emit(eval_record("shadow", ctx, r));
    return kOk;
}

int run_table(const RunConfig& c, Sink& sink) {
    for (const TableRow& row : reproduce_table(c.epsilon, c.precision_bits)) {
        Record r;
        r["record"] = "table";
        r["G"] = row.genus;
        r["G1"] = row.g1;
        r["G2"] = row.g2;
        r["expression"] = row.expression.to_string();
        r["numeric"] = dec(row.numeric);
        r["series"] = dec(row.series);
        r["series_tail"] = dec(row.series_tail);
        sink.emit(r);
    }
    return kOk;
}

int run_check(const RunConfig& c, Sink& sink) {
    const auto known = check_suite_names();
    std::vector<std::string> suites = c.suites.empty() ? known : c.suites;
    for (const auto& name : suites)
        if (std::find(known.begin(), known.end(), name) == known.end()) throw UsageError("unknown check suite: " + name);
    bool all = true;
    long total = 0;
    for (const auto& name : suites)
        for (const CheckResult& res : run_check_suite(name, options_of(c))) {
            Record r;
            r["record"] = "check";
            r["suite"] = res.suite;
            r["name"] = res.name;
            r["passed"] = res.passed;
            r["cases"] = res.cases;
            r["residual"] = res.residual;
            r["detail"] = res.detail;
            sink.emit(r);
            all = all && res.passed;
            ++total;
        }
    Record summary;
    summary["record"] = "check_summary";
    summary["checks"] = total;
    summary["passed"] = all;
    sink.emit(summary);
    return all ? kOk : kFailure;
}

int run_limit(const RunConfig& c, Sink& sink) {
    Shadow s = load_input(c);
    if (c.r_list.empty()) throw UsageError("limit needs at least one r");
    LimitScan scan = limit_scan(s, c.r_list, options_of(c), c.precision_bits);
    Record ref;
    ref["record"] = "limit_reference";
    ref["value"] = complex_record(scan.reference);
    sink.emit(ref);
    for (const LimitPoint& p : scan.points) {
        Record r;
        r["record"] = "limit";
        r["r"] = p.r;
        r["value"] = complex_record(p.value);
        r["difference"] = p.difference;
        sink.emit(r);
    }
    return kOk;
}

int dispatch(const RunConfig& c, Sink& sink) {
    if (!(c.epsilon > 0)) throw UsageError("--epsilon must be positive");
    if (c.max_shells < 1) throw UsageError("--max-shells must be positive");
    if (c.workers < 0) throw UsageError("--workers must be >= 0");
    if (c.precision_bits < 32) throw UsageError("--precision-bits must be >= 32");
    if (c.subcommand == "eval") return run_eval(c, sink);
    if (c.subcommand == "shadow") return run_shadow(c, sink);
    if (c.subcommand == "table") return run_table(c, sink);
    if (c.subcommand == "check") return run_check(c, sink);
    if (c.subcommand == "limit") return run_limit(c, sink);
    throw UsageError("unknown subcommand: " + c.subcommand);
}

template <class E>
bool is(const std::exception& e) {
    return dynamic_cast<const E*>(&e) != nullptr;
}

RunFailure classify(const std::exception& e) {
    if (is<UsageError>(e)) return {kUsage, "usage", "UsageError", e.what()};
    if (is<Divergent>(e)) return {kDivergence, "divergence", "Divergent", e.what()};
    if (is<ParseError>(e)) return {kInput, "input", "ParseError", e.what()};
    if (is<ValidationError>(e)) return {kInput, "input", "ValidationError", e.what()};
    if (is<MissingDecoration>(e)) return {kInput, "input", "MissingDecoration", e.what()};
    if (is<PreconditionViolated>(e)) return {kInput, "input", "PreconditionViolated", e.what()};
    if (is<NonAdmissible>(e)) return {kInput, "input", "NonAdmissible", e.what()};
    if (is<OddIndex>(e)) return {kInput, "input", "OddIndex", e.what()};
    if (is<BoundExceeded>(e)) return {kFailure, "internal", "BoundExceeded", e.what()};
    if (is<DivisionByZero>(e)) return {kFailure, "internal", "DivisionByZero", e.what()};
    return {kFailure, "internal", "Exception", e.what()};
}

}  // namespace

ScalarContext parse_scalar(const std::string& text, long precision_bits) {
    static const std::regex root(R"(root:([0-9]+))");
    static const std::regex pair(R"(\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*,\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*)");
    std::smatch m;
    if (text == "minus-one") {
        ScalarContext ctx = ScalarContext::minus_one();
        ctx.precision_bits = precision_bits;
        ctx.t = Complex(-1L, precision_bits);
        ctx.sqrt_t = i_pow(1, precision_bits);
        return ctx;
    }
    if (std::regex_match(text, m, root)) {
        if (m[1].length() > 6) throw UsageError("root order too large: " + text);
        const int r = std::stoi(m[1]);
        if (r < 3 || r % 2 == 0) throw UsageError("root:r needs odd r >= 3");
        return ScalarContext::root_of_unity(r, precision_bits);
    }
    if (std::regex_match(text, m, pair)) {
        Complex t(Real(m[1].str(), precision_bits), Real(m[2].str(), precision_bits));
        if (t.is_zero()) throw UsageError("t must be nonzero");
        return ScalarContext::generic(t, precision_bits);
    }
    throw UsageError("--t expects minus-one, re,im or root:r; got '" + text + "'");
}

int run(const RunConfig& config, std::ostream& out) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            Sink(out, config.human).emit(error_record({kInput, "input", "IOError", "cannot open output " + config.output}));
            return kInput;
        }
        target = &file;
    }
    Sink sink(*target, config.human);
    try {
        return dispatch(config, sink);
    } catch (const std::exception& e) {
        sink.emit(error_record(classify(e)));
        return classify(e).code;
    }
}

int main(int argc, const char* const* argv, std::ostream& out) {
    RunConfig c;
    c.precision_bits = default_precision_bits();

    CLI::App app{"Yang-Mills measure of skein elements via shadow state sums", "shadowsum"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool scalar) {
        if (scalar) sub->add_option("--t", c.t, "minus-one | re,im | root:r")->capture_default_str();
        sub->add_option("--epsilon", c.epsilon, "target tail bound")->capture_default_str();
        sub->add_option("--precision-bits", c.precision_bits, "working precision (also SHADOWSUM_PRECISION_BITS)");
        sub->add_option("--max-shells", c.max_shells, "shell cap for infinite sums")->capture_default_str();
        sub->add_option("--workers", c.workers, "worker threads, 0 for all cores")->capture_default_str();
        sub->add_option("--output", c.output, "write records here instead of standard output");
        sub->add_flag("--human", c.human, "readable key: value rendering");
    };
    auto* eval = app.add_subcommand("eval", "evaluate a diagram with the routed engine");
    common(eval, true);
    eval->add_option("input", c.input, "diagram document")->required();
    auto* shadow = app.add_subcommand("shadow", "classify and sum a pure shadow");
    common(shadow, true);
    shadow->add_option("input", c.input, "shadow document")->required();
    auto* table = app.add_subcommand("table", "integrals of separating curves");
    common(table, false);
    auto* check = app.add_subcommand("check", "identity suites");
    common(check, false);
    check->add_option("--suite", c.suites, "suite name, repeatable");
    auto* limit = app.add_subcommand("limit", "roots of unity against twice the t = -1 value");
    common(limit, false);
    limit->add_option("input", c.input, "closed diagram document")->required();
    limit->add_option("--r", c.r_list, "odd orders, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        Sink(out, false).emit(error_record({kUsage, "usage", "UsageError", e.what()}));
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
    return run(c, out);
}

}  // namespace shadowsum::cli
