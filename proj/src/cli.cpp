#include "opcalc/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "opcalc/errors.hpp"
#include "opcalc/parser.hpp"

namespace opcalc::cli {

namespace {

using nlohmann::json;

json constant_json(const Constant& c) {
    if (std::holds_alternative<Rational>(c)) return std::get<Rational>(c).str();
    return std::get<double>(c);
}

json value_json(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
    return std::get<double>(v);
}

json basis_json(const BasisElement& b) {
    if (b.is_exact()) return {{"kind", "exact"}, {"expr", b.exact().str()}};
    const NumericMode& m = b.numeric();
    return {{"kind", "numeric"}, {"modulus", m.modulus}, {"angle", m.angle}, {"power", m.power},
            {"part", m.sine ? "sin" : "cos"}, {"display", m.str()}};
}

json operator_json(const OperatorPoly& op) {
    json coeffs = json::array();
    for (const auto& a : op.leading_first()) coeffs.push_back(a.str());
    return {{"display", op.str()}, {"coefficients", coeffs}};
}

json report_json(const VerifyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json j = {{"method", method_str(c.method)},
                  {"range", {c.t_min, c.t_max}},
                  {"status", status_str(c.status)},
                  {"max_abs_deviation", c.max_abs_deviation}};
        if (c.mismatch) {
            j["mismatch"] = {{"t", c.mismatch->t},
                             {"expected", value_json(c.mismatch->expected)},
                             {"got", value_json(c.mismatch->got)},
                             {"channel", c.mismatch->channel}};
        }
        checks.push_back(std::move(j));
    }
    return {{"ok", report.ok()}, {"checks", checks}};
}

std::string report_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << "  " << method_str(c.method) << " on " << c.t_min << ".." << c.t_max << ": " << status_str(c.status);
        if (c.status == VerifyStatus::within_tolerance) os << " " << c.max_abs_deviation;
        if (c.mismatch) {
            os << " t=" << c.mismatch->t << " expected " << value_str(c.mismatch->expected) << " got "
               << value_str(c.mismatch->got);
            if (c.mismatch->channel != "1") os << " [" << c.mismatch->channel << " channel]";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const OutputDocument& doc) {
    json j;
    if (doc.applied) {
        j["input"] = {{"expression", doc.equation_input}};
    } else {
        j["input"] = {{"equation", doc.equation_input},
                      {"initial", doc.initial_input ? json(*doc.initial_input) : json(nullptr)}};
    }
    if (doc.op) {
        j["operator"] = operator_json(*doc.op);
    } else if (doc.equation) {
        j["operator"] = operator_json(doc.equation->op);
    } else {
        j["operator"] = nullptr;
    }
    if (doc.applied) j["result"] = doc.applied->str();
    if (doc.equation) j["equation"] = doc.equation->str();

    if (doc.solution) {
        const Solution& sol = *doc.solution;
        j["particular"] = sol.particular.str();
        json basis = json::array();
        for (const auto& b : sol.homogeneous) basis.push_back(basis_json(b));
        j["homogeneous"] = basis;
        if (sol.constants) {
            json cs = json::array();
            for (const auto& c : *sol.constants) cs.push_back(constant_json(c));
            j["constants"] = cs;
        } else {
            j["constants"] = nullptr;
        }
        const auto general = sol.general_exact();
        j["general"] = general ? json(general->str()) : json(nullptr);
        json trace = json::array();
        if (doc.include_trace) {
            for (const auto& s : sol.trace.steps) {
                trace.push_back({{"rule", rule_id(s.rule)},
                                 {"label", rule_label(s.rule)},
                                 {"before", s.before},
                                 {"after", s.after},
                                 {"note", s.note}});
            }
        }
        j["trace"] = trace;
    }
    if (!doc.applied) j["verification"] = doc.verification ? report_json(*doc.verification) : json(nullptr);
    return j;
}

std::string to_text(const OutputDocument& doc) {
    std::ostringstream os;
    if (doc.applied) {
        os << doc.applied->str() << "\n";
        return os.str();
    }
    if (doc.equation) {
        os << "equation:     " << doc.equation->str() << "\n";
        os << "operator:     " << doc.equation->op.str() << "\n";
    }
    if (doc.solution) {
        const Solution& sol = *doc.solution;
        os << "particular:   " << sol.particular.str() << "\n";
        os << "homogeneous:  ";
        for (std::size_t i = 0; i < sol.homogeneous.size(); ++i) {
            os << (i ? ", " : "") << sol.homogeneous[i].str();
        }
        os << (sol.homogeneous.empty() ? "(none)" : "") << "\n";
        if (sol.constants) {
            os << "constants:    ";
            for (std::size_t i = 0; i < sol.constants->size(); ++i) {
                const Constant& c = (*sol.constants)[i];
                os << (i ? ", " : "") << "c" << (i + 1) << " = "
                   << (std::holds_alternative<Rational>(c) ? std::get<Rational>(c).str()
                                                           : value_str(std::get<double>(c)));
            }
            os << "\n";
            if (const auto general = sol.general_exact()) os << "general:      " << general->str() << "\n";
        }
        if (doc.include_trace) {
            os << "trace:\n";
            for (std::size_t i = 0; i < sol.trace.steps.size(); ++i) {
                const TraceStep& s = sol.trace.steps[i];
                os << "  " << (i + 1) << ". " << rule_id(s.rule) << "  (" << rule_label(s.rule) << ")\n"
                   << "     " << s.before << "  ->  " << s.after << "\n";
                if (!s.note.empty()) os << "     " << s.note << "\n";
            }
        }
    }
    if (doc.verification) os << "verification: " << (doc.verification->ok() ? "ok" : "FAILED") << "\n"
                             << report_text(*doc.verification);
    return os.str();
}

namespace {

struct Options {
    std::string equation;
    std::string second;  // solution text for verify, expression for apply
    std::string initial;
    long horizon = -1;
    bool trace = false;
    std::string format = "text";
    // Text being parsed when a ParseError escapes, for the caret diagnostic.
    std::string current_input;
};

void emit(const OutputDocument& doc, const Options& opts, std::ostream& out) {
    if (opts.format == "json") {
        out << to_json(doc).dump(2) << "\n";
    } else {
        out << to_text(doc);
    }
}

Equation read_equation(Options& opts) {
    opts.current_input = opts.equation;
    Equation eq = parse_equation(opts.equation);
    if (!opts.initial.empty()) {
        opts.current_input = opts.initial;
        eq.initial = parse_initial(opts.initial);
        eq.validate();
    }
    return eq;
}

OutputDocument base_document(const Options& opts) {
    OutputDocument doc;
    doc.equation_input = opts.equation;
    if (!opts.initial.empty()) doc.initial_input = opts.initial;
    return doc;
}

int cmd_solve(Options& opts, std::ostream& out) {
    OutputDocument doc = base_document(opts);
    const Equation eq = read_equation(opts);
    doc.equation = eq;
    doc.solution = solve(eq);
    doc.include_trace = opts.trace;
    if (opts.horizon >= 0) doc.verification = verify_solution(eq, *doc.solution, opts.horizon);
    emit(doc, opts, out);
    return doc.verification && !doc.verification->ok() ? kVerifyMismatch : kOk;
}

int cmd_apply(Options& opts, std::ostream& out) {
    OutputDocument doc;
    doc.equation_input = opts.second;
    opts.current_input = opts.equation;
    const OperatorPoly op = parse_operator(opts.equation);
    doc.op = op;
    opts.current_input = opts.second;
    doc.applied = apply_operator(op, parse_expression(opts.second));
    emit(doc, opts, out);
    return kOk;
}

int cmd_verify(Options& opts, std::ostream& out) {
    OutputDocument doc = base_document(opts);
    const Equation eq = read_equation(opts);
    Solution sol;
    opts.current_input = opts.second;
    sol.particular = parse_expression(opts.second);
    sol.homogeneous = solve_homogeneous(eq.op);
    if (eq.initial) sol.constants = fit_constants(eq.op, sol.particular, sol.homogeneous, *eq.initial);
    doc.equation = eq;
    doc.solution = sol;
    doc.verification = verify_solution(eq, sol, opts.horizon >= 0 ? opts.horizon : kDefaultHorizon);
    emit(doc, opts, out);
    return doc.verification->ok() ? kOk : kVerifyMismatch;
}

void report_parse_error(const ParseError& e, const std::string& input, std::ostream& err) {
    err << "error: expected " << e.expected() << " at offset " << e.offset() << "\n";
    if (e.offset() <= input.size()) {
        err << "  " << input << "\n  " << std::string(e.offset(), ' ') << "^\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form solver for linear difference equations with constant coefficients", "opcalc"};
    app.require_subcommand(1);
    Options opts;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* solve_cmd = app.add_subcommand("solve", "Solve an equation such as \"y(t+1)-2*y(t)=2^t\"");
    solve_cmd->add_option("equation", opts.equation, "Equation")->required();
    solve_cmd->add_option("--initial", opts.initial, "Initial conditions, e.g. \"y(0)=0, y(1)=1\"");
    solve_cmd->add_option("--verify", opts.horizon, "Verify over -N..N (forward) and N steps (iteration)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--trace", opts.trace, "Include the rule trace");
    add_format(solve_cmd);

    auto* explain_cmd = app.add_subcommand("explain", "Solve and print the rule trace");
    explain_cmd->add_option("equation", opts.equation, "Equation")->required();
    explain_cmd->add_option("--initial", opts.initial, "Initial conditions");
    explain_cmd->add_option("--verify", opts.horizon, "Verify over -N..N (forward) and N steps (iteration)")
        ->check(CLI::NonNegativeNumber);
    add_format(explain_cmd);

    auto* apply_cmd = app.add_subcommand("apply", "Apply an operator polynomial in T to an expression");
    apply_cmd->add_option("operator", opts.equation, "Operator, e.g. \"T^2-5*T+4\"")->required();
    apply_cmd->add_option("expression", opts.second, "Expression in t")->required();
    add_format(apply_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a proposed particular solution");
    verify_cmd->add_option("equation", opts.equation, "Equation")->required();
    verify_cmd->add_option("solution", opts.second, "Particular solution in canonical syntax")->required();
    verify_cmd->add_option("--initial", opts.initial, "Initial conditions");
    verify_cmd->add_option("--verify", opts.horizon, "Horizon N (default 50)")->check(CLI::NonNegativeNumber);
    add_format(verify_cmd);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (!argv.empty()) argv.pop_back();
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out;
        std::ostringstream cli_err;
        const int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(opts, out);
        if (explain_cmd->parsed()) {
            opts.trace = true;
            return cmd_solve(opts, out);
        }
        if (apply_cmd->parsed()) return cmd_apply(opts, out);
        return cmd_verify(opts, out);
    } catch (const ParseError& e) {
        report_parse_error(e, opts.current_input, err);
        return kParseError;
    } catch (const UnsupportedRhs& e) {
        err << "error: unsupported right-hand side: " << e.what() << "\n";
        return kUnsupportedRhs;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const ZeroOperator& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const SingularSystem& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace opcalc::cli
