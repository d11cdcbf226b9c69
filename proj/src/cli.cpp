#include "qzeta/cli.hpp"

#include "qzeta/error.hpp"
#include "qzeta/identities.hpp"
#include "qzeta/report.hpp"
#include "qzeta/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace qzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

struct EvalArgs {
    std::string comp;
    int phi = 0;
    std::string q;
    bool classical = false;
    std::string tol = "1e-10";
    int digits = 20;
    std::int64_t max_terms = 1'000'000;
    bool json = false;
};

struct VerifyArgs {
    int s = 0;
    int t = 0;
    std::string q;
    std::string tol = "1e-20";
    std::int64_t max_terms = 1'000'000;
    long N = 2000;
    int a = 0;
    int b = 0;
    int j = 1;
    bool emit = false;
    bool json = false;
};

struct SweepArgs {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> settings;
};

struct LimitArgs {
    int s = 0;
    int t = 0;
    int steps = 0;
    std::string tol = "1e-6";
    int digits = 12;
    std::int64_t max_terms = 1'000'000;
    bool json = false;
};

ordered_json enclosure_json(const Enclosure& e)
{
    return ordered_json{{"lo", e.lo().str()}, {"hi", e.hi().str()}};
}

int cmd_eval(const EvalArgs& args, std::ostream& out)
{
    const Rational tol = parse_tolerance(args.tol);
    EvalOptions opts;
    opts.max_terms = args.max_terms;
    if (args.comp.empty() == (args.phi == 0)) {
        throw DomainError("give exactly one of --comp and --phi");
    }
    Target target = args.comp.empty() ? Target::phi(args.phi) : Target::qzeta(Composition::parse(args.comp));
    std::optional<QParam> q;
    if (args.classical) {
        if (target.kind == SeriesKind::Phi) {
            throw DomainError("--phi has no classical counterpart");
        }
        if (!args.q.empty()) {
            throw DomainError("--classical takes no --q");
        }
        target.kind = SeriesKind::ClassicalZeta;
    } else {
        if (args.q.empty()) {
            throw DomainError("--q is required unless --classical is given");
        }
        q.emplace(Rational::parse(args.q));
    }
    const Evaluation e = evaluate(EvalRequest{target, q, tol}, opts);
    if (args.json) {
        ordered_json j;
        j["tool_version"] = tool_version;
        j["target"] = target.str();
        j["q"] = q ? ordered_json(q->value().str()) : ordered_json(nullptr);
        j["tol"] = tol.str();
        j["enclosure"] = enclosure_json(e.value);
        j["width"] = e.value.width().str();
        j["truncation"] = e.truncation;
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "target: " << target.str() << '\n';
    if (q) {
        out << "q: " << q->value() << '\n';
    }
    out << "tol: " << tol << '\n'
        << "lo: " << e.value.lo() << '\n'
        << "hi: " << e.value.hi() << '\n'
        << "lo (" << args.digits << " digits): " << e.value.lo().to_decimal(args.digits) << '\n'
        << "hi (" << args.digits << " digits): " << e.value.hi().to_decimal(args.digits) << '\n'
        << "truncation: " << e.truncation << '\n';
    return exit_ok;
}

int emit_report(const VerificationReport& report, const std::string& config_json, bool json, std::ostream& out)
{
    const Record rec = to_record(report);
    if (json) {
        out << render_json(config_json, {rec});
    } else {
        out << rec.identity << " s=" << rec.s << " t=" << rec.t;
        if (rec.q) {
            out << " q=" << *rec.q;
        }
        out << '\n'
            << "  status: " << status_name(rec.status) << '\n'
            << "  lhs: [" << rec.lhs.lo().to_decimal(30) << ", " << rec.lhs.hi().to_decimal(30) << "]\n"
            << "  rhs: [" << rec.rhs.lo().to_decimal(30) << ", " << rec.rhs.hi().to_decimal(30) << "]\n"
            << "  width: " << rec.width.to_decimal(40) << " (tol " << report.tol << ")\n"
            << "  max truncation: " << rec.max_truncation << '\n';
    }
    return exit_code_for({rec.status});
}

std::string verify_config_json(const std::string& name, const VerifyArgs& args)
{
    ordered_json j;
    j["command"] = "verify " + name;
    j["s"] = args.s;
    j["t"] = args.t;
    if (!args.q.empty()) {
        j["q"] = Rational::parse(args.q).str();
    }
    j["tol"] = parse_tolerance(args.tol).str();
    j["max_terms"] = args.max_terms;
    return j.dump();
}

int cmd_verify_numeric(const std::string& name, const VerifyArgs& args, std::ostream& out)
{
    const Rational tol = parse_tolerance(args.tol);
    EvalOptions opts;
    opts.max_terms = args.max_terms;
    const IdentityKind kind = parse_identity_name(name);
    std::optional<QParam> q;
    if (is_q_identity(kind)) {
        if (args.q.empty()) {
            throw DomainError("verify " + name + " requires --q");
        }
        q.emplace(Rational::parse(args.q));
    } else if (!args.q.empty()) {
        throw DomainError("verify euler takes no --q");
    }
    VerificationReport report;
    switch (kind) {
    case IdentityKind::EulerClassical: report = evaluate_identity(euler_terms(args.s, args.t), q, tol, opts); break;
    case IdentityKind::QDecomposition: report = evaluate_identity(q_euler_terms(args.s, args.t), q, tol, opts); break;
    case IdentityKind::QStuffle: report = evaluate_identity(stuffle_terms(args.s, args.t), q, tol, opts); break;
    case IdentityKind::CrossCheck: report = cross_check(args.s, args.t, *q, tol, opts); break;
    }
    return emit_report(report, verify_config_json(name, args), args.json, out);
}

int cmd_verify_symbolic(const std::string& name, const VerifyArgs& args, std::ostream& out)
{
    bool ok = false;
    if (name == "lemma") {
        const LemmaInstance inst = build_lemma(args.s, args.t);
        ok = verify_lemma(inst);
        if (args.emit) {
            out << lemma_text(inst) << '\n';
        }
    } else if (name == "parfrac") {
        ok = verify_parfrac(args.s, args.t) && verify_parfrac_by_substitution(args.s, args.t);
        if (args.emit) {
            out << parfrac_lhs(args.s, args.t).str({"X", "C", "Q"}) << " = "
                << parfrac_rhs(args.s, args.t).str({"X", "C", "Q"}) << '\n';
        }
    } else {
        ok = verify_operator(args.s, args.t);
        if (args.emit) {
            out << derive_lemma_by_operator(args.s, args.t).str() << '\n';
        }
    }
    const std::string status = ok ? "verified" : "violated";
    if (args.json) {
        ordered_json top;
        top["tool_version"] = tool_version;
        top["config"] = {{"command", "verify " + name}, {"s", args.s}, {"t", args.t}};
        top["records"] = ordered_json::array({{{"identity", name}, {"s", args.s}, {"t", args.t}, {"status", status}}});
        out << top.dump(2) << '\n';
    } else {
        out << name << " s=" << args.s << " t=" << args.t << "\n  status: " << status << '\n';
    }
    return ok ? exit_ok : exit_violated;
}

ordered_json proof_check_json(const ProofSumCheck& c)
{
    ordered_json j;
    j["sum"] = c.kind == ProofSumKind::S ? "S" : "T";
    j["indices"] = c.indices;
    j["target"] = c.target.str();
    j["N"] = c.N;
    j["direct"] = enclosure_json(c.direct);
    j["target_enclosure"] = enclosure_json(c.target_enclosure);
    j["slack"] = c.slack.str();
    j["status"] = c.consistent ? "verified" : "violated";
    return j;
}

int cmd_verify_proof_sums(const VerifyArgs& args, std::ostream& out)
{
    if (args.q.empty()) {
        throw DomainError("verify proof-sums requires --q");
    }
    const QParam q(Rational::parse(args.q));
    const ProofSumsReport report = verify_proof_sums(args.s, args.t, args.a, args.b, args.j, q, args.N);
    if (args.json) {
        ordered_json top;
        top["tool_version"] = tool_version;
        top["config"] = {{"command", "verify proof-sums"}, {"s", args.s}, {"t", args.t}, {"q", q.value().str()},
                         {"N", args.N}, {"a", args.a}, {"b", args.b}, {"j", args.j}};
        top["records"] = ordered_json::array({proof_check_json(report.S), proof_check_json(report.T)});
        out << top.dump(2) << '\n';
    } else {
        for (const auto* c : {&report.S, &report.T}) {
            out << (c->kind == ProofSumKind::S ? "S" : "T") << '[';
            for (std::size_t i = 0; i < c->indices.size(); ++i) {
                out << (i ? "," : "") << c->indices[i];
            }
            out << "] vs " << c->target.str() << " (N=" << c->N << ")\n"
                << "  direct: [" << c->direct.lo().to_decimal(30) << ", " << c->direct.hi().to_decimal(30) << "]\n"
                << "  series: [" << c->target_enclosure.lo().to_decimal(30) << ", "
                << c->target_enclosure.hi().to_decimal(30) << "]\n"
                << "  slack: " << c->slack.to_decimal(40) << '\n'
                << "  status: " << (c->consistent ? "verified" : "violated") << '\n';
        }
    }
    return report.consistent() ? exit_ok : exit_violated;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out)
{
    SweepConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) {
            throw DomainError("cannot read config file '" + args.config_path + "'");
        }
        config = parse_sweep_config(in);
    }
    for (const auto& [key, value] : args.settings) {
        apply_setting(config, key, value);
    }
    config.validate();

    std::ofstream file;
    if (config.output_path != "-") {
        file.open(config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw DomainError("cannot write output file '" + config.output_path + "'");
        }
    }
    const auto records = run_sweep(config);
    const std::string text = config.format == ReportFormat::Json ? render_json(sweep_config_json(config), records)
                                                                  : render_csv(records);
    std::ostream& sink = config.output_path == "-" ? out : file;
    sink << text;
    sink.flush();
    if (!sink) {
        throw DomainError("failed writing output '" + config.output_path + "'");
    }
    std::vector<Status> statuses;
    for (const auto& r : records) {
        statuses.push_back(r.status);
    }
    return exit_code_for(statuses);
}

int cmd_limit(const LimitArgs& args, std::ostream& out)
{
    if (args.s < 2 || args.t < 2) {
        throw DomainError("limit requires s >= 2 and t >= 2");
    }
    if (args.steps < 1) {
        throw DomainError("limit requires --steps >= 1");
    }
    if (args.steps > 30) {
        throw DomainError("limit supports at most 30 steps");
    }
    const Rational tol = parse_tolerance(args.tol);
    EvalOptions opts;
    opts.max_terms = args.max_terms;
    const auto classical = euler_terms(args.s, args.t);
    const Enclosure target = evaluate_lhs(classical.lhs, std::nullopt, tol, opts);
    const auto decomposition = q_euler_terms(args.s, args.t);

    ordered_json rows = ordered_json::array();
    std::vector<Rational> gaps;
    if (!args.json) {
        out << "classical zeta(" << args.s << ")zeta(" << args.t << ") in [" << target.lo().to_decimal(args.digits)
            << ", " << target.hi().to_decimal(args.digits) << "]\n"
            << "classical midpoint: " << target.midpoint().to_decimal(args.digits) << '\n'
            << "m\tq\tq-product midpoint\tgap\n";
    }
    for (int m = 1; m <= args.steps; ++m) {
        const Rational qv = Rational(1) - Rational::pow2(-m);
        const Enclosure product = evaluate_rhs(decomposition.terms, QParam(qv), tol, opts);
        const Rational gap = (product.midpoint() - target.midpoint()).abs();
        gaps.push_back(gap);
        if (args.json) {
            rows.push_back({{"m", m}, {"q", qv.str()}, {"q_product", enclosure_json(product)},
                            {"midpoint", product.midpoint().str()}, {"gap", gap.str()}});
        } else {
            out << m << '\t' << qv << '\t' << product.midpoint().to_decimal(args.digits) << '\t'
                << gap.to_decimal(args.digits) << '\n';
        }
    }
    const bool shrinks = gaps.size() < 2 || gaps.back() < gaps.front();
    if (args.json) {
        ordered_json top;
        top["tool_version"] = tool_version;
        top["config"] = {{"command", "limit"}, {"s", args.s}, {"t", args.t}, {"steps", args.steps},
                         {"tol", tol.str()}};
        top["classical"] = enclosure_json(target);
        top["classical_midpoint"] = target.midpoint().str();
        top["rows"] = rows;
        top["gap_shrinks"] = shrinks;
        out << top.dump(2) << '\n';
    } else {
        out << "final gap " << (shrinks ? "<" : ">=") << " first gap\n";
    }
    return shrinks ? exit_ok : exit_violated;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigorous q-multiple zeta values and decomposition identity checks", "qzeta"};
    app.require_subcommand(1);
    std::function<int()> action;

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Enclose zeta[...], phi[s] or a classical zeta value");
    eval_cmd->add_option("--comp", eval.comp, "Composition s1,s2,...");
    eval_cmd->add_option("--phi", eval.phi, "Evaluate phi[S]");
    eval_cmd->add_option("--q", eval.q, "q as p/q or decimal, 0 < q < 1");
    eval_cmd->add_flag("--classical", eval.classical, "Classical zeta (no q)");
    eval_cmd->add_option("--tol", eval.tol, "Tolerance: 1eNN (10^-NN) or rational");
    eval_cmd->add_option("--digits", eval.digits, "Digits in the decimal rendering");
    eval_cmd->add_option("--max-terms", eval.max_terms, "Truncation cap per series");
    eval_cmd->add_flag("--json", eval.json, "JSON output");
    eval_cmd->callback([&] { action = [&] { return cmd_eval(eval, out); }; });

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify an identity");
    verify_cmd->require_subcommand(1);
    const auto add_st = [&](CLI::App* c) {
        c->add_option("--s", verify.s, "s")->required();
        c->add_option("--t", verify.t, "t")->required();
        c->add_flag("--json", verify.json, "JSON output");
    };
    for (const std::string name : {"qdecomp", "stuffle", "cross", "euler"}) {
        auto* c = verify_cmd->add_subcommand(name, "Numeric check of the " + name + " identity");
        add_st(c);
        if (name != "euler") {
            c->add_option("--q", verify.q, "q, 0 < q < 1")->required();
        }
        c->add_option("--tol", verify.tol, "Tolerance: 1eNN (10^-NN) or rational");
        c->add_option("--max-terms", verify.max_terms, "Truncation cap per series");
        c->callback([&, name] { action = [&, name] { return cmd_verify_numeric(name, verify, out); }; });
    }
    for (const std::string name : {"lemma", "parfrac", "operator"}) {
        auto* c = verify_cmd->add_subcommand(name, "Exact symbolic check: " + name);
        add_st(c);
        c->add_flag("--emit", verify.emit, "Print the identity in linear text form");
        c->callback([&, name] { action = [&, name] { return cmd_verify_symbolic(name, verify, out); }; });
    }
    {
        auto* c = verify_cmd->add_subcommand("proof-sums", "Direct double sums S and T against the series");
        add_st(c);
        c->add_option("--q", verify.q, "q, 0 < q < 1")->required();
        c->add_option("--N", verify.N, "Truncation n <= N");
        c->add_option("--a", verify.a, "a index of S");
        c->add_option("--b", verify.b, "b index of S");
        c->add_option("--j", verify.j, "j index of T");
        c->callback([&] { action = [&] { return cmd_verify_proof_sums(verify, out); }; });
    }

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify identities over a grid and write a report");
    sweep_cmd->add_option("--config", sweep.config_path, "key=value config file");
    for (const auto& [flag, key] : std::vector<std::pair<std::string, std::string>>{
             {"--s", "s"}, {"--t", "t"}, {"--q", "q"}, {"--tol", "tol"}, {"--identities", "identities"},
             {"--output", "output"}, {"--format", "format"}, {"--jobs", "jobs"}, {"--max-terms", "max_terms"}}) {
        sweep_cmd->add_option_function<std::string>(
            flag, [&sweep, key = key](const std::string& v) { sweep.settings.emplace_back(key, v); }, key);
    }
    sweep_cmd->callback([&] { action = [&] { return cmd_sweep(sweep, out); }; });

    LimitArgs limit;
    auto* limit_cmd = app.add_subcommand("limit", "Follow zeta[S]zeta[T] as q = 1 - 2^-m approaches 1");
    limit_cmd->add_option("--s", limit.s, "S")->required();
    limit_cmd->add_option("--t", limit.t, "T")->required();
    limit_cmd->add_option("--steps", limit.steps, "M")->required();
    limit_cmd->add_option("--tol", limit.tol, "Tolerance: 1eNN (10^-NN) or rational");
    limit_cmd->add_option("--digits", limit.digits, "Digits in the table");
    limit_cmd->add_option("--max-terms", limit.max_terms, "Truncation cap per series");
    limit_cmd->add_flag("--json", limit.json, "JSON output");
    limit_cmd->callback([&] { action = [&] { return cmd_limit(limit, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    try {
        return action ? action() : exit_bad_input;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return exit_bad_input;
    } catch (const TruncationLimitError& e) {
        err << e.what() << '\n';
        return exit_inconclusive;
    }
}

} // namespace qzeta
