#include <brylinski/cli/commands.hpp>
#include <brylinski/cli/curve_spec.hpp>
#include <brylinski/cli/result_table.hpp>
#include <brylinski/cli/verify.hpp>
#include <brylinski/continuation.hpp>
#include <brylinski/errors.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace brylinski::cli {

namespace {

struct EngineFlags {
    std::optional<int> K;
    std::optional<double> epsilon;
    std::optional<int> nodes;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--K", K, "subtraction order (overrides the spec file)");
        cmd->add_option("--epsilon", epsilon, "near/far split radius in arclength");
        cmd->add_option("--nodes", nodes, "direct quadrature nodes per parameter circle");
    }

    EngineOverrides overrides() const
    {
        EngineOverrides o;
        o.K = K;
        o.epsilon = epsilon;
        o.quad_nodes = nodes;
        try {
            validate(o);
        } catch (const Error& e) {
            throw Error(ErrorCode::usage, e.what());
        }
        return o;
    }
};

CurveSpec resolve_curve(const std::string& arg)
{
    if (std::filesystem::exists(arg)) return load_curve_spec(arg);
    if (arg == "circle" || arg == "ellipse" || arg == "torus_knot") return builtin_curve_spec(arg);
    throw Error(ErrorCode::usage, "cannot open curve file '" + arg + "'");
}

BetaKind parse_kind(const std::string& name)
{
    for (BetaKind k : {BetaKind::single_layer, BetaKind::coaxial, BetaKind::b1, BetaKind::b2})
        if (name == beta_kind_name(k)) return k;
    throw Error(ErrorCode::usage, "unknown kind '" + name + "' (expected single, coaxial, b1 or b2)");
}

double parse_real(const std::string& text, const std::string& whole)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || !std::isfinite(v))
        throw Error(ErrorCode::usage, "cannot read '" + whole + "' as a complex number");
    return v;
}

// "2", "-1.5e-3", "3i", "2+3i", "2-0.5i".
cplx parse_complex(const std::string& raw)
{
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw Error(ErrorCode::usage, "empty value for s");
    if (text.back() != 'i' && text.back() != 'j') return parse_real(text, raw);
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    auto imag_part = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t, raw);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split), raw), imag_part(body.substr(split))};
}

bool use_color(const std::ostream& err)
{
    return &err == &std::cerr && std::getenv("NO_COLOR") == nullptr && ::isatty(2);
}

int report(const Error& e, std::ostream& err)
{
    const bool color = use_color(err);
    err << "brylinski: " << (color ? "\033[1;31m" : "") << "error[" << e.code_name() << "]" << (color ? "\033[0m" : "")
        << ": " << e.what() << "\n";
    return error_exit_status(e.code());
}

std::vector<std::string> beta_columns()
{
    return {"curve_id", "kind", "s_re", "s_im", "value_re", "value_im", "error_estimate", "method"};
}

int cmd_invariants(const std::string& curve_arg, const std::vector<double>& ts, std::optional<int> grid,
                   TableFormat format, std::ostream& out)
{
    const CurveSpec spec = resolve_curve(curve_arg);
    std::vector<double> params = ts;
    if (grid) {
        if (*grid < 1 || *grid > 1000000) throw Error(ErrorCode::usage, "--grid must lie in [1, 1000000]");
        for (int i = 0; i < *grid; ++i) params.push_back(two_pi * i / *grid);
    }
    if (params.empty()) params.push_back(0.0);
    const double length = ArclengthMap(spec.curve).length();
    ResultTable table({"curve_id", "t", "kappa0", "kappa1", "kappa2", "kappa3", "tau0", "tau1", "tau2", "tau3", "length"});
    for (double t : params) {
        const FrenetData f = frenet_invariants(spec.curve, t, 3);
        table.add_row({spec.id, t, f.kappa[0], f.kappa[1], f.kappa[2], f.kappa[3], f.tau[0], f.tau[1], f.tau[2], f.tau[3],
                       length});
    }
    table.write(out, format);
    return 0;
}

int cmd_beta_eval(const std::string& curve_arg, const std::vector<std::string>& s_text, const std::string& kind_name,
                  bool continued, const EngineFlags& flags, TableFormat format, std::ostream& out)
{
    const BetaKind kind = parse_kind(kind_name);
    std::vector<cplx> values;
    for (const auto& t : s_text) values.push_back(parse_complex(t));
    if (values.empty()) throw Error(ErrorCode::usage, "--s needs at least one value");
    const CurveSpec spec = resolve_curve(curve_arg);
    const EngineOverrides engine = spec.engine.merged(flags.overrides());

    ResultTable table(beta_columns());
    std::optional<ContinuationEngine> cont;
    if (continued) cont.emplace(spec.curve, engine.continuation_config());
    for (cplx s : values) {
        BetaValue v;
        if (cont) {
            v = cont->evaluate(s, kind);
        } else {
            require_off_pole(kind, s, ContinuationConfig{}.pole_guard);
            const QuadratureSpec q = engine.quadrature_spec();
            switch (kind) {
            case BetaKind::single_layer: v = beta_single_layer(spec.curve, s, q); break;
            case BetaKind::coaxial: v = beta_coaxial(spec.curve, s, q); break;
            case BetaKind::b1: v = beta_b1(spec.curve, s, q); break;
            case BetaKind::b2: v = beta_b2(spec.curve, s, q); break;
            }
        }
        table.add_row({spec.id, std::string(beta_kind_name(kind)), s.real(), s.imag(), v.value.real(), v.value.imag(),
                       v.abs_error_estimate, v.method});
    }
    table.write(out, format);
    return 0;
}

int cmd_residues(const std::string& curve_arg, const std::string& kind_name, const std::vector<int>& poles,
                 bool all_known, bool numeric_check, const EngineFlags& flags, TableFormat format, std::ostream& out)
{
    const BetaKind kind = parse_kind(kind_name);
    std::vector<int> list = poles;
    if (all_known) {
        if (kind == BetaKind::b2) list = lattice_poles(kind, 2);
        else list = lattice_poles(kind, 3);
    }
    if (list.empty()) throw Error(ErrorCode::usage, "give --pole values or --all-known");
    for (int p : list)
        if (!is_lattice_pole(kind, p))
            throw Error(ErrorCode::not_a_pole, "s = " + std::to_string(p) + " is not a pole of the " +
                                                   beta_kind_name(kind) + " beta function");
    const CurveSpec spec = resolve_curve(curve_arg);
    const ContinuationEngine engine(spec.curve, spec.engine.merged(flags.overrides()).continuation_config());

    auto columns = beta_columns();
    columns.push_back("removable");
    if (numeric_check) {
        columns.push_back("numeric_limit");
        columns.push_back("numeric_error");
    }
    ResultTable table(columns);
    for (int p : list) {
        const ResidueReport r = engine.residue(p, kind, numeric_check);
        std::vector<Cell> row = {spec.id,  std::string(beta_kind_name(kind)), static_cast<double>(p), 0.0, r.residue, 0.0,
                                 r.error_estimate, r.method, r.removable};
        if (numeric_check) {
            row.push_back(r.numeric_limit ? Cell(*r.numeric_limit) : Cell());
            row.push_back(r.numeric_error ? Cell(*r.numeric_error) : Cell());
        }
        table.add_row(std::move(row));
    }
    table.write(out, format);
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& curves, bool mutate, const EngineFlags& flags,
               TableFormat format, std::ostream& out, std::ostream& err)
{
    VerifyOptions options;
    for (const auto& c : curves) options.curves.push_back(resolve_curve(c));
    options.mutate = mutate;
    options.engine = flags.overrides();
    const auto results = run_suite(suite, options);
    verify_table(results).write(out, format);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    if (failed == 0) return 0;
    return report(Error(ErrorCode::verification, std::to_string(failed) + " of " + std::to_string(results.size()) +
                                                     " checks failed in suite '" + suite + "'"),
                  err);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Brylinski beta functions of closed space curves: evaluation, continuation, residues"};
    app.name("brylinski");
    app.require_subcommand(1);

    std::string curve, kind = "single", format_name = "csv", suite = "all";
    std::vector<double> ts;
    std::optional<int> grid;
    std::vector<std::string> s_values, verify_curves;
    std::vector<int> poles;
    bool continued = false, all_known = false, numeric_check = false, mutate = false;
    EngineFlags beta_flags, residue_flags, verify_flags;

    auto* inv = app.add_subcommand("invariants", "curvature and torsion derivatives along the curve");
    inv->add_option("--curve", curve, "curve spec file (JSON) or circle|ellipse|torus_knot")->required();
    inv->add_option("--t", ts, "parameter values")->delimiter(',');
    inv->add_option("--grid", grid, "N equally spaced parameters");

    auto* beta = app.add_subcommand("beta-eval", "evaluate a beta function");
    beta->add_option("--curve", curve, "curve spec file (JSON) or circle|ellipse|torus_knot")->required();
    beta->add_option("--s", s_values, "values of s, e.g. 2,-0.5,2+3i")->delimiter(',')->required();
    beta->add_option("--kind", kind, "single|coaxial|b1|b2");
    beta->add_flag("--continued", continued, "use the meromorphic continuation");
    beta_flags.attach(beta);

    auto* res = app.add_subcommand("residues", "residues at the poles");
    res->add_option("--curve", curve, "curve spec file (JSON) or circle|ellipse|torus_knot")->required();
    res->add_option("--kind", kind, "single|coaxial|b1|b2");
    res->add_option("--pole", poles, "pole locations")->delimiter(',');
    res->add_flag("--all-known", all_known, "the first known poles of the kind");
    res->add_flag("--numeric-check", numeric_check, "add the numeric limit of (s - s0) B(s)");
    residue_flags.attach(res);

    auto* ver = app.add_subcommand("verify", "run a built-in verification suite");
    ver->add_option("--suite", suite, "circle|formulas|paper-residues|engine|all");
    ver->add_option("--curve", verify_curves, "curve spec files for the curve-dependent suites");
    ver->add_flag("--mutate", mutate, "tamper with the kappa2 formula (the suite must then fail)");
    verify_flags.attach(ver);

    for (auto* cmd : {inv, beta, res, ver}) cmd->add_option("--format", format_name, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        return report(Error(ErrorCode::usage, e.what()), err);
    }

    try {
        const TableFormat format = parse_table_format(format_name);
        if (*inv) return cmd_invariants(curve, ts, grid, format, out);
        if (*beta) return cmd_beta_eval(curve, s_values, kind, continued, beta_flags, format, out);
        if (*res) return cmd_residues(curve, kind, poles, all_known, numeric_check, residue_flags, format, out);
        return cmd_verify(suite, verify_curves, mutate, verify_flags, format, out, err);
    } catch (const Error& e) {
        return report(e, err);
    } catch (const std::exception& e) {
        return report(Error(ErrorCode::usage, e.what()), err);
    }
}

} // namespace brylinski::cli
