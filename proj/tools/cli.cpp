#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/bivariate.hpp"
#include "qseries/error.hpp"
#include "qseries/fixtures.hpp"
#include "qseries/parser.hpp"
#include "qseries/serialize.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

namespace {

int exit_for(Status s)
{
    switch (s) {
    case Status::verified:
        return success;
    case Status::violated:
        return violated;
    default:
        return usage_error;
    }
}

Integer parse_modulus(const std::string& text)
{
    Integer m;
    if (text.empty() || text[0] == '+' || text[0] == '-' || m.set_str(text, 10) != 0) {
        throw ContractViolation("modulus must be a positive integer, got '" + text + "'");
    }
    return m;
}

CompletedSquareForm parse_completed(const std::string& text)
{
    std::vector<long> v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stol(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ContractViolation("--completed expects six comma-separated integers");
        }
    }
    if (v.size() != 6) {
        throw ContractViolation("--completed expects six comma-separated integers");
    }
    return CompletedSquareForm{v[0], v[1], v[2], v[3], v[4], v[5]};
}

void write_report(const VerificationReport& r, bool structured, std::ostream& out)
{
    if (structured) {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << to_text(r) << '\n';
    }
}

void write_series(const Series& s, bool structured, std::ostream& out)
{
    if (structured) {
        out << to_json(s).dump() << '\n';
    } else {
        out << to_text(s);
    }
}

int run_expand(const CommandSpec& spec, std::ostream& out)
{
    Series s = evaluate(*parse_expr(spec.expr), spec.order, standard_environment());
    if (spec.modulus) {
        s = s.modulus() ? s : reduce_mod(s, *spec.modulus);
    }
    write_series(s, spec.structured, out);
    return success;
}

int run_verify(const CommandSpec& spec, std::ostream& out, std::ostream& err)
{
    const VerificationReport r =
        verify_identity(*parse_expr(spec.lhs), *parse_expr(spec.rhs), spec.order, standard_environment());
    write_report(r, spec.structured, out);
    if (r.status == Status::error) {
        err << "error: " << r.message << '\n';
    }
    return exit_for(r.status);
}

int run_congruence(const CommandSpec& spec, std::ostream& out, std::ostream& err)
{
    const CongruenceClaim claim{parse_expr(spec.expr), *spec.modulus, Progression{spec.step, spec.residue}, spec.order};
    const VerificationReport r = verify_congruence(claim, standard_environment());
    write_report(r, spec.structured, out);
    if (r.status == Status::error) {
        err << "error: " << r.message << '\n';
    }
    return exit_for(r.status);
}

int run_oracle(const CommandSpec& spec, std::ostream& out)
{
    const Series s = spec.oracle_kind == "phi" ? phi_oracle(spec.colors, spec.order)
                                                : cphi_oracle(spec.colors, spec.order);
    write_series(s, spec.structured, out);
    return success;
}

int run_residues(const CommandSpec& spec, std::ostream& out)
{
    const ResidueAnalysis analysis = residue_solutions(spec.query);
    std::optional<VerificationReport> eq;
    if (spec.completed) {
        eq = completed_square_equivalence(spec.query, *spec.completed);
    }
    if (spec.structured) {
        nlohmann::ordered_json doc;
        doc["query"] = spec.query.describe();
        auto sols = nlohmann::ordered_json::array();
        for (const auto& [k, m] : analysis.solutions) {
            sols.push_back({k, m});
        }
        doc["solutions"] = std::move(sols);
        doc["weight_vanishes"] = analysis.weight_vanishes;
        if (eq) {
            doc["completed"] = to_json(*eq);
        }
        out << doc.dump(2) << '\n';
    } else {
        out << spec.query.describe() << '\n';
        out << "solutions (k mod p, m mod p):";
        for (const auto& [k, m] : analysis.solutions) {
            out << " (" << k << ", " << m << ")";
        }
        out << '\n';
        out << "2k+1 = 0 (mod " << spec.query.prime << ") on every solution: "
            << (analysis.weight_vanishes ? "yes" : "no") << '\n';
        if (eq) {
            out << to_text(*eq) << '\n';
        }
    }
    return eq ? exit_for(eq->status) : success;
}

int run_suite(const CommandSpec& spec, std::ostream& out, std::ostream& err)
{
    const auto all = load_fixture_file(spec.fixtures ? *spec.fixtures : default_fixture_path());
    const auto selected = select_fixtures(all, spec.suite_name);
    if (selected.empty()) {
        err << "error: no fixture or suite named '" << spec.suite_name << "'\n";
        return usage_error;
    }
    const std::optional<std::size_t> override =
        spec.order_given ? std::optional<std::size_t>(spec.order) : std::nullopt;
    const auto reports = run_suite(selected, override, spec.parallel);

    int code = success;
    for (const auto& r : reports) {
        if (r.status == Status::error) {
            err << "error: " << r.claim << ": " << r.message << '\n';
            code = usage_error;
        } else if (r.status == Status::violated && code == success) {
            code = violated;
        }
    }
    if (spec.structured) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
    } else {
        std::size_t ok = 0;
        for (const auto& r : reports) {
            out << to_text(r) << '\n';
            ok += r.ok() ? 1 : 0;
        }
        out << ok << "/" << reports.size() << " verified\n";
    }
    return code;
}

} // namespace

void CommandSpec::validate() const
{
    switch (subcommand) {
    case Subcommand::expand:
        if (expr.empty()) {
            throw ContractViolation("expand needs --expr");
        }
        if (modulus && *modulus < 2) {
            throw ContractViolation("--mod must be at least 2");
        }
        break;
    case Subcommand::verify:
        if (lhs.empty() || rhs.empty()) {
            throw ContractViolation("verify needs --lhs and --rhs");
        }
        break;
    case Subcommand::congruence:
        if (expr.empty() || !modulus) {
            throw ContractViolation("congruence needs --expr and --mod");
        }
        if (*modulus < 2) {
            throw ContractViolation("--mod must be at least 2");
        }
        if (step < 1 || residue >= step) {
            throw ContractViolation("--residue must be below --step");
        }
        break;
    case Subcommand::oracle:
        if (oracle_kind != "cphi" && oracle_kind != "phi") {
            throw ContractViolation("--kind must be cphi or phi");
        }
        if (colors < 1) {
            throw ContractViolation("--colors must be at least 1");
        }
        break;
    case Subcommand::residues:
        query.validate();
        break;
    case Subcommand::suite:
        if (suite_name.empty()) {
            throw ContractViolation("suite needs --name");
        }
        break;
    }
}

std::size_t default_order()
{
    if (const char* env = std::getenv("QSERIES_ORDER")) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
    }
    return 100;
}

ParsedCommand parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CommandSpec spec;
    spec.order = default_order();
    std::string format = "text";
    std::string modulus;
    std::string completed;
    std::string out_path;
    std::string fixtures;
    bool serial = false;

    CLI::App app{"Exact q-series engine: expansion, identity and congruence checks"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--order", spec.order, "Truncation order N");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured", "json"}));
        sub->add_option("--out", out_path, "Write the report to this file instead of standard output");
    };

    auto* expand = app.add_subcommand("expand", "Expand an expression to order N");
    common(expand);
    expand->add_option("--expr", spec.expr, "Series expression")->required();
    expand->add_option("--mod", modulus, "Reduce coefficients modulo m");

    auto* verify = app.add_subcommand("verify", "Check lhs = rhs coefficientwise up to order N");
    common(verify);
    verify->add_option("--lhs", spec.lhs, "Left-hand side")->required();
    verify->add_option("--rhs", spec.rhs, "Right-hand side")->required();

    auto* congruence = app.add_subcommand("congruence", "Check coefficients on step*n+residue vanish mod m");
    common(congruence);
    congruence->add_option("--expr", spec.expr, "Series expression")->required();
    congruence->add_option("--mod", modulus, "Modulus m")->required();
    congruence->add_option("--step", spec.step, "Progression step");
    congruence->add_option("--residue", spec.residue, "Progression residue");

    auto* oracle = app.add_subcommand("oracle", "Constant-term oracle for cphi_k or phi_k");
    common(oracle);
    oracle->add_option("--kind", spec.oracle_kind, "cphi or phi")->check(CLI::IsMember({"cphi", "phi"}));
    oracle->add_option("--colors,-k", spec.colors, "Colors (cphi) or repetitions (phi)");

    auto* residues = app.add_subcommand("residues", "Residue-class analysis of the double-sum exponents");
    common(residues);
    residues->add_option("--alpha", spec.query.form.tri_mult, "Multiplier of k(k+1)/2");
    residues->add_option("--beta", spec.query.form.pent_mult, "Multiplier of m(3m-1)/2");
    residues->add_option("--prime,--mod", spec.query.prime, "Prime modulus p");
    residues->add_option("--residue", spec.query.residue, "Target residue");
    residues->add_option("--completed", completed, "Completed-square form ck,ak,bk,cm,am,bm");

    auto* suite = app.add_subcommand("suite", "Run fixtures by suite or fixture name");
    common(suite);
    suite->add_option("--name", spec.suite_name, "Suite or fixture name");
    suite->add_option("--fixtures", fixtures, "Fixture file");
    suite->add_flag("--serial", serial, "Run fixtures one at a time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return ParsedCommand{std::nullopt, code == 0 ? success : usage_error};
    }

    if (expand->parsed()) {
        spec.subcommand = Subcommand::expand;
    } else if (verify->parsed()) {
        spec.subcommand = Subcommand::verify;
    } else if (congruence->parsed()) {
        spec.subcommand = Subcommand::congruence;
    } else if (oracle->parsed()) {
        spec.subcommand = Subcommand::oracle;
    } else if (residues->parsed()) {
        spec.subcommand = Subcommand::residues;
    } else {
        spec.subcommand = Subcommand::suite;
    }
    for (auto* sub : {expand, verify, congruence, oracle, residues, suite}) {
        if (sub->parsed() && sub->count("--order") > 0) {
            spec.order_given = true;
        }
    }
    spec.structured = format != "text";
    spec.parallel = !serial;
    if (!out_path.empty()) {
        spec.out = out_path;
    }
    if (!fixtures.empty()) {
        spec.fixtures = fixtures;
    }
    try {
        if (!modulus.empty()) {
            spec.modulus = parse_modulus(modulus);
        }
        if (!completed.empty()) {
            spec.completed = parse_completed(completed);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return ParsedCommand{std::nullopt, usage_error};
    }
    return ParsedCommand{spec, success};
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (spec.out) {
        file.open(*spec.out);
        if (!file) {
            err << "error: cannot write " << spec.out->string() << '\n';
            return usage_error;
        }
        sink = &file;
    }
    try {
        spec.validate();
        switch (spec.subcommand) {
        case Subcommand::expand:
            return run_expand(spec, *sink);
        case Subcommand::verify:
            return run_verify(spec, *sink, err);
        case Subcommand::congruence:
            return run_congruence(spec, *sink, err);
        case Subcommand::oracle:
            return run_oracle(spec, *sink);
        case Subcommand::residues:
            return run_residues(spec, *sink);
        case Subcommand::suite:
            return run_suite(spec, *sink, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return usage_error;
}

} // namespace qseries::cli
