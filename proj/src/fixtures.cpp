#include "qseries/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>

#include "qseries/bivariate.hpp"
#include "qseries/error.hpp"
#include "qseries/parser.hpp"

#ifndef QSERIES_FIXTURE_DIR
#define QSERIES_FIXTURE_DIR "fixtures"
#endif

namespace qseries {

namespace {

Integer integer_field(const nlohmann::json& v, const std::string& what)
{
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0) {
            throw ContractViolation(what + ": not an integer");
        }
        return out;
    }
    if (!v.is_number_integer()) {
        throw ContractViolation(what + ": not an integer");
    }
    return Integer(std::to_string(v.get<long>()));
}

CompletedSquareForm completed_from_json(const nlohmann::json& doc)
{
    const auto& k = doc.at("k");
    const auto& m = doc.at("m");
    if (!k.is_array() || k.size() != 3 || !m.is_array() || m.size() != 3) {
        throw ContractViolation("completed form needs k and m triples [coeff, scale, shift]");
    }
    return CompletedSquareForm{k[0].get<long>(), k[1].get<long>(), k[2].get<long>(),
                               m[0].get<long>(), m[1].get<long>(), m[2].get<long>()};
}

VerificationReport run_residue(const Fixture& f, std::size_t order)
{
    const auto start = std::chrono::steady_clock::now();
    const QuadraticFormQuery& q = *f.query;
    VerificationReport r;
    r.claim = f.name;
    r.order = order;
    r.modulus = Integer(q.prime);
    try {
        const ResidueAnalysis analysis = residue_solutions(q);
        std::vector<std::string> problems;
        if (f.expect_solutions && analysis.solutions != *f.expect_solutions) {
            problems.push_back("solution set differs from the expected one");
        }
        if (!analysis.weight_vanishes) {
            problems.push_back("2k+1 is nonzero on some solution");
            for (const auto& [k, m] : analysis.solutions) {
                if ((2 * k + 1) % q.prime != 0) {
                    r.witness = ResiduePair{k, m};
                    break;
                }
            }
        }
        if (f.completed) {
            VerificationReport eq = completed_square_equivalence(q, *f.completed);
            if (!eq.ok()) {
                problems.push_back("completed square " + f.completed->describe() + " is not equivalent");
                if (!r.witness) {
                    r.witness = eq.witness;
                }
            }
        }
        VerificationReport terms = check_weights_on_terms(q, order);
        if (!terms.ok()) {
            problems.push_back("a double-sum term on the class has weight not divisible by p");
            r.counterexample = terms.counterexample;
        }
        r.status = Status::verified;
        if (!problems.empty()) {
            r.status = Status::violated;
            r.message = problems.front();
            if (!r.witness && !r.counterexample && !analysis.solutions.empty()) {
                r.witness = analysis.solutions.front();
            }
        }
    } catch (const Error& e) {
        r.status = Status::error;
        r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

bool Fixture::in_suite(const std::string& suite) const
{
    return suite == "paper-all" || std::find(suites.begin(), suites.end(), suite) != suites.end();
}

Fixture fixture_from_json(const nlohmann::json& doc)
{
    Fixture f;
    try {
        f.name = doc.at("name").get<std::string>();
        const auto kind = doc.at("kind").get<std::string>();
        f.order = doc.at("order").get<std::size_t>();
        f.description = doc.value("description", "");
        if (doc.contains("suites")) {
            f.suites = doc["suites"].get<std::vector<std::string>>();
        }
        if (doc.contains("max_order")) {
            f.max_order = doc["max_order"].get<std::size_t>();
        }
        if (kind == "identity") {
            f.kind = Fixture::Kind::identity;
            f.lhs = doc.at("lhs").get<std::string>();
            f.rhs = doc.at("rhs").get<std::string>();
        } else if (kind == "congruence") {
            f.kind = Fixture::Kind::congruence;
            f.lhs = doc.at("lhs").get<std::string>();
            f.modulus = integer_field(doc.at("modulus"), f.name + ".modulus");
            const auto& prog = doc.at("progression");
            if (!prog.is_array() || prog.size() != 2) {
                throw ContractViolation("progression must be [step, residue]");
            }
            f.progression = Progression{prog[0].get<std::size_t>(), prog[1].get<std::size_t>()};
        } else if (kind == "residue") {
            f.kind = Fixture::Kind::residue;
            QuadraticFormQuery q;
            q.form.tri_mult = doc.at("form").at("alpha").get<long>();
            q.form.pent_mult = doc.at("form").at("beta").get<long>();
            q.prime = doc.at("modulus").get<long>();
            q.residue = doc.at("residue").get<long>();
            f.query = q;
            if (doc.contains("expect_solutions")) {
                std::vector<ResiduePair> sols;
                for (const auto& p : doc["expect_solutions"]) {
                    sols.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
                }
                std::sort(sols.begin(), sols.end());
                f.expect_solutions = std::move(sols);
            }
            if (doc.contains("completed")) {
                f.completed = completed_from_json(doc["completed"]);
            }
        } else {
            throw ContractViolation("unknown fixture kind '" + kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ContractViolation("malformed fixture '" + f.name + "': " + e.what());
    }
    return f;
}

std::vector<Fixture> load_fixtures(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("fixtures") || !doc["fixtures"].is_array()) {
        throw ContractViolation("fixture document needs a 'fixtures' array");
    }
    std::vector<Fixture> out;
    for (const auto& item : doc["fixtures"]) {
        out.push_back(fixture_from_json(item));
    }
    return out;
}

std::vector<Fixture> load_fixture_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ContractViolation("cannot open fixture file " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ContractViolation("fixture file " + path.string() + ": " + e.what());
    }
    return load_fixtures(doc);
}

std::filesystem::path default_fixture_path()
{
    if (const char* env = std::getenv("QSERIES_FIXTURES")) {
        return env;
    }
    return std::filesystem::path(QSERIES_FIXTURE_DIR) / "claims.json";
}

Environment standard_environment()
{
    Environment env;
    for (int k = 1; k <= 8; ++k) {
        env.bind("cphi" + std::to_string(k), [k](std::size_t n) { return cphi_oracle(k, n); });
        env.bind("phi" + std::to_string(k), [k](std::size_t n) { return phi_oracle(k, n); });
    }
    for (long a = 1; a <= 8; ++a) {
        for (long b = 1; b <= 8; ++b) {
            env.bind("dsum_" + std::to_string(a) + "_" + std::to_string(b),
                     [a, b](std::size_t n) { return weighted_double_sum(DoubleSumForm{a, b}, n); });
        }
    }
    return env;
}

std::size_t effective_order(const Fixture& f, std::optional<std::size_t> order_override)
{
    if (!order_override) {
        return f.order;
    }
    return f.max_order ? std::min(*order_override, *f.max_order) : *order_override;
}

VerificationReport run_fixture(const Fixture& f, std::optional<std::size_t> order_override, const Environment& env)
{
    const std::size_t order = effective_order(f, order_override);
    if (f.kind == Fixture::Kind::residue) {
        return run_residue(f, order);
    }

    VerificationReport r;
    try {
        if (f.kind == Fixture::Kind::identity) {
            r = verify_identity(*parse_expr(f.lhs), *parse_expr(f.rhs), order, env);
        } else {
            r = verify_congruence(CongruenceClaim{parse_expr(f.lhs), *f.modulus, *f.progression, order}, env);
        }
    } catch (const Error& e) {
        r.status = Status::error;
        r.order = order;
        r.modulus = f.modulus;
        r.progression = f.progression;
        r.message = e.what();
    }
    // Report under the fixture name; the expression text is in the file.
    r.claim = f.name;
    return r;
}

std::vector<Fixture> select_fixtures(const std::vector<Fixture>& all, const std::string& selector)
{
    std::vector<Fixture> out;
    for (const auto& f : all) {
        if (f.name == selector || f.in_suite(selector)) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<VerificationReport> run_suite(const std::vector<Fixture>& fixtures,
                                          std::optional<std::size_t> order_override, bool parallel)
{
    const Environment env = standard_environment();
    std::vector<VerificationReport> reports;
    reports.reserve(fixtures.size());
    if (!parallel) {
        for (const auto& f : fixtures) {
            reports.push_back(run_fixture(f, order_override, env));
        }
        return reports;
    }
    std::vector<std::future<VerificationReport>> pending;
    pending.reserve(fixtures.size());
    for (const auto& f : fixtures) {
        pending.push_back(std::async(std::launch::async, [&f, &env, order_override] {
            return run_fixture(f, order_override, env);
        }));
    }
    for (auto& p : pending) {
        reports.push_back(p.get());
    }
    return reports;
}

} // namespace qseries
