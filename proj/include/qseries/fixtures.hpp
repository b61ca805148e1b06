#pragma once

// Declarative claim fixtures. A fixture file is a JSON document
//
//   {"version": 1, "fixtures": [ {claim}, ... ]}
//
// where each claim has {name, kind, order} plus, per kind:
//   identity:   lhs, rhs                      (expression language)
//   congruence: lhs, modulus, progression [step, residue]
//   residue:    form {alpha, beta}, modulus (prime), residue,
//               optional expect_solutions [[k, m], ...] and
//               completed {k: [c, a, b], m: [c, a, b]} for c*(a*x + b)^2.
// Optional: suites [names], max_order, description.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/expr.hpp"
#include "qseries/residues.hpp"
#include "qseries/verify.hpp"

namespace qseries {

struct Fixture {
    enum class Kind { identity, congruence, residue };

    std::string name;
    Kind kind = Kind::identity;
    std::string description;
    std::vector<std::string> suites;
    std::size_t order = 0;
    std::optional<std::size_t> max_order;

    // identity / congruence
    std::string lhs;
    std::string rhs;
    std::optional<Integer> modulus;
    std::optional<Progression> progression;

    // residue
    std::optional<QuadraticFormQuery> query;
    std::optional<std::vector<ResiduePair>> expect_solutions;
    std::optional<CompletedSquareForm> completed;

    bool in_suite(const std::string& suite) const;
};

Fixture fixture_from_json(const nlohmann::json& doc);
std::vector<Fixture> load_fixtures(const nlohmann::json& doc);
std::vector<Fixture> load_fixture_file(const std::filesystem::path& path);

/// Location of the fixture file shipped with the project.
std::filesystem::path default_fixture_path();

/// Named series used by fixtures: cphi1..cphi8 and phi1..phi8 (the
/// constant-term oracles) and dsum_A_B for A, B in 1..8 (the weighted double
/// sum with multipliers A and B).
Environment standard_environment();

/// Order a fixture runs at: the override (capped by max_order) if given,
/// otherwise the fixture's own order.
std::size_t effective_order(const Fixture& f, std::optional<std::size_t> order_override);

VerificationReport run_fixture(const Fixture& f, std::optional<std::size_t> order_override = std::nullopt,
                               const Environment& env = standard_environment());

/// Fixtures whose name equals `selector` or that belong to suite `selector`
/// ("paper-all" selects every fixture), in file order.
std::vector<Fixture> select_fixtures(const std::vector<Fixture>& all, const std::string& selector);

/// Runs fixtures concurrently; reports come back in input order.
std::vector<VerificationReport> run_suite(const std::vector<Fixture>& fixtures,
                                          std::optional<std::size_t> order_override = std::nullopt,
                                          bool parallel = true);

} // namespace qseries
