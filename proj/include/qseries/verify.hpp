#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "qseries/expr.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Exponents congruent to `residue` modulo `step`.
struct Progression {
    std::size_t step = 1;
    std::size_t residue = 0;

    friend bool operator==(const Progression&, const Progression&) = default;
};

/// Coefficients of q^{step*n + residue} in expr vanish modulo m up to order.
struct CongruenceClaim {
    ExprPtr expr;
    Integer modulus;
    Progression progression;
    std::size_t order = 0;

    void validate() const;
};

enum class Status { verified, violated, error };

std::string to_string(Status s);

struct Counterexample {
    std::size_t exponent;
    /// For identities: lhs minus rhs at the exponent. For congruences: the
    /// coefficient itself (canonical residue if the series is reduced).
    Integer coefficient;
};

/// Outcome of one check. status == violated exactly when a counterexample
/// or (for residue claims) a witness pair is present.
struct VerificationReport {
    std::string claim;
    Status status = Status::error;
    std::size_t order = 0;
    std::optional<Progression> progression;
    std::optional<Integer> modulus;
    std::optional<Counterexample> counterexample;
    std::optional<std::pair<long, long>> witness;
    std::string message;
    double elapsed_ms = 0.0;

    bool ok() const { return status == Status::verified; }
};

/// {claim, status, order, progression?, modulus?, counterexample, elapsed_ms}
/// plus "witness" for residue claims.
nlohmann::ordered_json to_json(const VerificationReport& r);
/// One human-readable line.
std::string to_text(const VerificationReport& r);

/// Compares two already computed series coefficient by coefficient.
VerificationReport compare_series(const std::string& claim, const Series& lhs, const Series& rhs);
/// Checks that a computed series vanishes modulo m on a progression.
VerificationReport check_progression(const std::string& claim, const Series& s, const Integer& modulus,
                                     Progression progression);

VerificationReport verify_identity(const SeriesExpr& lhs, const SeriesExpr& rhs, std::size_t order,
                                   const Environment& env = {});
VerificationReport verify_congruence(const CongruenceClaim& claim, const Environment& env = {});

} // namespace qseries
