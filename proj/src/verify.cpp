#include "qseries/verify.hpp"

#include <chrono>
#include <cmath>

#include "qseries/error.hpp"

namespace qseries {

namespace {

class Stopwatch {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport error_report(std::string claim, std::size_t order, const std::string& message)
{
    VerificationReport r;
    r.claim = std::move(claim);
    r.status = Status::error;
    r.order = order;
    r.message = message;
    return r;
}

} // namespace

void CongruenceClaim::validate() const
{
    if (!expr) {
        throw ContractViolation("congruence claim without an expression");
    }
    if (modulus < 2) {
        throw ContractViolation("congruence modulus must be at least 2, got " + modulus.get_str());
    }
    if (progression.step < 1) {
        throw ContractViolation("progression step must be at least 1");
    }
    if (progression.residue >= progression.step) {
        throw ContractViolation("progression residue " + std::to_string(progression.residue) +
                                " must be below the step " + std::to_string(progression.step));
    }
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified:
        return "verified";
    case Status::violated:
        return "violated";
    default:
        return "error";
    }
}

nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json doc;
    doc["claim"] = r.claim;
    doc["status"] = to_string(r.status);
    doc["order"] = r.order;
    if (r.progression) {
        doc["progression"] = {{"step", r.progression->step}, {"residue", r.progression->residue}};
    }
    if (r.modulus) {
        doc["modulus"] = r.modulus->get_str();
    }
    if (r.counterexample) {
        doc["counterexample"] = {{"exponent", r.counterexample->exponent},
                                 {"coefficient", r.counterexample->coefficient.get_str()}};
    } else {
        doc["counterexample"] = nullptr;
    }
    if (r.witness) {
        doc["witness"] = {r.witness->first, r.witness->second};
    }
    doc["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    return doc;
}

std::string to_text(const VerificationReport& r)
{
    std::string line = to_string(r.status) + "  " + r.claim + "  [order " + std::to_string(r.order);
    if (r.modulus) {
        line += ", mod " + r.modulus->get_str();
    }
    if (r.progression) {
        line += ", exponents " + std::to_string(r.progression->step) + "n+" + std::to_string(r.progression->residue);
    }
    line += "]";
    if (r.counterexample) {
        line += "  first counterexample: exponent " + std::to_string(r.counterexample->exponent) + ", coefficient " +
                r.counterexample->coefficient.get_str();
    }
    if (r.witness) {
        line += "  witness (k, m) = (" + std::to_string(r.witness->first) + ", " + std::to_string(r.witness->second) +
                ")";
    }
    if (!r.message.empty()) {
        line += "  (" + r.message + ")";
    }
    return line;
}

VerificationReport compare_series(const std::string& claim, const Series& lhs, const Series& rhs)
{
    VerificationReport r;
    r.claim = claim;
    r.order = std::min(lhs.order(), rhs.order());
    if (lhs.order() != rhs.order()) {
        return error_report(claim, r.order, "order mismatch");
    }
    if (lhs.modulus() != rhs.modulus()) {
        return error_report(claim, r.order, "modulus mismatch between the two sides");
    }
    r.modulus = lhs.modulus();
    r.status = Status::verified;
    for (std::size_t n = 0; n <= lhs.order(); ++n) {
        if (lhs[n] != rhs[n]) {
            Integer diff = lhs[n] - rhs[n];
            if (lhs.modulus()) {
                mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), lhs.modulus()->get_mpz_t());
            }
            r.status = Status::violated;
            r.counterexample = Counterexample{n, diff};
            break;
        }
    }
    return r;
}

VerificationReport check_progression(const std::string& claim, const Series& s, const Integer& modulus,
                                     Progression progression)
{
    VerificationReport r;
    r.claim = claim;
    r.order = s.order();
    r.modulus = modulus;
    r.progression = progression;
    if (modulus < 2 || progression.step < 1 || progression.residue >= progression.step) {
        r.message = "invalid modulus or progression";
        return r;
    }
    if (s.modulus() && !mpz_divisible_p(s.modulus()->get_mpz_t(), modulus.get_mpz_t())) {
        r.message = "series is reduced modulo " + s.modulus()->get_str() + ", which is not a multiple of " +
                    modulus.get_str();
        return r;
    }
    r.status = Status::verified;
    for (std::size_t n = progression.residue; n <= s.order(); n += progression.step) {
        if (!mpz_divisible_p(s[n].get_mpz_t(), modulus.get_mpz_t())) {
            r.status = Status::violated;
            r.counterexample = Counterexample{n, s[n]};
            break;
        }
    }
    return r;
}

VerificationReport verify_identity(const SeriesExpr& lhs, const SeriesExpr& rhs, std::size_t order,
                                   const Environment& env)
{
    Stopwatch clock;
    const std::string claim = to_string(lhs) + " = " + to_string(rhs);
    VerificationReport r;
    try {
        ExpansionCache cache;
        const Series a = evaluate(lhs, order, env, &cache);
        const Series b = evaluate(rhs, order, env, &cache);
        r = compare_series(claim, a, b);
    } catch (const Error& e) {
        r = error_report(claim, order, e.what());
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

VerificationReport verify_congruence(const CongruenceClaim& claim, const Environment& env)
{
    Stopwatch clock;
    const std::string text = claim.expr ? to_string(*claim.expr) : std::string("<missing>");
    VerificationReport r;
    try {
        claim.validate();
        const Series s = evaluate(*claim.expr, claim.order, env);
        r = check_progression(text, s, claim.modulus, claim.progression);
    } catch (const Error& e) {
        r = error_report(text, claim.order, e.what());
        r.modulus = claim.modulus;
        r.progression = claim.progression;
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

} // namespace qseries
