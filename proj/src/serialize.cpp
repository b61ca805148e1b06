#include "qseries/serialize.hpp"

#include <sstream>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

namespace {

Integer parse_integer(const std::string& text)
{
    Integer v;
    // mpz_class accepts a leading '+', which the formats here never use.
    if (text.empty() || text[0] == '+' || v.set_str(text, 10) != 0) {
        throw ContractViolation("not a decimal integer: '" + text + "'");
    }
    return v;
}

Integer json_integer(const nlohmann::json& v)
{
    if (v.is_string()) {
        return parse_integer(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                      : Integer(std::to_string(v.get<std::int64_t>()));
    }
    throw ContractViolation("expected an integer or a decimal string, got " + v.dump());
}

} // namespace

std::string to_text(const Series& s)
{
    std::string out;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out += std::to_string(n);
        out += '\t';
        out += s[n].get_str();
        out += '\n';
    }
    return out;
}

Series series_from_text(std::string_view text)
{
    std::vector<Integer> coeffs;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ContractViolation("series line without a tab: '" + line + "'");
        }
        const Integer n = parse_integer(line.substr(0, tab));
        if (n != static_cast<unsigned long>(coeffs.size())) {
            throw ContractViolation("expected exponent " + std::to_string(coeffs.size()) + ", got " +
                                    n.get_str());
        }
        coeffs.push_back(parse_integer(line.substr(tab + 1)));
    }
    if (coeffs.empty()) {
        throw ContractViolation("empty series text");
    }
    return Series(std::move(coeffs));
}

nlohmann::ordered_json to_json(const Series& s)
{
    nlohmann::ordered_json doc;
    doc["order"] = s.order();
    if (s.modulus()) {
        doc["modulus"] = s.modulus()->get_str();
    }
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

Series series_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
        throw ContractViolation("series document needs 'order' and 'coeffs'");
    }
    const auto order = doc["order"].get<std::size_t>();
    const auto& arr = doc["coeffs"];
    if (arr.size() != order + 1) {
        throw ContractViolation("series document of order " + std::to_string(order) + " has " +
                                std::to_string(arr.size()) + " coefficients");
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) {
        coeffs.push_back(json_integer(c));
    }
    std::optional<Integer> modulus;
    if (doc.contains("modulus") && !doc["modulus"].is_null()) {
        modulus = json_integer(doc["modulus"]);
        for (const auto& c : coeffs) {
            if (c < 0 || c >= *modulus) {
                throw ContractViolation("coefficient " + c.get_str() + " is not a canonical residue modulo " +
                                        modulus->get_str());
            }
        }
    }
    return Series(std::move(coeffs), std::move(modulus));
}

} // namespace qseries
