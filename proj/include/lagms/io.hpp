#ifndef LAGMS_IO_HPP
#define LAGMS_IO_HPP

#include "lagms/conjecture.hpp"
#include "lagms/falsify.hpp"
#include "lagms/laguerre.hpp"
#include "lagms/sequences.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace lagms {

using json = nlohmann::ordered_json;

/// Accepts "num/den" strings and JSON integers.
inline Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    throw std::invalid_argument("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

inline json to_json(const Polynomial& p)
{
    json arr = json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.get_str());
    return arr;
}

inline Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& v : j)
        c.push_back(rational_from_json(v));
    return Polynomial(std::move(c));
}

inline json to_json(const LaguerreCoeffs& c)
{
    json arr = json::array();
    for (const auto& v : c.coefficients())
        arr.push_back(v.get_str());
    return json{{"alpha", c.params().alpha().get_str()}, {"coefficients", arr}};
}

inline SequenceSpec sequence_spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw std::invalid_argument("sequence spec needs a string \"type\" field");
    const std::string type = j["type"].get<std::string>();
    auto field = [&](const char* name) -> const json& {
        if (!j.contains(name))
            throw std::invalid_argument("sequence spec of type " + type + " needs field \"" + name + "\"");
        return j[name];
    };
    auto unsigned_field = [&](const char* name) {
        const json& v = field(name);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
            throw std::invalid_argument(std::string("field \"") + name + "\" must be a nonnegative integer");
        return v.get<unsigned>();
    };
    if (type == "trivial")
        return SequenceSpec::trivial(unsigned_field("n"), rational_from_json(field("g_n")),
                                     rational_from_json(field("g_n1")));
    if (type == "geometric")
        return SequenceSpec::geometric(rational_from_json(field("r")));
    if (type == "linear")
        return SequenceSpec::linear(rational_from_json(field("a")));
    if (type == "falling_factorial")
        return SequenceSpec::falling_factorial(unsigned_field("n"));
    if (type == "quadratic")
        return SequenceSpec::quadratic(rational_from_json(field("a")), rational_from_json(field("b")));
    if (type == "explicit") {
        const json& vals = field("values");
        if (!vals.is_array())
            throw std::invalid_argument("explicit sequence needs a \"values\" array");
        std::vector<Rational> v;
        for (const auto& e : vals)
            v.push_back(rational_from_json(e));
        ExplicitTail tail = ExplicitTail::zero;
        if (j.contains("tail")) {
            const std::string t = j["tail"].get<std::string>();
            if (t == "unspecified")
                tail = ExplicitTail::unspecified;
            else if (t != "zero")
                throw std::invalid_argument("explicit tail must be \"zero\" or \"unspecified\"");
        }
        return SequenceSpec::explicit_values(std::move(v), tail);
    }
    throw std::invalid_argument("unknown sequence type: " + type);
}

inline SequenceSpec parse_sequence_spec(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed sequence JSON: ") + e.what());
    }
    return sequence_spec_from_json(j);
}

inline json to_json(const Witness& w)
{
    json params = json::object();
    for (const auto& [k, v] : w.family_params)
        params[k] = v;
    return json{{"family", to_string(w.family)},
                {"family_params", params},
                {"input_coeffs", to_json(w.input)},
                {"image_coeffs", to_json(w.image)},
                {"image_real_count", w.image_verdict.real_count_with_multiplicity},
                {"degree", w.input.degree()}};
}

inline json to_json(const NecessaryReport& r)
{
    auto index = [](const IndexResult& x) {
        json j{{"ok", x.ok}};
        j["first_failure"] = x.first_failure ? json(*x.first_failure) : json(nullptr);
        if (!x.detail.empty())
            j["detail"] = x.detail;
        return j;
    };
    json ps{{"ok", r.polya_schur.ok}, {"checked_through", r.polya_schur.checked_through}};
    ps["first_failure"] = r.polya_schur.first_failure ? json(*r.polya_schur.first_failure) : json(nullptr);
    if (!r.polya_schur.ok)
        ps["witness"] = to_json(r.polya_schur.witness);
    return json{{"polya_schur", ps},
                {"turan", index(r.turan)},
                {"sign_pattern", index(r.sign_pattern)},
                {"zero_pattern", index(r.zero_pattern)}};
}

inline json to_json(const BmaxResult& r)
{
    json j{{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"validated", r.validated}};
    j["member_above"] = r.member_above ? json(r.member_above->get_str()) : json(nullptr);
    return j;
}

} // namespace lagms

#endif // LAGMS_IO_HPP
