#include "cs/serialize.hpp"

#include <stdexcept>

namespace cs {

namespace {

Json coeff_terms(const ExactScalar::CoeffMap& m, int deltaParity) {
    Json out = Json::array();
    for (const auto& [exp, coeff] : m) {
        Json term = Json::array();
        term.push_back(deltaParity);
        term.push_back(exp);
        term.push_back(boost::multiprecision::numerator(coeff).str());
        term.push_back(boost::multiprecision::denominator(coeff).str());
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

Json scalar_to_json(const ExactScalar& s) {
    Json terms = coeff_terms(s.even_part(), 0);
    for (auto& t : coeff_terms(s.odd_part(), 1)) terms.push_back(std::move(t));
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

ExactScalar scalar_from_json(const RingParams& ring, const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("scalar_from_json: missing terms array");
    ExactScalar s = ExactScalar::zero(ring);
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument(
                "scalar_from_json: term must be [deltaParity, zetaExp, num, "
                "den]");
        int parity = t[0].get<int>();
        if (parity != 0 && parity != 1)
            throw std::invalid_argument(
                "scalar_from_json: delta parity must be 0 or 1");
        long long zetaExp = t[1].get<long long>();
        Rational coeff(boost::multiprecision::cpp_int(t[2].get<std::string>()),
                       boost::multiprecision::cpp_int(t[3].get<std::string>()));
        s.add_term(zetaExp, coeff, parity);
    }
    return s;
}

Json diagram_to_json(const ChargedDiagram& diagram) {
    Json j;
    j["version"] = 1;
    j["d"] = diagram.ring().d;
    j["top"] = diagram.top_arity();
    j["bottom"] = diagram.bottom_arity();
    Json pairs = Json::array();
    for (const auto& [a, b] : diagram.pairs())
        pairs.push_back(Json::array({a, b}));
    j["pairs"] = std::move(pairs);
    Json charges = Json::array();
    for (const auto& c : diagram.charges())
        charges.push_back(Json::array({c.point, c.value}));
    j["charges"] = std::move(charges);
    j["scalar"] = scalar_to_json(diagram.scalar());
    return j;
}

ChargedDiagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("diagram: not an object");
    for (const char* key : {"version", "d", "top", "bottom", "pairs",
                            "charges", "scalar"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("diagram: missing ") + key);
    if (j["version"].get<int>() != 1)
        throw std::invalid_argument("diagram: unsupported version");
    RingParams ring = make_ring(j["d"].get<int>());
    int top = j["top"].get<int>();
    int bottom = j["bottom"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("diagram: pair must be [a, b]");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    std::vector<ChargeEvent> charges;
    for (const auto& c : j["charges"]) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("diagram: charge must be [point, k]");
        charges.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    ExactScalar scalar = scalar_from_json(ring, j["scalar"]);
    if (j.contains("loops"))
        scalar *= ExactScalar::delta_pow(ring, j["loops"].get<int>());
    return ChargedDiagram(ring, top, bottom, std::move(pairs),
                          std::move(charges), std::move(scalar));
}

std::string serialize_diagram(const ChargedDiagram& diagram) {
    return diagram_to_json(diagram).dump();
}

ChargedDiagram parse_diagram(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw std::invalid_argument("parse_diagram: malformed JSON");
    return diagram_from_json(j);
}

}  // namespace cs
