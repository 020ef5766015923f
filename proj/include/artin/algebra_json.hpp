// Algebra (de)serialization:
//   {"field": "rational" | {"prime": p},
//    "basis": ["1", "x1", "x1^2", ...],
//    "table": D x D arrays of D coordinate strings}
// Import runs the full FiniteLocalAlgebra validation, so hand-written
// algebras (k[x]/(x^n) and friends) are checked before use.
#ifndef ARTIN_ALGEBRA_JSON_HPP
#define ARTIN_ALGEBRA_JSON_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/algebra.hpp"
#include "artin/rational.hpp"

namespace artin {

namespace detail {

inline nlohmann::ordered_json field_descriptor(const Rational&) { return "rational"; }
inline nlohmann::ordered_json field_descriptor(const GFp&) {
    return nlohmann::ordered_json{{"prime", GFp::modulus()}};
}

inline void check_field_descriptor(const nlohmann::json& f, const Rational&) {
    if (!(f.is_string() && f.get<std::string>() == "rational"))
        throw std::invalid_argument("algebra json: expected field \"rational\"");
}
inline void check_field_descriptor(const nlohmann::json& f, const GFp&) {
    if (!(f.is_object() && f.contains("prime")))
        throw std::invalid_argument("algebra json: expected field {\"prime\": p}");
    if (f.at("prime").get<std::uint64_t>() != GFp::modulus())
        throw std::invalid_argument("algebra json: prime does not match the configured field");
}

inline Rational scalar_from_string(const std::string& s, const Rational&) {
    return Rational::from_string(s);
}
inline GFp scalar_from_string(const std::string& s, const GFp&) {
    return GFp::from_rational(Rational::from_string(s));
}

}  // namespace detail

template <class K>
nlohmann::ordered_json algebra_to_json(const FiniteLocalAlgebra<K>& A) {
    nlohmann::ordered_json j;
    j["field"] = detail::field_descriptor(K());
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& m : A.basis()) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t jj = 0; jj < A.dim(); ++jj) {
            nlohmann::ordered_json coords = nlohmann::ordered_json::array();
            for (const auto& c : A.table(i, jj)) coords.push_back(c.str());
            row.push_back(std::move(coords));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

template <class K>
FiniteLocalAlgebra<K> algebra_from_json(const nlohmann::json& j) {
    if (!j.contains("field") || !j.contains("basis") || !j.contains("table"))
        throw std::invalid_argument("algebra json: missing field/basis/table");
    detail::check_field_descriptor(j.at("field"), K());

    std::vector<MonomialLabel> labels;
    for (const auto& s : j.at("basis")) {
        std::string name = s.get<std::string>();
        if (name == "1") {
            labels.push_back(MonomialLabel::unit());
            continue;
        }
        auto m = MonomialLabel::parse(name);
        if (!m) throw std::invalid_argument("algebra json: bad basis label '" + name + "'");
        labels.push_back(*m);
    }

    const std::size_t d = labels.size();
    const auto& table_json = j.at("table");
    if (table_json.size() != d) throw std::invalid_argument("algebra json: table size mismatch");
    std::vector<std::vector<std::vector<K>>> table(d, std::vector<std::vector<K>>(d));
    for (std::size_t i = 0; i < d; ++i) {
        if (table_json[i].size() != d) throw std::invalid_argument("algebra json: table row size mismatch");
        for (std::size_t jj = 0; jj < d; ++jj) {
            const auto& coords = table_json[i][jj];
            if (coords.size() != d)
                throw std::invalid_argument("algebra json: coordinate vector length mismatch");
            std::vector<K> v;
            v.reserve(d);
            for (const auto& c : coords)
                v.push_back(detail::scalar_from_string(c.get<std::string>(), K()));
            table[i][jj] = std::move(v);
        }
    }
    return FiniteLocalAlgebra<K>(std::move(labels), std::move(table));
}

}  // namespace artin

#endif
