#pragma once

#include "qgcat/category/modularity.hpp"
#include "qgcat/category/premodular.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace qgcat::cli {

using json = nlohmann::ordered_json;

// "p/q", always with an explicit denominator.
std::string rational_string(const mpq_class& x);
// Accepts "p/q" and "p"; ArgumentError otherwise.
mpq_class parse_rational(const std::string& text);

// Decimal string rounded half away from zero to exactly `digits` places; "-0.00" becomes "0.00".
std::string round_decimal(const std::string& text, int digits);
// Real and imaginary parts within 10^-digits, with `digits` places.
std::pair<std::string, std::string> approx_parts(const cyclo::CycloNumber& x, int digits);

// {conductor, coeffs: ["p/q", ...] on the power basis (length phi(N)), approx: {re, im}}
json cyclo_to_json(const cyclo::CycloNumber& x, int digits);
// Reads conductor and coeffs; approx is ignored.
cyclo::CycloNumber cyclo_from_json(const json& j);

// {fundamental: [...], epsilon: ["p/q", ...]}; epsilon only for types B, C, D.
json label_to_json(const lie::RootSystem& rs, const lie::Weight& w);

// {spec, labels[], dims[], twists[], fusion, S}. fusion lists [i, j, k, n] for i <= j.
json premodular_to_json(const lie::RootSystem& rs, const category::PreModularData& data, int digits,
                        bool subcategory);

json verdict_to_json(const lie::RootSystem& rs, const category::PreModularData& data,
                     const category::ModularityVerdict& v, category::Expectation expected,
                     const category::UnitarityReport& u);

// The exact content of a premodular_to_json document.
struct ParsedCategory {
    std::string type;
    int ell = 0;
    int z = 0;
    std::vector<lie::Weight> labels;
    std::vector<cyclo::CycloNumber> dims;
    std::vector<cyclo::CycloNumber> twists;
    category::FusionTensor fusion;
    category::CycloMatrix s;
};
ParsedCategory parse_premodular(const json& j);

} // namespace qgcat::cli
