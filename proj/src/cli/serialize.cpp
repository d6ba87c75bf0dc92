#include "qgcat/cli/serialize.hpp"

#include "qgcat/cyclo/numeric.hpp"
#include "qgcat/error.hpp"

#include <map>

namespace qgcat::cli {

using category::CycloMatrix;
using category::FusionTensor;
using cyclo::CycloNumber;

std::string rational_string(const mpq_class& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = mpz_class(text, 10);
        } else {
            num = mpz_class(text.substr(0, slash), 10);
            den = mpz_class(text.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        throw ArgumentError("not a rational: '" + text + "'");
    }
    if (den == 0) throw ArgumentError("zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string round_decimal(const std::string& text, int digits) {
    std::string t = text;
    const bool neg = !t.empty() && t[0] == '-';
    if (neg || (!t.empty() && t[0] == '+')) t.erase(0, 1);
    const auto dot = t.find('.');
    std::string ip = dot == std::string::npos ? t : t.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : t.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (ip.find_first_not_of("0123456789") != std::string::npos || fp.find_first_not_of("0123456789") != std::string::npos)
        throw ArgumentError("not a decimal: '" + text + "'");
    fp.resize(static_cast<std::size_t>(digits) + 1, '0');
    const bool up = fp.back() >= '5';
    fp.pop_back();
    std::string all = ip + fp;
    if (up) {
        std::size_t i = all.size();
        while (i > 0 && all[i - 1] == '9') all[--i] = '0';
        if (i == 0) all.insert(all.begin(), '1');
        else ++all[i - 1];
    }
    const std::size_t split = all.size() - fp.size();
    std::string out = all.substr(0, split);
    if (digits > 0) out += "." + all.substr(split);
    const bool zero = all.find_first_not_of('0') == std::string::npos;
    return neg && !zero ? "-" + out : out;
}

std::pair<std::string, std::string> approx_parts(const CycloNumber& x, int digits) {
    const auto a = cyclo::numeric_value(x, digits + 2);
    return {round_decimal(a.real, digits), round_decimal(a.imag, digits)};
}

json cyclo_to_json(const CycloNumber& x, int digits) {
    json coeffs = json::array();
    auto c = x.coefficients();
    c.resize(static_cast<std::size_t>(x.degree()), mpq_class(0));
    for (const auto& v : c) coeffs.push_back(rational_string(v));
    const auto [re, im] = approx_parts(x, digits);
    return json{{"conductor", x.conductor()}, {"coeffs", coeffs}, {"approx", {{"re", re}, {"im", im}}}};
}

CycloNumber cyclo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw ArgumentError("cyclotomic number needs conductor and coeffs");
    const auto n = j.at("conductor").get<std::uint32_t>();
    if (n == 0) throw ArgumentError("conductor must be positive");
    CycloNumber zero(n);
    std::vector<mpq_class> c;
    for (const auto& s : j.at("coeffs")) c.push_back(parse_rational(s.get<std::string>()));
    if (c.size() > static_cast<std::size_t>(zero.degree()))
        throw ArgumentError("more coefficients than the degree of Q(zeta_" + std::to_string(n) + ")");
    return CycloNumber::from_coefficients(n, c);
}

json label_to_json(const lie::RootSystem& rs, const lie::Weight& w) {
    json out{{"fundamental", w.to_vector()}};
    if (rs.has_epsilon_coordinates()) {
        json eps = json::array();
        for (const auto& e : rs.epsilon_coordinates(w)) eps.push_back(rational_string(e));
        out["epsilon"] = eps;
    }
    return out;
}

json premodular_to_json(const lie::RootSystem& rs, const category::PreModularData& data, int digits,
                        bool subcategory) {
    const std::size_t r = data.rank();
    json labels = json::array(), dims = json::array(), twists = json::array();
    for (std::size_t i = 0; i < r; ++i) {
        json l = label_to_json(rs, data.labels[i]);
        l["index"] = i;
        l["dual"] = data.fusion.dual(i);
        labels.push_back(std::move(l));
        dims.push_back(cyclo_to_json(data.dims[i], digits));
        twists.push_back(cyclo_to_json(data.twists[i], digits));
    }
    json fusion = json::array();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            for (const auto& t : data.fusion.product(i, j)) fusion.push_back({i, j, t.k, t.n});
    json s = json::array();
    for (std::size_t i = 0; i < r; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r; ++j) row.push_back(cyclo_to_json(data.s(i, j), digits));
        s.push_back(std::move(row));
    }
    json spec{{"type", data.type.name()},    {"ell", data.ell()},
              {"z", data.z()},               {"d", data.q.d()},
              {"conductor", data.conductor()}, {"rank", r},
              {"subcategory", subcategory}};
    return json{{"spec", spec}, {"labels", labels}, {"dims", dims}, {"twists", twists}, {"fusion", fusion}, {"S", s}};
}

json verdict_to_json(const lie::RootSystem& rs, const category::PreModularData& data,
                     const category::ModularityVerdict& v, category::Expectation expected,
                     const category::UnitarityReport& u) {
    json obstructions = json::array();
    for (auto i : v.obstructions) {
        json l = label_to_json(rs, data.labels[i]);
        l["index"] = i;
        obstructions.push_back(std::move(l));
    }
    json unitarity{{"known_unitary", u.known_unitary},
                   {"known_not_unitarizable", u.known_not_unitarizable},
                   {"dims_positive", u.dims_positive}};
    if (u.known_unitary) unitarity["unitary_citation"] = u.unitary_citation;
    if (u.known_not_unitarizable) unitarity["not_unitarizable_citation"] = u.not_unitarizable_citation;
    return json{{"modular", v.is_modular},
                {"det_nonzero", v.det_nonzero},
                {"det_method", v.det_method},
                {"obstructions", obstructions},
                {"expected", category::to_string(expected)},
                {"unitarity", unitarity}};
}

ParsedCategory parse_premodular(const json& j) {
    ParsedCategory out;
    try {
        const auto& spec = j.at("spec");
        out.type = spec.at("type").get<std::string>();
        out.ell = spec.at("ell").get<int>();
        out.z = spec.at("z").get<int>();
        const auto& labels = j.at("labels");
        const std::size_t r = labels.size();
        std::vector<std::size_t> duals;
        for (const auto& l : labels) {
            out.labels.emplace_back(std::span<const int>(l.at("fundamental").get<std::vector<int>>()));
            duals.push_back(l.at("dual").get<std::size_t>());
        }
        for (const auto& d : j.at("dims")) out.dims.push_back(cyclo_from_json(d));
        for (const auto& t : j.at("twists")) out.twists.push_back(cyclo_from_json(t));
        if (out.dims.size() != r || out.twists.size() != r) throw ArgumentError("dims/twists length differs from rank");

        std::vector<std::map<std::uint32_t, std::int64_t>> prod(r * (r + 1) / 2);
        for (const auto& e : j.at("fusion")) {
            const auto i = e.at(0).get<std::size_t>(), jj = e.at(1).get<std::size_t>();
            if (i > jj || jj >= r) throw ArgumentError("fusion triple out of range");
            prod[FusionTensor::pair_index(r, i, jj)][e.at(2).get<std::uint32_t>()] = e.at(3).get<std::int64_t>();
        }
        std::vector<std::vector<FusionTensor::Term>> products(prod.size());
        for (std::size_t p = 0; p < prod.size(); ++p)
            for (const auto& [k, n] : prod[p]) products[p].push_back({k, n});
        out.fusion = FusionTensor(out.labels, duals, std::move(products));

        const auto& s = j.at("S");
        if (s.size() != r) throw ArgumentError("S has the wrong number of rows");
        const std::uint32_t n = r ? out.dims[0].conductor() : 1;
        out.s = CycloMatrix(r, n);
        for (std::size_t a = 0; a < r; ++a) {
            if (s.at(a).size() != r) throw ArgumentError("S row of the wrong length");
            for (std::size_t b = 0; b < r; ++b) out.s(a, b) = cyclo_from_json(s.at(a).at(b));
        }
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("malformed category document: ") + e.what());
    }
    return out;
}

} // namespace qgcat::cli
