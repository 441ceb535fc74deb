#include "pcong/io.hpp"

#include <algorithm>
#include <sstream>

namespace pcong::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw parse_error(std::string("field '") + key + "' must be an array");
    return a;
}

std::uint64_t unsigned_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw parse_error(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

}  // namespace

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) throw parse_error("expected an integer, got " + j.get<std::string>());
        return Integer(r.get_num());
    }
    throw parse_error("expected an integer");
}

Json rational_to_json(const Rational& x) { return Json(to_string(x)); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw parse_error(e.what());
        }
    }
    throw parse_error("expected a rational as \"num/den\"");
}

Json valuation_to_json(const Valuation& v) { return Json(v.to_string()); }

Valuation valuation_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinity();
    return Valuation(rational_from_json(j));
}

Json partition_to_json(const Partition& lambda) {
    Json a = Json::array();
    for (auto part : lambda.parts()) a.push_back(part);
    return a;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("partition must be an array of positive integers");
    std::vector<std::uint64_t> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
            throw parse_error("partition parts must be positive integers");
        }
        parts.push_back(v.get<std::uint64_t>());
    }
    const Partition lambda(parts);
    if (lambda.parts() != parts) throw parse_error("partition parts must be weakly decreasing");
    return lambda;
}

Partition parse_partition(const std::string& text) {
    std::vector<std::uint64_t> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw parse_error("bad partition part '" + token + "'");
        }
        if (used != token.size() || v <= 0) throw parse_error("bad partition part '" + token + "'");
        parts.push_back(static_cast<std::uint64_t>(v));
    }
    return Partition(parts);
}

Json symfunc_to_json(const SymFuncExpr& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        terms.push_back(Json{{"partition", partition_to_json(lambda)},
                             {"coefficient", rational_to_json(c)}});
    }
    return Json{{"basis", to_string(f.basis())}, {"terms", terms}};
}

SymFuncExpr symfunc_from_json(const Json& j) {
    const Json& b = field(j, "basis");
    if (!b.is_string()) throw parse_error("basis must be \"E\" or \"P\"");
    Basis basis{};
    try {
        basis = parse_basis(b.get<std::string>());
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
    SymFuncExpr f(basis);
    for (const auto& t : array_field(j, "terms")) {
        f.add_term(partition_from_json(field(t, "partition")),
                   rational_from_json(field(t, "coefficient")));
    }
    return f;
}

Json series_to_json(const RationalSeries& f) {
    Json c = Json::array();
    for (const auto& x : f.coefficients()) c.push_back(rational_to_json(x));
    return Json{{"order", f.order()}, {"coefficients", c}};
}

RationalSeries rational_series_from_json(const Json& j) {
    const std::uint64_t order = unsigned_field(j, "order");
    std::vector<Rational> c;
    for (const auto& x : array_field(j, "coefficients")) c.push_back(rational_from_json(x));
    if (c.size() != order + 1) throw parse_error("series needs order + 1 coefficients");
    return RationalSeries(order, std::move(c));
}

Json series_to_json(const SymFuncSeries& f) {
    Json c = Json::array();
    for (const auto& x : f.coefficients()) c.push_back(symfunc_to_json(x));
    return Json{{"order", f.order()}, {"coefficients", c}};
}

SymFuncSeries symfunc_series_from_json(const Json& j) {
    const std::uint64_t order = unsigned_field(j, "order");
    std::vector<SymFuncExpr> c;
    for (const auto& x : array_field(j, "coefficients")) c.push_back(symfunc_from_json(x));
    if (c.size() != order + 1) throw parse_error("series needs order + 1 coefficients");
    return SymFuncSeries(order, std::move(c));
}

Json eisenstein_to_json(const EisensteinElement& x) {
    Json c = Json::array();
    for (const auto& v : x.coefficients()) c.push_back(rational_to_json(v));
    return Json{{"p", x.prime()}, {"e", x.ramification()}, {"coefficients", c}};
}

EisensteinElement eisenstein_from_json(const Json& j) {
    const EisensteinRing ring(unsigned_field(j, "p"), unsigned_field(j, "e"));
    std::vector<Rational> c;
    for (const auto& v : array_field(j, "coefficients")) c.push_back(rational_from_json(v));
    return ring.element(std::move(c));
}

Json galois_ring_to_json(const GaloisRing& ring) {
    Json modulus = Json::array();
    const auto& m = ring.modulus();
    for (auto it = m.rbegin(); it != m.rend(); ++it) modulus.push_back(integer_to_json(*it));
    return Json{{"p", ring.prime()},
                {"S", ring.precision()},
                {"k", ring.degree()},
                {"modulus", modulus}};
}

GaloisRing galois_ring_from_json(const Json& j) {
    const std::uint64_t p = unsigned_field(j, "p");
    const auto S = static_cast<unsigned>(unsigned_field(j, "S"));
    const auto k = static_cast<unsigned>(unsigned_field(j, "k"));
    if (!j.contains("modulus")) return GaloisRing::with_default_modulus(p, S, k);
    std::vector<Integer> m = integer_list_from_json(j.at("modulus"));
    std::reverse(m.begin(), m.end());
    return GaloisRing(p, S, k, m);
}

Json galois_element_to_json(const GaloisRingElement& x) {
    Json out = galois_ring_to_json(x.ring());
    Json c = Json::array();
    for (const auto& v : x.coefficients()) c.push_back(integer_to_json(v));
    out["coefficients"] = c;
    return out;
}

GaloisRingElement galois_element_from_json(const Json& j) {
    return galois_element_in(galois_ring_from_json(j), field(j, "coefficients"));
}

GaloisRingElement galois_element_in(const GaloisRing& ring, const Json& j) {
    if (j.is_array()) return ring.element(integer_list_from_json(j));
    return ring.from_integer(integer_from_json(j));
}

Json matrix_to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(integer_to_json(v));
        rows.push_back(r);
    }
    return rows;
}

IntegerMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("matrix must be an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) rows.push_back(integer_list_from_json(r));
    try {
        return IntegerMatrix(rows);
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

Json fp_poly_to_json(const FpPoly& f) {
    Json c = Json::array();
    const auto& v = f.coefficients();
    for (auto it = v.rbegin(); it != v.rend(); ++it) c.push_back(*it);
    return Json{{"display", f.to_string()}, {"coefficients", c}};
}

std::vector<Integer> integer_list_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("expected an array of integers");
    std::vector<Integer> out;
    for (const auto& v : j) out.push_back(integer_from_json(v));
    return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) throw parse_error("empty entry in integer list");
        token = token.substr(first, last - first + 1);
        Integer v;
        if (v.set_str(token, 10) != 0) throw parse_error("bad integer '" + token + "'");
        out.push_back(v);
    }
    if (text.back() == ',') throw parse_error("empty entry in integer list");
    return out;
}

Json flag_to_json(const CongruenceFlag& f) {
    return Json{{"n", f.n},
                {"achieved", valuation_to_json(f.achieved)},
                {"required", valuation_to_json(f.required)},
                {"pass", f.pass}};
}

Json report_to_json(const CongruenceReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"e_P", row.e_P},
                            {"e_Q", row.e_Q},
                            {"p_P", row.p_P},
                            {"p_Q", row.p_Q},
                            {"elementary_achieved", valuation_to_json(row.elementary_achieved)},
                            {"elementary_pass", row.elementary_pass},
                            {"deep_required", valuation_to_json(row.deep_required)},
                            {"deep_achieved", valuation_to_json(row.deep_achieved)},
                            {"deep_pass", row.deep_pass}});
    }
    return Json{{"p", r.p},
                {"ideal_valuation", rational_to_json(r.c)},
                {"ramification", r.ramification},
                {"range", r.range},
                {"include_n0", r.include_n0},
                {"divided_power", r.divided_power},
                {"elementary", r.elementary},
                {"deep", r.deep},
                {"elementary_extended", r.elementary_extended},
                {"deep_extended", r.deep_extended},
                {"status", to_string(r.status)},
                {"rows", rows}};
}

std::string report_to_tsv(const CongruenceReport& r) {
    std::ostringstream out;
    out << "n\tc+v_p(n)\te_n(P)\te_n(Q)\tp_n(P)\tp_n(Q)\tv_p(diff)\n";
    for (const auto& row : r.rows) {
        out << row.n << '\t' << row.deep_required.to_string() << '\t' << row.e_P << '\t'
            << row.e_Q << '\t' << row.p_P << '\t' << row.p_Q << '\t'
            << row.deep_achieved.to_string() << '\n';
    }
    return out.str();
}

Json multiplicities_to_json(const MultiplicityVector& m) {
    Json entries = Json::array();
    for (const auto& [code, mult] : m.m) {
        Json digits = Json::array();
        std::uint64_t c = code;
        for (unsigned i = 0; i < m.k; ++i) {
            digits.push_back(c % m.p);
            c /= m.p;
        }
        entries.push_back(Json{{"residue", digits}, {"multiplicity", integer_to_json(mult)}});
    }
    return Json{{"p", m.p}, {"S", m.S}, {"k", m.k}, {"multiplicities", entries}};
}

MultiplicityVector multiplicities_from_json(const Json& j) {
    MultiplicityVector m{unsigned_field(j, "p"), static_cast<unsigned>(unsigned_field(j, "S")),
                         static_cast<unsigned>(unsigned_field(j, "k")), {}};
    for (const auto& e : array_field(j, "multiplicities")) {
        const auto digits = integer_list_from_json(field(e, "residue"));
        std::uint64_t code = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (*it < 0 || *it >= static_cast<unsigned long>(m.p)) throw parse_error("residue digit out of range");
            code = code * m.p + it->get_ui();
        }
        m.m[code] = integer_from_json(field(e, "multiplicity"));
    }
    return m;
}

namespace {

Json factors_to_json(const std::vector<FactorPower>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) {
        Json item = fp_poly_to_json(f.factor);
        item["multiplicity"] = f.multiplicity;
        out.push_back(item);
    }
    return out;
}

}  // namespace

Json ss_comparison_to_json(const SsComparison& c) {
    return Json{{"verdict", c.verdict},
                {"oracle", c.oracle},
                {"factors_M", factors_to_json(c.factors_M)},
                {"factors_N", factors_to_json(c.factors_N)},
                {"report", report_to_json(c.report)}};
}

Json virtual_comparison_to_json(const VirtualComparison& c) {
    Json rows = Json::array();
    for (const auto& r : c.rows) {
        rows.push_back(Json{{"n", r.n},
                            {"combination", integer_to_json(r.combination)},
                            {"achieved", valuation_to_json(r.achieved)},
                            {"required", valuation_to_json(r.required)},
                            {"pass", r.pass}});
    }
    Json out{{"verdict", c.verdict}};
    out["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
    out["rows"] = rows;
    return out;
}

}  // namespace pcong::io
