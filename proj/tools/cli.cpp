#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pcong/congruence.hpp"
#include "pcong/io.hpp"
#include "pcong/rational_ring.hpp"

namespace pcong::cli {

namespace {

using io::Json;

struct Options {
    std::uint64_t p = 2;
    unsigned prec = 1;
    unsigned k = 1;
    std::uint64_t e = 1;
    std::uint64_t order = 10;
    std::optional<std::uint64_t> range;
    std::string ideal_val;
    std::string format = "json";
    std::uint64_t seed = 20240601;
    std::uint64_t trials = 200;
    std::string in;
    std::string json;
    std::string partition;
    std::string from = "E";
    std::string to;
    std::uint64_t u = 1;
    std::string method;
    std::string P;
    std::string Q;
    bool include_n0 = false;
    bool search = false;
};

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json load_input(const Options& o, std::istream& in) {
    std::string text;
    if (!o.json.empty()) {
        text = o.json;
    } else if (o.in == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (!o.in.empty()) {
        std::ifstream f(o.in);
        if (!f) throw usage_error("cannot open input file '" + o.in + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    } else {
        throw usage_error("this subcommand needs --in <path|-> or --json <document>");
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw usage_error(std::string("malformed JSON: ") + e.what());
    }
}

void require_json_format(const Options& o) {
    if (o.format != "json") throw usage_error("this subcommand only supports --format json");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Rational ideal_value(const Options& o, const Rational& fallback) {
    if (o.ideal_val.empty()) return fallback;
    const Rational c = parse_rational(o.ideal_val);
    if (c <= 0) throw usage_error("--ideal-val must be positive");
    return c;
}

int verdict_exit(const CongruenceReport& r) {
    if (r.status == VerdictStatus::internal_error) return kExitInternal;
    const bool ok = r.elementary && r.deep && r.elementary_extended && r.deep_extended;
    return ok ? kExitTrue : kExitFalse;
}

int emit_report(const Options& o, std::ostream& out, const CongruenceReport& r) {
    if (o.format == "tsv") {
        out << io::report_to_tsv(r);
    } else {
        emit(out, io::report_to_json(r));
    }
    return verdict_exit(r);
}

template <class Ring, class Convert>
int congruence_over(const Ring& ring, const Json& jp, const Json& jq, Convert convert,
                    const IdealSpec& ideal, const Options& o, std::ostream& out) {
    using Element = typename Ring::element_type;
    auto poly = [&](const Json& j) {
        if (!j.is_array()) throw io::parse_error("polynomial must be a coefficient array");
        std::vector<Element> c;
        for (const auto& x : j) c.push_back(convert(x));
        return MonicPoly<Ring>::from_display(ring, std::move(c));
    };
    const auto P = poly(jp);
    const auto Q = poly(jq);
    const CongruenceReport r = theorem_verdict(P, Q, ideal, o.range.value_or(0), o.include_n0);
    return emit_report(o, out, r);
}

Json poly_from_flag(const std::string& text) {
    Json a = Json::array();
    for (const auto& v : io::parse_integer_list(text)) a.push_back(io::integer_to_json(v));
    return a;
}

int cmd_congruence_check(const Options& o, std::ostream& out, std::istream& in) {
    if (o.search) {
        require_json_format(o);
        const auto found = search_ramified_divergences(o.p, o.e, o.range.value_or(o.p), o.trials,
                                                       o.seed);
        Json list = Json::array();
        for (const auto& d : found) {
            list.push_back(Json{{"P", d.P.to_string()},
                                {"Q", d.Q.to_string()},
                                {"elementary", d.elementary},
                                {"deep", d.deep}});
        }
        emit(out, Json{{"p", o.p}, {"e", o.e}, {"trials", o.trials}, {"seed", o.seed},
                       {"divergences", list}});
        return kExitTrue;
    }

    Json doc;
    if (!o.P.empty() || !o.Q.empty()) {
        if (o.P.empty() || o.Q.empty()) throw usage_error("--P and --Q must be given together");
        doc = Json{{"ring", Json{{"type", "rational"}, {"p", o.p}}},
                   {"P", poly_from_flag(o.P)},
                   {"Q", poly_from_flag(o.Q)}};
    } else {
        doc = load_input(o, in);
    }
    const Json ring_spec = doc.contains("ring") ? doc.at("ring")
                                                : Json{{"type", "rational"}, {"p", o.p}};
    const std::string type = ring_spec.value("type", std::string("rational"));
    const Json& jp = doc.at("P");
    const Json& jq = doc.at("Q");

    if (type == "rational") {
        const std::uint64_t p = ring_spec.value("p", o.p);
        const Rational c = ideal_value(o, Rational(1));
        if (c.get_den() != 1) throw usage_error("ideal valuation over Z_(p) must be an integer");
        const RationalRing ring(p);
        return congruence_over(ring, jp, jq, io::rational_from_json,
                               IdealSpec::localized(p, Integer(c.get_num())), o, out);
    }
    if (type == "eisenstein") {
        const std::uint64_t p = ring_spec.at("p").get<std::uint64_t>();
        const std::uint64_t e = ring_spec.at("e").get<std::uint64_t>();
        const EisensteinRing ring(p, e);
        const Rational c = ideal_value(o, make_rational(Integer(1), Integer(static_cast<unsigned long>(e))));
        auto convert = [&](const Json& x) {
            if (!x.is_array()) return ring.from_rational(io::rational_from_json(x));
            std::vector<Rational> cs;
            for (const auto& v : x) cs.push_back(io::rational_from_json(v));
            return ring.element(std::move(cs));
        };
        return congruence_over(ring, jp, jq, convert, IdealSpec::eisenstein(p, e, c), o, out);
    }
    if (type == "galois") {
        const GaloisRing ring = io::galois_ring_from_json(ring_spec);
        const Rational c = ideal_value(o, Rational(1));
        if (c.get_den() != 1) throw usage_error("ideal valuation in a Galois ring must be an integer");
        auto convert = [&](const Json& x) { return io::galois_element_in(ring, x); };
        return congruence_over(ring, jp, jq, convert,
                               IdealSpec::localized(ring.prime(), Integer(c.get_num())), o, out);
    }
    throw usage_error("unknown ring type '" + type + "'");
}

int cmd_table(const Options& o, std::ostream& out) {
    const RationalRing ring(o.p);
    const auto P = MonicPoly<RationalRing>::from_display(ring, {1, 1, 3});
    const auto Q = MonicPoly<RationalRing>::from_display(ring, {1, 3, 5, 2, 6});
    const CongruenceReport r =
        theorem_verdict(P, Q, IdealSpec::localized(o.p, Integer(1)), o.range.value_or(16), true);
    if (o.format == "tsv") {
        out << io::report_to_tsv(r);
    } else {
        emit(out, io::report_to_json(r));
    }
    return kExitTrue;
}

int cmd_symfunc_convert(const Options& o, std::ostream& out, std::istream& in) {
    require_json_format(o);
    if (o.to.empty()) throw usage_error("--to E|P is required");
    const Basis target = parse_basis(o.to);
    SymFuncExpr f;
    if (!o.partition.empty() || (o.in.empty() && o.json.empty())) {
        f = SymFuncExpr::basis_element(parse_basis(o.from), io::parse_partition(o.partition));
    } else {
        f = io::symfunc_from_json(load_input(o, in));
    }
    emit(out, io::symfunc_to_json(convert(f, target)));
    return kExitTrue;
}

int cmd_glam(const Options& o, std::ostream& out) {
    require_json_format(o);
    emit(out, io::symfunc_to_json(g_lambda(io::parse_partition(o.partition), o.p)));
    return kExitTrue;
}

int cmd_partitions_class(const Options& o, std::ostream& out) {
    require_json_format(o);
    const Partition lambda = io::parse_partition(o.partition);
    Json cls = Json::array();
    const auto members = p_equivalence_class(lambda, o.p);
    for (const auto& mu : members) cls.push_back(io::partition_to_json(mu));
    emit(out, Json{{"partition", io::partition_to_json(lambda)},
                   {"p", o.p},
                   {"representative", io::partition_to_json(p_deprived_representative(lambda, o.p))},
                   {"size", members.size()},
                   {"class", cls}});
    return kExitTrue;
}

int cmd_artin_hasse(const Options& o, std::ostream& out) {
    require_json_format(o);
    const std::string method = o.method.empty() ? "exponential" : o.method;
    if (o.order > kDefaultWeightBound * 10) throw bound_exceeded("order too large");
    if (method == "both") {
        const auto a = artin_hasse(o.p, o.order, ArtinHasseMethod::exponential);
        const auto b = artin_hasse(o.p, o.order, ArtinHasseMethod::product);
        const bool agree = a == b;
        emit(out, Json{{"p", o.p}, {"order", o.order}, {"method", "both"}, {"agree", agree},
                       {"p_integral", is_p_integral(a, o.p)}, {"series", io::series_to_json(a)}});
        return agree ? kExitTrue : kExitInternal;
    }
    const auto f = artin_hasse(o.p, o.order, parse_artin_hasse_method(method));
    emit(out, Json{{"p", o.p}, {"order", o.order}, {"method", method},
                   {"p_integral", is_p_integral(f, o.p)}, {"series", io::series_to_json(f)}});
    return kExitTrue;
}

int cmd_gu_series(const Options& o, std::ostream& out) {
    require_json_format(o);
    const std::string method = o.method.empty() ? "class-sum" : o.method;
    if (method == "both") {
        const auto a = g_u_series(o.u, o.p, o.order, GuMethod::class_sum);
        const auto b = g_u_series(o.u, o.p, o.order, GuMethod::artin_hasse);
        const bool agree = a == b;
        emit(out, Json{{"u", o.u}, {"p", o.p}, {"order", o.order}, {"method", "both"},
                       {"agree", agree}, {"p_integral", is_p_integral(a, o.p)},
                       {"series", io::series_to_json(a)}});
        return agree ? kExitTrue : kExitInternal;
    }
    const auto f = g_u_series(o.u, o.p, o.order, parse_gu_method(method));
    emit(out, Json{{"u", o.u}, {"p", o.p}, {"order", o.order}, {"method", method},
                   {"p_integral", is_p_integral(f, o.p)}, {"series", io::series_to_json(f)}});
    return kExitTrue;
}

int cmd_module_compare(const Options& o, std::ostream& out, std::istream& in) {
    require_json_format(o);
    const Json doc = load_input(o, in);
    const std::uint64_t p = doc.value("p", o.p);
    const SsComparison c = ss_isomorphic(io::matrix_from_json(doc.at("M")),
                                         io::matrix_from_json(doc.at("N")), p);
    emit(out, io::ss_comparison_to_json(c));
    if (c.verdict != c.oracle || c.report.status == VerdictStatus::internal_error) {
        return kExitInternal;
    }
    return c.verdict ? kExitTrue : kExitFalse;
}

int cmd_virtual_compare(const Options& o, std::ostream& out, std::istream& in) {
    require_json_format(o);
    const Json doc = load_input(o, in);
    const std::uint64_t p = doc.value("p", o.p);
    const IntegerMatrix M1 = io::matrix_from_json(doc.at("M1"));
    const IntegerMatrix N1 = io::matrix_from_json(doc.at("N1"));
    const IntegerMatrix M2 = io::matrix_from_json(doc.at("M2"));
    const IntegerMatrix N2 = io::matrix_from_json(doc.at("N2"));
    const VirtualComparison c = virtual_compare(M1, N1, M2, N2, p, o.range);
    Json j = io::virtual_comparison_to_json(c);
    j["embeddings"] = Json{{"N1_in_M1", embedding_possible(N1, M1, p)},
                           {"N2_in_M2", embedding_possible(N2, M2, p)}};
    emit(out, j);
    return c.verdict ? kExitTrue : kExitFalse;
}

int cmd_recover(const Options& o, std::ostream& out, std::istream& in) {
    require_json_format(o);
    const Json doc = load_input(o, in);
    const GaloisRing ring =
        doc.contains("ring") ? io::galois_ring_from_json(doc.at("ring"))
                             : GaloisRing::with_default_modulus(o.p, o.prec, o.k);
    std::vector<GaloisRingElement> traces;
    for (const auto& t : doc.at("traces")) traces.push_back(io::galois_element_in(ring, t));
    emit(out, io::multiplicities_to_json(recover_multiplicities(traces, ring)));
    return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"Exact p-adic congruence toolkit for polynomials, symmetric functions and modules",
                 "pcong"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "prime");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--seed", o.seed, "seed for randomized modes");
    };
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "input JSON file, or - for stdin");
        sub->add_option("--json", o.json, "inline input JSON");
    };

    auto* congruence = app.add_subcommand("congruence-check", "elementary vs deep power-sum congruences");
    common(congruence);
    with_input(congruence);
    congruence->add_option("--P", o.P, "integer polynomial, leading to constant, e.g. 1,1,3");
    congruence->add_option("--Q", o.Q, "integer polynomial, leading to constant");
    congruence->add_option("--ideal-val", o.ideal_val, "ideal valuation c");
    congruence->add_option("--range", o.range, "extended range N");
    congruence->add_flag("--include-n0", o.include_n0, "also require deg P = deg Q");
    congruence->add_flag("--search", o.search, "search Eisenstein(p, e) for divergent pairs");
    congruence->add_option("--e", o.e, "ramification for --search");
    congruence->add_option("--trials", o.trials, "number of random pairs for --search");

    auto* convert_cmd = app.add_subcommand("symfunc-convert", "change of basis in Λ_Q");
    common(convert_cmd);
    with_input(convert_cmd);
    convert_cmd->add_option("--to", o.to, "target basis E or P");
    convert_cmd->add_option("--from", o.from, "basis of --partition");
    convert_cmd->add_option("--partition", o.partition, "basis element, e.g. 2,1");

    auto* glam = app.add_subcommand("glam", "class sum g_λ in the power-sum basis");
    common(glam);
    glam->add_option("--partition", o.partition, "λ, e.g. 1,1")->required();

    auto* cls = app.add_subcommand("partitions-class", "p-equivalence class of a partition");
    common(cls);
    cls->add_option("--partition", o.partition, "λ, e.g. 3,3,1,1")->required();

    auto* ah = app.add_subcommand("artin-hasse", "Artin-Hasse series");
    common(ah);
    ah->add_option("--order", o.order, "truncation order");
    ah->add_option("--method", o.method, "exponential, product or both");

    auto* gu = app.add_subcommand("gu-series", "G_u(t) with symmetric-function coefficients");
    common(gu);
    gu->add_option("--u", o.u, "u prime to p");
    gu->add_option("--order", o.order, "truncation order");
    gu->add_option("--method", o.method, "class-sum, artin-hasse or both");

    auto* mc = app.add_subcommand("module-compare", "semisimplification comparison of two matrices");
    common(mc);
    with_input(mc);

    auto* vc = app.add_subcommand("virtual-compare", "four-matrix trace comparison");
    common(vc);
    with_input(vc);
    vc->add_option("--range", o.range, "largest n (default rank M1 + rank N2)");

    auto* rec = app.add_subcommand("recover", "eigenvalue multiplicities from Galois-ring traces");
    common(rec);
    with_input(rec);
    rec->add_option("--prec", o.prec, "precision S");
    rec->add_option("--k", o.k, "residue degree k");

    auto* table = app.add_subcommand("paper-table", "power-sum table for X²+X+3 and X⁴+3X³+5X²+2X+6");
    common(table);
    table->add_option("--range", o.range, "largest n (default 16)");
    o.format = "json";

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        err << "pcong: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*table && table->count("--format") == 0) o.format = "tsv";
        if (*congruence) return cmd_congruence_check(o, out, in);
        if (*convert_cmd) return cmd_symfunc_convert(o, out, in);
        if (*glam) return cmd_glam(o, out);
        if (*cls) return cmd_partitions_class(o, out);
        if (*ah) return cmd_artin_hasse(o, out);
        if (*gu) return cmd_gu_series(o, out);
        if (*mc) return cmd_module_compare(o, out, in);
        if (*vc) return cmd_virtual_compare(o, out, in);
        if (*rec) return cmd_recover(o, out, in);
        if (*table) return cmd_table(o, out);
    } catch (const theorem_violation& e) {
        err << "pcong: internal inconsistency: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Json::exception& e) {
        err << "pcong: malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "pcong: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pcong::cli
