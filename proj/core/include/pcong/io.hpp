#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcong/congruence.hpp"
#include "pcong/eisenstein.hpp"
#include "pcong/galois_ring.hpp"
#include "pcong/matrix.hpp"
#include "pcong/module_compare.hpp"
#include "pcong/multiplicity.hpp"
#include "pcong/partition.hpp"
#include "pcong/series.hpp"
#include "pcong/symfunc.hpp"

namespace pcong::io {

/// Insertion-ordered JSON so output is byte-stable and reads top-down.
using Json = nlohmann::ordered_json;

/// Thrown for structurally invalid input documents.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integers are numbers when they fit in 64 bits, strings otherwise; parsing accepts both.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Rationals are "num/den" strings (plain integers also accepted on input).
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);
/// "3,3,1,1" (empty string for ∅).
Partition parse_partition(const std::string& text);

/// {"basis": "E"|"P", "terms": [{"partition": [...], "coefficient": "a/b"}, ...]}
Json symfunc_to_json(const SymFuncExpr& f);
SymFuncExpr symfunc_from_json(const Json& j);

/// {"order": N, "coefficients": [...]}
Json series_to_json(const RationalSeries& f);
RationalSeries rational_series_from_json(const Json& j);
Json series_to_json(const SymFuncSeries& f);
SymFuncSeries symfunc_series_from_json(const Json& j);

/// {"p", "e", "coefficients": [c_0, ..., c_{e−1}]}
Json eisenstein_to_json(const EisensteinElement& x);
EisensteinElement eisenstein_from_json(const Json& j);

/// {"p", "S", "k", "modulus": [leading..constant], "coefficients": [c_0, ..., c_{k−1}]}
Json galois_ring_to_json(const GaloisRing& ring);
GaloisRing galois_ring_from_json(const Json& j);
Json galois_element_to_json(const GaloisRingElement& x);
GaloisRingElement galois_element_from_json(const Json& j);
/// A bare coefficient (integer or low-to-high array) interpreted in a known ring.
GaloisRingElement galois_element_in(const GaloisRing& ring, const Json& j);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

/// Display order: leading..constant.
Json fp_poly_to_json(const FpPoly& f);
std::vector<Integer> integer_list_from_json(const Json& j);
/// "1,1,3" or "1 1 3".
std::vector<Integer> parse_integer_list(const std::string& text);

Json flag_to_json(const CongruenceFlag& f);
Json report_to_json(const CongruenceReport& r);
/// Columns: n, c + v_p(n), e_n(P), e_n(Q), p_n(P), p_n(Q), v_p(p_n(P) − p_n(Q)).
std::string report_to_tsv(const CongruenceReport& r);

Json multiplicities_to_json(const MultiplicityVector& m);
MultiplicityVector multiplicities_from_json(const Json& j);

Json ss_comparison_to_json(const SsComparison& c);
Json virtual_comparison_to_json(const VirtualComparison& c);

}  // namespace pcong::io
