#pragma once

// JSON formats (1-based indices throughout) and report serialization.
//
// Graph:          {"m":5,"n":3,"e1":[[1,1],...],"e2":[[[1,3],[4,2]]],"e3":[[[2,2],[3,1],[5,3]]]}
// Decomposition:  {"m":5,"n":5,"forms":[[{"cell":[1,1],"coeff":1}, ...], ...]}
//                 or the bare list of forms (dimensions inferred).
// Form:           [{"cells":[[i,j],[k,l]],"coefficient":c}, ...]

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zrk/certificates.hpp"
#include "zrk/conditions.hpp"
#include "zrk/forms.hpp"
#include "zrk/graph.hpp"
#include "zrk/search.hpp"

namespace zrk {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; ParseError carries the byte offset of the failure.
Json parse_json(std::string_view text);

/// Reads a whole file; ParseError when it cannot be opened.
std::string read_file(const std::string& path);

Json cell_to_json(const Cell& c);
Cell cell_from_json(const Json& j);

/// Integers that fit in 64 bits become numbers, others decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json graph_to_json(const AugmentedGraph& g);
AugmentedGraph graph_from_json(const Json& j);
AugmentedGraph parse_graph(std::string_view text);

/// Compact canonical serialization; equal strings iff equal graphs.
std::string serialize_graph(const AugmentedGraph& g);

Json decomposition_to_json(const SosDecomposition& d);
SosDecomposition decomposition_from_json(const Json& j);

/// True for a decomposition document (bare list or object with "forms").
bool is_decomposition_json(const Json& j);

Json form_to_json(const BiquadraticForm& f);

Json to_json(const Witness& w);
Json to_json(const ConditionReport& r);
Json to_json(const GramReport& r);
Json to_json(const RankCertificate& c);
Json to_json(const Q55Report& r);
Json to_json(const OrthogonalityReplay& r);
Json to_json(const SearchConfig& c);
Json to_json(const SearchResult& r);

/// Lower-case hex of the canonical code, for stable witness comparison.
std::string code_hex(const AugmentedGraph& g);

std::string sha256_hex(std::string_view data);

enum class ReportKind { Verify, Certify, Search, Expand };

std::string to_string(ReportKind k);

struct Report {
    ReportKind kind = ReportKind::Verify;
    Json payload;
    std::vector<std::string> hypotheses;  // result tags the payload bears on

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

}  // namespace zrk
