#include "zrk/io.hpp"

#include <openssl/evp.h>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "zrk/errors.hpp"

namespace zrk {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int dimension(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

const Json& array_of(const Json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(size) + " elements");
    return j;
}

Json cells_to_json(const auto& cells) {
    Json out = Json::array();
    for (const Cell& c : cells) out.push_back(cell_to_json(c));
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json cell_to_json(const Cell& c) { return Json::array({c.row + 1, c.col + 1}); }

Cell cell_from_json(const Json& j) {
    array_of(j, 2, "a cell");
    if (!j[0].is_number_integer() || !j[1].is_number_integer()) throw ParseError("cell indices must be integers");
    return Cell{j[0].get<int>() - 1, j[1].get<int>() - 1};
}

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + j.get<std::string>());
        }
    }
    throw ParseError("coefficient must be an integer or a decimal string");
}

Json graph_to_json(const AugmentedGraph& g) {
    Json j;
    j["m"] = g.rows();
    j["n"] = g.cols();
    j["e1"] = cells_to_json(g.one_edges());
    j["e2"] = Json::array();
    for (const auto& e : g.two_edges()) j["e2"].push_back(cells_to_json(e.cells()));
    j["e3"] = Json::array();
    for (const auto& e : g.three_edges()) j["e3"].push_back(cells_to_json(e.cells()));
    return j;
}

AugmentedGraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("graph must be a JSON object");
    const int m = dimension(j, "m");
    const int n = dimension(j, "n");
    std::vector<Cell> e1;
    std::vector<Edge2> e2;
    std::vector<Edge3> e3;
    auto list = [&](const char* key) -> const Json& {
        static const Json empty = Json::array();
        if (!j.contains(key)) return empty;
        if (!j.at(key).is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
        return j.at(key);
    };
    for (const auto& c : list("e1")) e1.push_back(cell_from_json(c));
    for (const auto& e : list("e2")) {
        array_of(e, 2, "a 2-edge");
        e2.emplace_back(cell_from_json(e[0]), cell_from_json(e[1]));
    }
    for (const auto& e : list("e3")) {
        array_of(e, 3, "a 3-edge");
        e3.emplace_back(cell_from_json(e[0]), cell_from_json(e[1]), cell_from_json(e[2]));
    }
    return AugmentedGraph(m, n, std::move(e1), std::move(e2), std::move(e3));
}

AugmentedGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string serialize_graph(const AugmentedGraph& g) { return graph_to_json(g).dump(); }

Json decomposition_to_json(const SosDecomposition& d) {
    Json j;
    j["m"] = d.rows();
    j["n"] = d.cols();
    j["forms"] = Json::array();
    for (const auto& f : d.forms()) {
        Json terms = Json::array();
        for (const auto& [c, v] : f.nonzeros()) {
            Json t;
            t["cell"] = cell_to_json(c);
            t["coeff"] = integer_to_json(v);
            terms.push_back(std::move(t));
        }
        j["forms"].push_back(std::move(terms));
    }
    return j;
}

bool is_decomposition_json(const Json& j) { return j.is_array() || (j.is_object() && j.contains("forms")); }

SosDecomposition decomposition_from_json(const Json& j) {
    const Json& forms = j.is_array() ? j : field(j, "forms");
    if (!forms.is_array()) throw ParseError("\"forms\" must be an array");

    std::vector<std::vector<std::pair<Cell, Integer>>> parsed;
    int max_row = 0;
    int max_col = 0;
    for (const auto& form : forms) {
        if (!form.is_array()) throw ParseError("each form must be an array of terms");
        auto& terms = parsed.emplace_back();
        for (const auto& t : form) {
            Cell c = cell_from_json(field(t, "cell"));
            terms.emplace_back(c, integer_from_json(field(t, "coeff")));
            max_row = std::max(max_row, c.row + 1);
            max_col = std::max(max_col, c.col + 1);
        }
    }
    const int m = j.is_object() ? dimension(j, "m") : max_row;
    const int n = j.is_object() ? dimension(j, "n") : max_col;
    if (m < 1 || n < 1) throw ParseError("decomposition has no dimensions");

    SosDecomposition d(m, n);
    for (const auto& terms : parsed) {
        BilinearForm f(m, n);
        for (const auto& [c, v] : terms) f.set(c, f.at(c) + v);
        d.push_back(std::move(f));
    }
    return d;
}

Json form_to_json(const BiquadraticForm& f) {
    Json out = Json::array();
    for (const auto& [k, v] : f.terms()) {
        Json t;
        auto cells = k.representative();
        t["cells"] = k.is_square() ? Json::array({cell_to_json(cells[0])}) : cells_to_json(cells);
        t["coefficient"] = integer_to_json(v);
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const Witness& w) {
    Json j;
    j["cells"] = cells_to_json(w.cells);
    Json rows = Json::array();
    for (int r : w.rows) rows.push_back(r + 1);
    Json cols = Json::array();
    for (int c : w.cols) cols.push_back(c + 1);
    j["rows"] = rows;
    j["cols"] = cols;
    j["description"] = w.description;
    return j;
}

Json to_json(const ConditionReport& r) {
    Json j;
    j["condition"] = to_string(r.condition);
    j["passed"] = r.passed;
    j["vacuous"] = r.vacuous;
    j["subject"] = cells_to_json(r.subject);
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["detail"] = r.detail;
    return j;
}

Json to_json(const GramReport& r) {
    Json j;
    j["strict_pattern"] = r.strict_pattern;
    j["sum_relations"] = r.sum_relations;
    j["pairs_checked"] = r.pairs_checked;
    j["violations"] = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["cells"] = cells_to_json(std::array<Cell, 2>{v.a, v.b});
        x["expected"] = integer_to_json(v.expected);
        x["actual"] = integer_to_json(v.actual);
        j["violations"].push_back(std::move(x));
    }
    j["relation_failures"] = Json::array();
    for (const auto& k : r.relation_failures) j["relation_failures"].push_back(cells_to_json(k.representative()));
    return j;
}

Json to_json(const RankCertificate& c) {
    Json j;
    j["graph"] = graph_to_json(c.graph);
    j["valid"] = c.valid;
    j["claimed_rank"] = c.claimed_rank ? Json(*c.claimed_rank) : Json(nullptr);
    j["edge_count"] = c.edge_count;
    j["conditions"] = Json::array();
    for (const auto& r : c.reports) j["conditions"].push_back(to_json(r));
    j["rank_check"] = {{"decomposition_rank", c.decomposition_rank}, {"passed", c.decomposition_rank == c.edge_count}};
    j["expansion_check"] = c.expansion_verified;
    j["strict_gram_pattern"] = c.strict_gram_pattern;
    j["condition2_reading"] = c.reading == Condition2Reading::Literal ? "literal" : "occupancy";
    j["hash"] = c.hash;
    j["notes"] = c.notes;
    return j;
}

Json to_json(const Q55Report& r) {
    Json j;
    j["passed"] = r.passed();
    j["expansion_equal"] = r.expansion_equal;
    j["independent_rank"] = r.independent_rank;
    j["base_dimension"] = r.base_dimension;
    j["forced_equalities"] = r.forced_equalities;
    j["triple_unit"] = r.triple_unit;
    j["orthogonal_to_base"] = r.orthogonal_to_base;
    j["outside_base"] = r.outside_base;
    j["base_certified"] = r.base_certified;
    j["base_certified_rank"] = r.base_certified_rank;
    return j;
}

Json to_json(const OrthogonalityReplay& r) {
    Json j;
    j["passed"] = r.passed();
    j["triples"] = Json::array();
    for (const auto& t : r.triples) {
        Json x;
        x["edge"] = cells_to_json(t.edge.cells());
        x["halves_equal"] = t.halves_equal;
        x["norm_squared"] = integer_to_json(t.norm_squared);
        Json u = Json::array();
        for (const auto& v : t.u) u.push_back(integer_to_json(v));
        x["u"] = u;
        j["triples"].push_back(std::move(x));
    }
    Json dots = Json::array();
    for (const auto& d : r.cross_dots) dots.push_back(integer_to_json(d));
    j["cross_dots"] = dots;
    j["base_cells"] = r.base_cells;
    j["base_vectors"] = r.base_vectors;
    j["base_rank"] = r.base_rank;
    j["orthogonal_to_base"] = r.orthogonal_to_base;
    j["failures"] = r.failures;
    return j;
}

Json to_json(const SearchConfig& c) {
    Json j;
    j["condition2_reading"] = c.reading == Condition2Reading::Literal ? "literal" : "occupancy";
    j["symmetry"] = c.symmetry;
    j["allow_degenerate_two_edges"] = c.allow_degenerate_two_edges;
    j["budget_nodes"] = c.budget_nodes;
    j["budget_seconds"] = c.budget_seconds;
    j["threads"] = effective_threads(c);
    j["max_dimension"] = c.max_dimension;
    j["max_cells_full"] = c.max_cells_full;
    j["max_witnesses"] = c.max_witnesses;
    j["seed"] = c.seed;
    j["pair_constraints"] = c.pair_constraints.size();
    return j;
}

std::string code_hex(const AugmentedGraph& g) {
    std::ostringstream s;
    for (unsigned char ch : canonical_code(g)) s << std::hex << std::setw(2) << std::setfill('0') << int(ch);
    return s.str();
}

Json to_json(const SearchResult& r) {
    Json j;
    j["statistic"] = to_string(r.statistic);
    j["m"] = r.m;
    j["n"] = r.n;
    j["value"] = r.value;
    j["augmentation"] = r.augmentation;
    j["exhaustive"] = r.exhaustive;
    j["nodes_explored"] = r.nodes_explored;
    j["one_edge_classes"] = r.one_edge_classes;
    j["seconds"] = r.seconds;
    j["published_value"] = r.published_value ? Json(*r.published_value) : Json(nullptr);
    j["published_is_lower_bound"] = r.published_is_lower_bound;
    j["flags"] = r.flags;
    j["witnesses"] = Json::array();
    for (const auto& w : r.witnesses) {
        Json x;
        x["code"] = code_hex(w);
        x["graph"] = graph_to_json(w);
        j["witnesses"].push_back(std::move(x));
    }
    j["config"] = to_json(r.config);
    return j;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw Error("SHA-256 computation failed");
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return s.str();
}

std::string to_string(ReportKind k) {
    switch (k) {
        case ReportKind::Verify: return "verify";
        case ReportKind::Certify: return "certify";
        case ReportKind::Search: return "search";
        case ReportKind::Expand: return "expand";
    }
    return "?";
}

Json to_json(const Report& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["hypotheses"] = r.hypotheses;
    j["payload"] = r.payload;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    const auto kind = field(j, "kind");
    bool found = false;
    for (auto k : {ReportKind::Verify, ReportKind::Certify, ReportKind::Search, ReportKind::Expand})
        if (kind == to_string(k)) {
            r.kind = k;
            found = true;
        }
    if (!found) throw ParseError("unknown report kind");
    r.hypotheses = field(j, "hypotheses").get<std::vector<std::string>>();
    r.payload = field(j, "payload");
    return r;
}

}  // namespace zrk
