#include "pants/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pants/errors.hpp"

namespace pants::io {

using cat::AutPair;
using cat::RatMatrix;
using cat::Rational;
using cat::StarSumRep;

namespace {

std::size_t require_count(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ParseError(where, std::string("missing key \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(where + "." + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;

    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw ParseError(row_where, "expected an array of rational strings");
        if (row.size() != cols) throw ParseError(row_where, "ragged row");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& cell = row.at(c);
            std::string cell_where = row_where + "[" + std::to_string(c) + "]";
            if (!cell.is_string()) throw ParseError(cell_where, "expected a rational string");
            auto r = Rational::parse(cell.get<std::string>());
            if (!r)
                throw ParseError(cell_where,
                                 "malformed rational \"" + cell.get<std::string>() + "\"");
            entries.push_back(std::move(*r));
        }
    }
    return RatMatrix(rows, cols, std::move(entries));
}

Json rep_to_json(const StarSumRep& rep) {
    Json j;
    j["n"] = rep.n();
    j["dimV"] = rep.dim_v;
    Json outer = Json::array();
    for (const auto& o : rep.outer) {
        Json e;
        e["dim"] = o.dim;
        e["map"] = matrix_to_json(o.j);
        outer.push_back(std::move(e));
    }
    j["outer"] = std::move(outer);
    return j;
}

StarSumRep rep_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("$", "expected a representation object");
    std::size_t n = require_count(j, "n", "$");
    StarSumRep rep;
    rep.dim_v = require_count(j, "dimV", "$");
    if (!j.contains("outer") || !j.at("outer").is_array())
        throw ParseError("$.outer", "expected an array of outer spaces");
    const Json& outer = j.at("outer");
    if (outer.size() != n)
        throw ParseError("$.outer", "length disagrees with n");
    for (std::size_t a = 0; a < outer.size(); ++a) {
        std::string where = "$.outer[" + std::to_string(a) + "]";
        const Json& e = outer.at(a);
        if (!e.is_object()) throw ParseError(where, "expected an object");
        cat::OuterSpace o;
        o.dim = require_count(e, "dim", where);
        if (!e.contains("map")) throw ParseError(where, "missing key \"map\"");
        o.j = matrix_from_json(e.at("map"), where + ".map");
        if (o.j.rows() != rep.dim_v || o.j.cols() != o.dim)
            throw ParseError(where + ".map", "shape must be dimV x dim");
        rep.outer.push_back(std::move(o));
    }
    return rep;
}

Json autpair_to_json(const AutPair& a) {
    Json j;
    j["dim"] = a.dim;
    j["m"] = matrix_to_json(a.m);
    return j;
}

AutPair autpair_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("$", "expected an automorphism-pair object");
    AutPair a;
    a.dim = require_count(j, "dim", "$");
    if (!j.contains("m")) throw ParseError("$", "missing key \"m\"");
    a.m = matrix_from_json(j.at("m"), "$.m");
    if (a.m.rows() != a.dim || a.m.cols() != a.dim)
        throw ParseError("$.m", "shape must be dim x dim");
    return a;
}

Json validation_to_json(const cat::ValidationReport& report) {
    Json j;
    j["valid"] = report.valid;
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
        Json e;
        e["a"] = p.a;
        e["b"] = p.b;
        e["dims_ok"] = p.dims_ok;
        if (p.det) e["det"] = p.det->str();
        e["ok"] = p.ok;
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Json classification_to_json(const cat::ClassificationResult& res) {
    using Kind = cat::ClassificationResult::Kind;
    Json j;
    switch (res.kind) {
        case Kind::Vect:
            j["class"] = "vect";
            j["dim"] = res.dims.at(0);
            if (res.graph_iso) j["m3"] = matrix_to_json(*res.graph_iso);
            break;
        case Kind::VectPair:
            j["class"] = "vect_pair";
            j["dims"] = res.dims;
            break;
        case Kind::Pants:
            j["class"] = "autpair";
            j["dim"] = res.pair->dim;
            j["m"] = matrix_to_json(res.pair->m);
            break;
        case Kind::Unclassified:
            j["class"] = "unclassified";
            break;
    }
    return j;
}

Json witness_to_json(const cat::RoundTripWitness& w) {
    Json j;
    j["phi"] = matrix_to_json(w.phi);
    j["subspace_checks"] = w.subspace_ok;
    j["checks_pass"] = w.all_ok;
    return j;
}

Json parse_document(const std::string& text, const std::string& filename) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based position of the failure
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(filename + ":" + std::to_string(line) + ":" + std::to_string(col),
                         "malformed JSON");
    }
}

Json load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

}  // namespace pants::io
