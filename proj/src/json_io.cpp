#include "artal/json_io.hpp"

#include <stdexcept>

namespace artal {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::string require_string(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) malformed(std::string(what) + " must be a string");
    return j.get<std::string>();
}

int require_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const Cyclotomic& c) {
    return Json::array({format_rational(c.rational_part()), format_rational(c.omega_part())});
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) malformed("coordinate must be a two-element array");
    return {parse_rational(require_string(j[0], "rational part")),
            parse_rational(require_string(j[1], "omega part"))};
}

Json to_json(const ProjectivePoint& p) {
    Triple t = normalized(p.coords);
    return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])});
}

ProjectivePoint point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) malformed("point must be a three-element array");
    return {{cyclotomic_from_json(j[0]), cyclotomic_from_json(j[1]), cyclotomic_from_json(j[2])}};
}

Json to_json(const ProjectiveLine& l) {
    Triple t = normalized(l.coeffs);
    return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])});
}

Json to_json(const SingularRecord& rec) {
    Json j;
    j["kind"] = to_string(rec.kind);
    j["lines"] = rec.lines;
    j["point"] = to_json(rec.location);
    return j;
}

SingularRecord record_from_json(const nlohmann::json& j) {
    SingularRecord rec;
    std::string kind = require_string(require(j, "kind"), "record kind");
    if (kind == "tangency")
        rec.kind = SingularKind::Tangency;
    else if (kind == "node")
        rec.kind = SingularKind::Node;
    else if (kind == "concurrency")
        rec.kind = SingularKind::Concurrency;
    else
        malformed("unknown record kind \"" + kind + "\"");
    const auto& lines = require(j, "lines");
    if (!lines.is_array()) malformed("record lines must be an array");
    for (const auto& l : lines) rec.lines.push_back(require_int(l, "line index"));
    rec.location = point_from_json(require(j, "point"));
    return rec;
}

std::string encoding_to_string(const CanonicalEncoding& enc) {
    return canonical_encoding_string(enc);
}

CanonicalEncoding encoding_from_string(const std::string& s) {
    CanonicalEncoding enc;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        if (term.size() < 3 || term[1] != '(' || term.back() != ')')
            malformed("bad canonical term \"" + term + "\"");
        int code;
        switch (term[0]) {
            case 'T': code = 0; break;
            case 'N': code = 1; break;
            case 'C': code = 2; break;
            default: malformed("bad canonical kind in \"" + term + "\"");
        }
        std::vector<int> lines;
        size_t p = 2;
        while (p < term.size() - 1) {
            size_t comma = term.find(',', p);
            if (comma == std::string::npos || comma > term.size() - 1) comma = term.size() - 1;
            std::string num = term.substr(p, comma - p);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                malformed("bad line index in \"" + term + "\"");
            lines.push_back(std::stoi(num));
            p = comma + 1;
        }
        enc.emplace_back(code, std::move(lines));
        pos = end + 1;
    }
    return enc;
}

Json to_json(const ArrangementType& t) {
    Json j;
    j["k"] = t.k;
    j["n"] = t.n;
    j["tag"] = to_string(t.tag);
    return j;
}

ArrangementType arrangement_type_from_json(const nlohmann::json& j) {
    ArrangementType t;
    t.k = require_int(require(j, "k"), "type k");
    t.n = require_int(require(j, "n"), "type n");
    t.tag = type_tag_from_string(require_string(require(j, "tag"), "type tag"));
    return t;
}

Json to_json(const CensusRow& row) {
    Json j;
    j["k"] = row.k;
    j["possible_n"] = row.possible_n;
    Json dist = Json::object();
    for (const auto& [n, count] : row.distribution) dist[std::to_string(n)] = count;
    j["distribution"] = dist;
    return j;
}

Json to_json(const InvariantProfile& profile) {
    Json j;
    j["k"] = profile.k;
    Json triples = Json::array();
    for (const auto& [triple, values] : profile.triple_values) {
        Json t;
        t["triple"] = triple.to_string();
        t["d6"] = values.d6;
        t["alex"] = values.alex;
        t["split"] = values.split;
        t["lks"] = values.lks;
        triples.push_back(std::move(t));
    }
    j["triples"] = triples;
    FiberCounts counts = profile.fiber_counts();
    j["counts"] = Json{{"d6_one", counts.d6_one},
                       {"alex_one", counts.alex_one},
                       {"split_three", counts.split_three},
                       {"lks_one", counts.lks_one}};
    j["n_collinear"] = profile.n_collinear;
    return j;
}

Json to_json(const ZariskiCertificate& cert) {
    Json j;
    j["mu"] = format_rational(cert.mu);
    j["k"] = cert.k;
    j["subsets"] = Json::array({cert.subsets[0].to_string(), cert.subsets[1].to_string()});
    j["types"] = Json::array({to_json(cert.types[0]), to_json(cert.types[1])});

    Json combinatorics;
    combinatorics["canonical"] = encoding_to_string(cert.canonical);
    Json records = Json::array();
    for (const auto& side : cert.records) {
        Json list = Json::array();
        for (const auto& rec : side) list.push_back(to_json(rec));
        records.push_back(std::move(list));
    }
    combinatorics["records"] = records;
    combinatorics["degree_fixed_component"] = 3;
    combinatorics["degree_lines"] = 1;
    j["combinatorics"] = combinatorics;

    j["counts"] = Json{{"n1", cert.n1}, {"n2", cert.n2}};
    j["relabeling"] = cert.relabeling;
    return j;
}

ZariskiCertificate certificate_from_json(const nlohmann::json& j) {
    ZariskiCertificate cert;
    cert.mu = parse_rational(require_string(require(j, "mu"), "mu"));
    cert.k = require_int(require(j, "k"), "k");

    const auto& subsets = require(j, "subsets");
    if (!subsets.is_array() || subsets.size() != 2) malformed("subsets must be a pair");
    cert.subsets[0] = PointSubset::parse(require_string(subsets[0], "subset"));
    cert.subsets[1] = PointSubset::parse(require_string(subsets[1], "subset"));

    const auto& types = require(j, "types");
    if (!types.is_array() || types.size() != 2) malformed("types must be a pair");
    cert.types[0] = arrangement_type_from_json(types[0]);
    cert.types[1] = arrangement_type_from_json(types[1]);

    const auto& combinatorics = require(j, "combinatorics");
    cert.canonical =
        encoding_from_string(require_string(require(combinatorics, "canonical"), "canonical"));
    const auto& records = require(combinatorics, "records");
    if (!records.is_array() || records.size() != 2) malformed("records must be a pair of lists");
    for (int side = 0; side < 2; ++side) {
        if (!records[side].is_array()) malformed("record list must be an array");
        for (const auto& rec : records[side])
            cert.records[side].push_back(record_from_json(rec));
    }

    const auto& counts = require(j, "counts");
    cert.n1 = require_int(require(counts, "n1"), "n1");
    cert.n2 = require_int(require(counts, "n2"), "n2");

    const auto& relabeling = require(j, "relabeling");
    if (!relabeling.is_array()) malformed("relabeling must be an array");
    for (const auto& v : relabeling) cert.relabeling.push_back(require_int(v, "relabeling entry"));
    return cert;
}

}  // namespace artal
