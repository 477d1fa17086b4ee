#pragma once

// Serialization of paths and rigged configurations: a compact JSON document
// form for machine use and a line-oriented pretty form that mirrors the usual
// partition-with-labels display.  Both forms parse back to equal documents.

#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "pathrc/crystal_paths.hpp"
#include "pathrc/rigged_config.hpp"

namespace pathrc {

using Json = nlohmann::ordered_json;
using Document = std::variant<Path, RiggedConfiguration>;

inline Json shape_to_json(const RectangleSeq& shape) {
    Json arr = Json::array();
    for (const Rect& b : shape) arr.push_back({b.height, b.width});
    return arr;
}

inline Json to_json(const Path& p) {
    Json j;
    j["kind"] = "path";
    j["n"] = p.rank;
    j["B"] = shape_to_json(p.shape());
    Json factors = Json::array();
    for (const Tableau& t : p.factors) {
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(row);
        factors.push_back(std::move(rows));
    }
    j["factors"] = std::move(factors);
    return j;
}

inline Json to_json(const RiggedConfiguration& rc) {
    Json j;
    j["kind"] = "rc";
    j["n"] = rc.rank;
    j["B"] = shape_to_json(rc.shape);
    Json levels = Json::array();
    for (const RiggedPartition& level : rc.levels) {
        Json strings = Json::array();
        for (const RiggedString& s : level) strings.push_back({s.length, s.label});
        levels.push_back(std::move(strings));
    }
    j["levels"] = std::move(levels);
    return j;
}

inline Json to_json(const Document& d) {
    return std::visit([](const auto& v) { return to_json(v); }, d);
}

/// One-line canonical JSON.
inline std::string print_document(const Document& d) { return to_json(d).dump(); }

namespace detail {

inline invalid_argument parse_error(const std::string& what) {
    return invalid_argument("document-parse: " + what);
}

inline RectangleSeq shape_from_json(const Json& arr) {
    if (!arr.is_array()) throw parse_error("\"B\" must be an array of [height,width] pairs");
    RectangleSeq shape;
    for (const Json& b : arr) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
            !b[1].is_number_integer())
            throw parse_error("\"B\" must be an array of [height,width] pairs");
        shape.push_back(Rect{b[0].get<int>(), b[1].get<int>()});
    }
    return shape;
}

inline int rank_from_json(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("missing integer field \"n\"");
    return j["n"].get<int>();
}

}  // namespace detail

inline Document document_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw detail::parse_error("document must be an object with a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    const int rank = detail::rank_from_json(j);
    if (!j.contains("B")) throw detail::parse_error("missing field \"B\"");
    const RectangleSeq shape = detail::shape_from_json(j["B"]);

    if (kind == "path") {
        if (!j.contains("factors") || !j["factors"].is_array())
            throw detail::parse_error("path document needs a \"factors\" array");
        Path p;
        p.rank = rank;
        for (const Json& f : j["factors"]) {
            if (!f.is_array()) throw detail::parse_error("each factor must be an array of rows");
            Tableau t;
            for (const Json& row : f) {
                if (!row.is_array()) throw detail::parse_error("each row must be an array");
                std::vector<int> r;
                for (const Json& x : row) {
                    if (!x.is_number_integer()) throw detail::parse_error("entries must be integers");
                    r.push_back(x.get<int>());
                }
                t.rows.push_back(std::move(r));
            }
            p.factors.push_back(std::move(t));
        }
        try {
            validate_path(p);
        } catch (const invalid_argument& e) {
            throw detail::parse_error(e.what());
        }
        if (p.shape() != shape) throw detail::parse_error("\"B\" does not match the factors' shape");
        return p;
    }
    if (kind == "rc") {
        if (!j.contains("levels") || !j["levels"].is_array())
            throw detail::parse_error("rc document needs a \"levels\" array");
        RiggedConfiguration rc;
        rc.rank = rank;
        rc.shape = shape;
        for (const Json& level : j["levels"]) {
            if (!level.is_array()) throw detail::parse_error("each level must be an array");
            RiggedPartition part;
            for (const Json& s : level) {
                if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
                    !s[1].is_number_integer())
                    throw detail::parse_error("each string must be a [length,label] pair");
                part.push_back(RiggedString{s[0].get<int>(), s[1].get<int>()});
            }
            rc.levels.push_back(std::move(part));
        }
        rc.canonicalize();
        try {
            validate_configuration(rc);
        } catch (const invalid_argument& e) {
            throw detail::parse_error(e.what());
        }
        return rc;
    }
    throw detail::parse_error("unknown \"kind\": " + kind);
}

namespace detail {

inline std::string shape_header(const RectangleSeq& shape) {
    std::ostringstream os;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ',';
        os << shape[i].height << 'x' << shape[i].width;
    }
    return os.str();
}

}  // namespace detail

inline std::string render_pretty(const RiggedConfiguration& rc) {
    std::ostringstream os;
    os << "rc n=" << rc.rank << " B=" << detail::shape_header(rc.shape) << '\n';
    for (int a = 1; a <= rc.rank; ++a) {
        os << '(' << a << "): ";
        const RiggedPartition& level = rc.levels[static_cast<std::size_t>(a - 1)];
        if (level.empty()) {
            os << "(empty)";
        } else {
            for (std::size_t i = 0; i < level.size(); ++i) {
                if (i) os << " ; ";
                os << level[i].length << " | " << level[i].label;
            }
        }
        os << '\n';
    }
    return os.str();
}

inline std::string render_pretty(const Path& p) {
    std::ostringstream os;
    os << "path n=" << p.rank << " B=" << detail::shape_header(p.shape()) << '\n';
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        os << "factor " << (i + 1) << ":\n";
        for (const auto& row : p.factors[i].rows) {
            os << ' ';
            for (int x : row) os << ' ' << x;
            os << '\n';
        }
    }
    return os.str();
}

inline std::string render_pretty(const Document& d) {
    return std::visit([](const auto& v) { return render_pretty(v); }, d);
}

namespace detail {

inline RectangleSeq shape_from_header(const std::string& field) {
    RectangleSeq shape;
    if (field.empty()) return shape;
    std::istringstream is(field);
    std::string part;
    while (std::getline(is, part, ',')) {
        const auto x = part.find('x');
        if (x == std::string::npos) throw parse_error("bad shape entry: " + part);
        try {
            shape.push_back(Rect{std::stoi(part.substr(0, x)), std::stoi(part.substr(x + 1))});
        } catch (const std::exception&) {
            throw parse_error("bad shape entry: " + part);
        }
    }
    return shape;
}

/// Splits "key=value" tokens of the pretty header line.
inline std::string header_field(const std::string& line, const std::string& key) {
    const std::string needle = ' ' + key + '=';
    const auto pos = line.find(needle);
    if (pos == std::string::npos) throw parse_error("header is missing " + key + '=');
    const auto start = pos + needle.size();
    const auto end = line.find(' ', start);
    return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

inline Document parse_pretty(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw parse_error("empty document");
    const bool is_rc = line.rfind("rc ", 0) == 0;
    const bool is_path = line.rfind("path ", 0) == 0;
    if (!is_rc && !is_path) throw parse_error("unrecognized document header: " + line);

    int rank = 0;
    try {
        rank = std::stoi(header_field(line, "n"));
    } catch (const std::exception&) {
        throw parse_error("bad rank in header");
    }
    const RectangleSeq shape = shape_from_header(header_field(line, "B"));

    if (is_rc) {
        RiggedConfiguration rc;
        rc.rank = rank;
        rc.shape = shape;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            const auto colon = line.find("):");
            if (line.front() != '(' || colon == std::string::npos)
                throw parse_error("bad level line: " + line);
            std::string rest = line.substr(colon + 2);
            RiggedPartition level;
            if (rest.find("(empty)") == std::string::npos) {
                std::istringstream ls(rest);
                std::string chunk;
                while (std::getline(ls, chunk, ';')) {
                    const auto bar = chunk.find('|');
                    if (bar == std::string::npos) throw parse_error("bad string entry: " + chunk);
                    try {
                        level.push_back(RiggedString{std::stoi(chunk.substr(0, bar)),
                                                     std::stoi(chunk.substr(bar + 1))});
                    } catch (const std::exception&) {
                        throw parse_error("bad string entry: " + chunk);
                    }
                }
            }
            rc.levels.push_back(std::move(level));
        }
        rc.canonicalize();
        try {
            validate_configuration(rc);
        } catch (const invalid_argument& e) {
            throw parse_error(e.what());
        }
        return rc;
    }

    Path p;
    p.rank = rank;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("factor ", 0) == 0) {
            p.factors.emplace_back();
            continue;
        }
        if (p.factors.empty()) throw parse_error("row before any factor line");
        std::istringstream ls(line);
        std::vector<int> row;
        int x = 0;
        while (ls >> x) row.push_back(x);
        if (row.empty()) throw parse_error("bad row line: " + line);
        p.factors.back().rows.push_back(std::move(row));
    }
    try {
        validate_path(p);
    } catch (const invalid_argument& e) {
        throw parse_error(e.what());
    }
    if (p.shape() != shape) throw parse_error("header shape does not match the factors");
    return p;
}

}  // namespace detail

/// Parses either serialized form; JSON documents start with '{'.
inline Document parse_document(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw detail::parse_error("empty document");
    if (text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const std::exception& e) {
            throw detail::parse_error(e.what());
        }
        return document_from_json(j);
    }
    return detail::parse_pretty(text);
}

}  // namespace pathrc
