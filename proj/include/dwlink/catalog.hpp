#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"

namespace dwlink {

struct LinkRecord {
    std::string id;
    std::string braidword;
    int strands = 0;
    int components = 0;
    BraidWord word;
};

class CatalogError : public std::runtime_error {
public:
    CatalogError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Component count encoded in a Rolfsen / Doll-Hoste id: "7^2_2+-" -> 2, "5_2" -> 1.
inline int components_from_id(const std::string& id) {
    auto caret = id.find('^');
    if (caret == std::string::npos) return 1;
    auto us = id.find('_', caret);
    if (us == std::string::npos || us == caret + 1) throw std::invalid_argument("malformed link id: " + id);
    return std::stoi(id.substr(caret + 1, us - caret - 1));
}

inline LinkRecord make_record(const std::string& id, const std::string& braidword, int strands) {
    LinkRecord r;
    r.id = id;
    r.braidword = braidword;
    r.strands = strands;
    r.word = parse_gittings(braidword, strands);
    r.components = static_cast<int>(components(r.word).size());
    if (r.components != components_from_id(id))
        throw std::invalid_argument("braid closure of " + id + " has " + std::to_string(r.components) +
                                    " components");
    return r;
}

/// Tab-separated `id  braidword  strands`; blank lines and `#` comments ignored.
inline std::vector<LinkRecord> parse_catalog(std::istream& in, const std::string& source = "<catalog>") {
    std::vector<LinkRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 3) throw CatalogError(source, lineno, "expected 3 tab-separated fields");
        int strands = 0;
        try {
            std::size_t used = 0;
            strands = std::stoi(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw CatalogError(source, lineno, "bad strand count '" + fields[2] + "'");
        }
        try {
            out.push_back(make_record(fields[0], fields[1], strands));
        } catch (const std::exception& e) {
            throw CatalogError(source, lineno, e.what());
        }
        for (std::size_t k = 0; k + 1 < out.size(); ++k)
            if (out[k].id == out.back().id) throw CatalogError(source, lineno, "duplicate id " + out.back().id);
    }
    return out;
}

inline std::vector<LinkRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    return parse_catalog(in, path);
}

inline const LinkRecord& find_record(const std::vector<LinkRecord>& catalog, const std::string& id) {
    for (const auto& r : catalog)
        if (r.id == id) return r;
    throw std::invalid_argument("unknown link id " + id);
}

}  // namespace dwlink
