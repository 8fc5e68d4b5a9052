#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "anyon.hpp"
#include "braid.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "cyclotomic.hpp"

namespace dwlink {

inline constexpr const char* kEngineVersion = "dwlink-engine/1";

/// FNV-1a over the engine version and group parameters, as 16 hex digits.
inline std::string engine_version_hash(const GroupSpec& spec) {
    std::string key = std::string(kEngineVersion) + ";" + std::to_string(spec.q) + ";" + std::to_string(spec.p) +
                      ";" + std::to_string(spec.n);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

inline double round15(double v) {
    if (v == 0 || !std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::stod(buf);
}

}  // namespace detail

inline nlohmann::json value_to_json(const CyclotomicInteger& v) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (auto [e, c] : v.terms()) coeffs[std::to_string(e)] = c;
    return coeffs;
}

inline CyclotomicInteger value_from_json(const nlohmann::json& coeffs, const CyclotomicField& field) {
    std::vector<std::int64_t> poly(field.order(), 0);
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        int e = std::stoi(it.key());
        if (e < 0 || e >= field.order()) throw std::runtime_error("exponent out of range in stored value");
        poly[e] += it.value().get<std::int64_t>();
    }
    return field.from_dense(std::move(poly));
}

/// One document per (link, u). Zero entries are omitted from "entries".
inline nlohmann::json tensor_to_json(const Category& cat, const LinkRecord& rec, const InvariantTensor& t) {
    nlohmann::json doc;
    doc["link"] = rec.id;
    doc["u"] = t.u;
    doc["writhe"] = writhe(rec.word);
    doc["components"] = t.order;
    doc["engine"] = engine_version_hash(cat.group().spec());
    doc["rank"] = t.rank;
    auto& entries = doc["entries"] = nlohmann::json::array();
    for (std::size_t f = 0; f < t.entries.size(); ++f) {
        const auto& v = t.entries[f];
        if (v.is_zero()) continue;
        nlohmann::json e;
        auto& labels = e["labels"] = nlohmann::json::array();
        for (auto l : t.labels_of(f)) labels.push_back(cat[l].label.name());
        e["coeffs"] = value_to_json(v);
        auto [re, im] = v.approx();
        e["approx"] = {detail::round15(re), detail::round15(im)};
        entries.push_back(std::move(e));
    }
    return doc;
}

inline InvariantTensor tensor_from_json(const Category& cat, const nlohmann::json& doc) {
    InvariantTensor t;
    t.link = doc.at("link").get<std::string>();
    t.u = doc.at("u").get<int>();
    t.order = doc.at("components").get<int>();
    t.rank = cat.rank();
    if (t.u != cat.u()) throw std::runtime_error("stored tensor for u=" + std::to_string(t.u) + " read against u=" +
                                                 std::to_string(cat.u()));
    if (doc.contains("rank") && doc["rank"].get<std::size_t>() != t.rank)
        throw std::runtime_error("stored tensor rank mismatch");
    std::size_t total = 1;
    for (int c = 0; c < t.order; ++c) total *= t.rank;
    const auto& field = CyclotomicField::get(cat.root_order());
    t.entries.assign(total, field.integer(0));
    std::vector<std::size_t> labels(t.order);
    for (const auto& e : doc.at("entries")) {
        const auto& names = e.at("labels");
        if (static_cast<int>(names.size()) != t.order) throw std::runtime_error("stored entry has wrong arity");
        for (int c = 0; c < t.order; ++c) labels[c] = cat.index_of(names[c].get<std::string>());
        t.entries[t.flat_index(labels)] = value_from_json(e.at("coeffs"), field);
    }
    return t;
}

/// Directory of JSON documents under <root>/<engine hash>/; last writer wins.
class ResultStore {
public:
    ResultStore(std::filesystem::path root, const GroupSpec& spec)
        : dir_(std::move(root) / engine_version_hash(spec)) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& directory() const { return dir_; }

    std::filesystem::path path_for(const std::string& link, int u) const {
        std::string name;
        for (char c : link) name += (c == '/' || c == '\\') ? '_' : c;
        return dir_ / (name + "__u" + std::to_string(u) + ".json");
    }

    std::optional<InvariantTensor> load(const Category& cat, const std::string& link) const {
        auto p = path_for(link, cat.u());
        if (!std::filesystem::exists(p)) return std::nullopt;
        std::ifstream in(p);
        auto doc = nlohmann::json::parse(in);
        return tensor_from_json(cat, doc);
    }

    void save(const Category& cat, const LinkRecord& rec, const InvariantTensor& t) const {
        auto p = path_for(rec.id, t.u);
        auto tmp = p;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            out << tensor_to_json(cat, rec, t).dump();
        }
        std::filesystem::rename(tmp, p);
    }

private:
    std::filesystem::path dir_;
};

/// Tensors for u = 0..p-1, read from the store when present and written back otherwise.
inline std::vector<InvariantTensor> tensors_for(const Engine& engine, const LinkRecord& rec,
                                                const ResultStore* store = nullptr) {
    std::vector<InvariantTensor> out;
    for (int u = 0; u < engine.cocycle_count(); ++u) {
        const auto& cat = engine.category(u);
        std::optional<InvariantTensor> t;
        if (store) t = store->load(cat, rec.id);
        if (!t) {
            t = engine.tensor(rec, u);
            if (store) store->save(cat, rec, *t);
        }
        out.push_back(std::move(*t));
    }
    return out;
}

}  // namespace dwlink
