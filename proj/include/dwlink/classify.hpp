#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyon.hpp"
#include "braid.hpp"
#include "catalog.hpp"
#include "modular.hpp"

namespace dwlink {

/// Modular permutations between two cocycle parameters that share modular data.
struct PairPermutations {
    int i = 0;
    int j = 0;
    std::vector<ModularPermutation> perms;
};

/// All categories for u = 0..p-1 with their modular data, fusion rules and permutation sets.
class Engine {
public:
    explicit Engine(GroupSpec spec = {}, unsigned jobs = 1) : jobs_(std::max(1u, jobs)) {
        group_ = std::make_unique<MetacyclicGroup>(spec);
        for (int u = 0; u < spec.p; ++u) {
            cats_.push_back(std::make_unique<Category>(build_category(*group_, u)));
            reps_.push_back(std::make_unique<BraidRepresentation>(*cats_.back()));
            modular_.push_back(compute_modular_data(*reps_.back()));
            fusion_.push_back(verlinde_fusion(modular_.back(), jobs_));
        }
        for (int i = 0; i < spec.p; ++i)
            for (int j = i + 1; j < spec.p; ++j)
                if (modular_data_equal_as_sets(modular_[i], modular_[j]))
                    pairs_.push_back({i, j, modular_permutations(modular_[i], fusion_[i], modular_[j], fusion_[j])});
    }

    const MetacyclicGroup& group() const { return *group_; }
    unsigned jobs() const { return jobs_; }
    int cocycle_count() const { return static_cast<int>(cats_.size()); }
    const Category& category(int u) const { return *cats_.at(u); }
    const BraidRepresentation& representation(int u) const { return *reps_.at(u); }
    const ModularData& modular(int u) const { return modular_.at(u); }
    const FusionRules& fusion(int u) const { return fusion_.at(u); }
    const std::vector<PairPermutations>& shared_pairs() const { return pairs_; }

    const PairPermutations& pair(int i, int j) const {
        for (const auto& p : pairs_)
            if (p.i == i && p.j == j) return p;
        throw std::invalid_argument("u=" + std::to_string(i) + " and u=" + std::to_string(j) +
                                    " do not share modular data");
    }

    InvariantTensor tensor(const LinkRecord& rec, int u) const {
        return invariant_tensor(representation(u), rec.id, rec.word, jobs_);
    }

private:
    unsigned jobs_;
    std::unique_ptr<MetacyclicGroup> group_;
    std::vector<std::unique_ptr<Category>> cats_;
    std::vector<std::unique_ptr<BraidRepresentation>> reps_;
    std::vector<ModularData> modular_;
    std::vector<FusionRules> fusion_;
    std::vector<PairPermutations> pairs_;
};

struct PairVerdict {
    int i = 0;
    int j = 0;
    std::size_t permutations = 0;
    std::size_t transporting = 0;  // permutations carrying L^(i) onto L^(j)

    bool distinguishes() const { return transporting == 0; }
};

struct ClassificationResult {
    std::string id;
    int components = 0;
    int writhe = 0;
    std::vector<PairVerdict> pairs;
    bool weak = false;
    bool strong = false;
    bool all_equal = false;
    std::vector<std::uint64_t> digests;  // order-free digest of each entry multiset, per u
};

namespace detail {

inline std::uint64_t multiset_digest(const std::vector<CyclotomicInteger>& entries) {
    std::vector<std::uint64_t> h;
    h.reserve(entries.size());
    for (const auto& e : entries) h.push_back(e.hash());
    std::sort(h.begin(), h.end());
    std::uint64_t d = 1469598103934665603ull;
    for (auto v : h) d = (d ^ v) * 1099511628211ull;
    return d;
}

}  // namespace detail

/// True iff tgt[rho(a), rho(b), ...] == src[a, b, ...] for every index tuple; ids are interned values.
inline bool transports(const ModularPermutation& rho, const std::vector<std::uint32_t>& src,
                       const std::vector<std::uint32_t>& tgt, int order, std::size_t rank) {
    std::vector<std::size_t> idx(order, 0);
    for (std::size_t f = 0; f < src.size(); ++f) {
        std::size_t g = 0;
        for (int c = 0; c < order; ++c) g = g * rank + rho.image[idx[c]];
        if (tgt[g] != src[f]) return false;
        for (int c = order; c-- > 0;) {
            if (++idx[c] < rank) break;
            idx[c] = 0;
        }
    }
    return true;
}

/// Weak and strong distinguishability from one tensor per u. The weak test runs only over pairs
/// that share modular data.
inline ClassificationResult classify(const LinkRecord& rec, const std::vector<InvariantTensor>& tensors,
                                     const std::vector<PairPermutations>& pairs) {
    if (tensors.empty()) throw std::invalid_argument("no invariant tensors for " + rec.id);
    ClassificationResult res;
    res.id = rec.id;
    res.components = rec.components;
    res.writhe = writhe(rec.word);

    ValueInterner pool;
    std::vector<std::vector<std::uint32_t>> ids, sorted;
    for (const auto& t : tensors) {
        if (t.order != rec.components || t.entries.size() != tensors[0].entries.size())
            throw std::invalid_argument("tensor shape mismatch for " + rec.id);
        ids.push_back(pool.ids(t.entries));
        sorted.push_back(ids.back());
        std::sort(sorted.back().begin(), sorted.back().end());
        res.digests.push_back(detail::multiset_digest(t.entries));
    }

    const std::size_t n = tensors.size();
    res.strong = n > 1;
    res.all_equal = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (sorted[a] == sorted[b]) res.strong = false;
            if (ids[a] != ids[b]) res.all_equal = false;
        }

    for (const auto& pp : pairs) {
        if (pp.i >= static_cast<int>(n) || pp.j >= static_cast<int>(n))
            throw std::invalid_argument("missing tensor for u=" + std::to_string(std::max(pp.i, pp.j)));
        PairVerdict v{pp.i, pp.j, pp.perms.size(), 0};
        for (const auto& rho : pp.perms)
            if (transports(rho, ids[pp.i], ids[pp.j], tensors[0].order, tensors[0].rank)) ++v.transporting;
        if (v.distinguishes()) res.weak = true;
        res.pairs.push_back(v);
    }
    return res;
}

/// The same tensors with entries rescaled to W_ab = (theta_a / theta_b) * Wtilde_ab.
inline std::vector<InvariantTensor> w_tensors(const Engine& engine, const std::vector<InvariantTensor>& raw) {
    std::vector<InvariantTensor> out;
    for (const auto& t : raw) {
        InvariantTensor w = t;
        w.entries = w_matrix(engine.category(t.u), t);
        out.push_back(std::move(w));
    }
    return out;
}

struct ObservationReport {
    std::size_t knots = 0;
    std::size_t zero_writhe = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Knot vectors across u: I-entries integral and u-independent, A-entries u-independent, and
/// zero-writhe knots fully u-independent.
inline ObservationReport verify_observations(const Category& labels_from, const std::vector<LinkRecord>& knots,
                                             const std::vector<std::vector<InvariantTensor>>& tensors) {
    ObservationReport rep;
    for (std::size_t k = 0; k < knots.size(); ++k) {
        const auto& rec = knots[k];
        if (rec.components != 1) continue;
        ++rep.knots;
        const auto& ts = tensors.at(k);
        const bool zero = writhe(rec.word) == 0;
        if (zero) ++rep.zero_writhe;
        for (std::size_t a = 0; a < labels_from.rank(); ++a) {
            const auto kind = labels_from[a].label.kind;
            const auto name = labels_from[a].label.name();
            if (kind == AnyonKind::I && !ts[0].entries[a].is_integer())
                rep.violations.push_back(rec.id + ": " + name + " entry not an integer at u=" + std::to_string(ts[0].u));
            const bool must_match = zero || kind != AnyonKind::B;
            if (!must_match) continue;
            for (std::size_t u = 1; u < ts.size(); ++u)
                if (!(ts[u].entries[a] == ts[0].entries[a])) {
                    rep.violations.push_back(rec.id + ": " + name + " entry differs between u=" +
                                             std::to_string(ts[0].u) + " and u=" + std::to_string(ts[u].u));
                    break;
                }
        }
    }
    return rep;
}

/// Weak column marks weak-but-not-strong, matching the published tables.
inline std::string report_tables(const std::vector<LinkRecord>& catalog,
                                 const std::vector<ClassificationResult>& results, const std::string& format) {
    if (format != "tsv" && format != "markdown") throw std::invalid_argument("unknown table format " + format);
    std::map<std::string, const ClassificationResult*> by_id;
    for (const auto& r : results) by_id[r.id] = &r;
    std::ostringstream os;
    auto section = [&](int comps, const std::string& title) {
        bool any = false;
        for (const auto& rec : catalog) {
            if (rec.components != comps) continue;
            auto it = by_id.find(rec.id);
            if (it == by_id.end()) continue;
            if (!any) {
                if (format == "markdown")
                    os << "\n### " << title << "\n\n| ID | Braid word | Weak | Strong | All equal |\n|---|---|---|---|---|\n";
                else
                    os << "# " << title << "\nid\tbraidword\tweak\tstrong\tall_equal\n";
                any = true;
            }
            const auto& r = *it->second;
            const char* weak = r.weak && !r.strong ? "✓" : "";
            const char* strong = r.strong ? "✓" : "";
            const char* eq = r.all_equal ? "✓" : "";
            if (format == "markdown")
                os << "| " << rec.id << " | " << rec.braidword << " | " << weak << " | " << strong << " | " << eq
                   << " |\n";
            else
                os << rec.id << '\t' << rec.braidword << '\t' << weak << '\t' << strong << '\t' << eq << '\n';
        }
    };
    section(1, "Knots");
    section(2, "Two-component links");
    section(3, "Three-component links");
    return os.str();
}

}  // namespace dwlink
