#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwlink/catalog.hpp"
#include "dwlink/classify.hpp"
#include "dwlink/modular.hpp"
#include "dwlink/quandle.hpp"
#include "dwlink/store.hpp"
#include "dwlink/verify.hpp"

#ifndef DWLINK_DEFAULT_CATALOG
#define DWLINK_DEFAULT_CATALOG "data/catalog.tsv"
#endif

using namespace dwlink;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Options {
    int q = 11, p = 5, n = 3;
    std::string catalog = DWLINK_DEFAULT_CATALOG;
    std::string store;
    unsigned jobs = 1;
    std::string format = "tsv";
    int u = 1;
    std::string pair = "1,4";
    std::string link;
    std::string labels;
    int k = 1;
    bool emit_table = false;
    bool anyons = false;
    std::string suite = "all";
    std::size_t samples = 10000;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupSpec spec_of(const Options& o) { return {o.q, o.p, o.n}; }

std::unique_ptr<ResultStore> open_store(const Options& o) {
    if (o.store.empty()) return nullptr;
    return std::make_unique<ResultStore>(o.store, spec_of(o));
}

void require_u(const Options& o) {
    if (o.u < 0 || o.u >= o.p) throw UsageError("--u must lie in [0, " + std::to_string(o.p) + ")");
}

std::pair<int, int> parse_pair(const std::string& s) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
        throw UsageError("--pair expects i,j (got '" + s + "')");
    return {i, j};
}

int cmd_invariants(const Options& o) {
    require_u(o);
    if (o.link.empty()) throw UsageError("invariants needs --link");
    if (o.format != "json" && o.format != "tsv") throw UsageError("--format must be json or tsv");
    auto catalog = load_catalog(o.catalog);
    const auto& rec = find_record(catalog, o.link);
    MetacyclicGroup G(spec_of(o));
    Category cat = build_category(G, o.u);
    BraidRepresentation rep(cat);

    InvariantTensor t;
    if (!o.labels.empty()) {
        std::vector<std::size_t> assignment;
        std::stringstream ss(o.labels);
        std::string name;
        while (std::getline(ss, name, ',')) assignment.push_back(cat.index_of(name));
        if (static_cast<int>(assignment.size()) != rec.components)
            throw UsageError(rec.id + " has " + std::to_string(rec.components) + " components");
        t.link = rec.id;
        t.u = o.u;
        t.order = rec.components;
        t.rank = cat.rank();
        t.entries.assign(1, rep.closure_invariant(rec.word, {assignment}));
        if (o.format == "json") {
            nlohmann::json doc = {{"link", rec.id}, {"u", o.u}, {"writhe", writhe(rec.word)},
                                  {"components", rec.components}};
            nlohmann::json e;
            e["labels"] = nlohmann::json::array();
            for (auto a : assignment) e["labels"].push_back(cat[a].label.name());
            e["coeffs"] = value_to_json(t.entries[0]);
            auto [re, im] = t.entries[0].approx();
            e["approx"] = {re, im};
            doc["entries"] = nlohmann::json::array({e});
            std::cout << doc.dump(1) << '\n';
        } else {
            for (auto a : assignment) std::cout << cat[a].label.name() << '\t';
            std::cout << t.entries[0].to_string() << '\n';
        }
        return kOk;
    }

    auto store = open_store(o);
    std::optional<InvariantTensor> cached;
    if (store) cached = store->load(cat, rec.id);
    t = cached ? *cached : invariant_tensor(rep, rec.id, rec.word, o.jobs);
    if (store && !cached) store->save(cat, rec, t);
    if (o.format == "json") {
        std::cout << tensor_to_json(cat, rec, t).dump() << '\n';
    } else {
        for (std::size_t f = 0; f < t.entries.size(); ++f) {
            for (auto l : t.labels_of(f)) std::cout << cat[l].label.name() << '\t';
            auto [re, im] = t.entries[f].approx();
            std::printf("%s\t%.15g\t%.15g\n", t.entries[f].to_string().c_str(), re, im);
        }
    }
    return kOk;
}

int cmd_modperms(const Options& o) {
    auto [i, j] = parse_pair(o.pair);
    if (i < 0 || j < 0 || i >= o.p || j >= o.p) throw UsageError("--pair entries must lie in [0, p)");
    MetacyclicGroup G(spec_of(o));
    Category ci = build_category(G, i), cj = build_category(G, j);
    BraidRepresentation ri(ci), rj(cj);
    auto mi = compute_modular_data(ri), mj = compute_modular_data(rj);
    auto fi = verlinde_fusion(mi, o.jobs), fj = verlinde_fusion(mj, o.jobs);
    auto perms = modular_permutations(mi, fi, mj, fj);
    auto check = backtracking_modular_permutations(mi, mj);
    std::cout << "# T-respecting candidates: " << count_T_respecting(mi, fi, mj, fj) << '\n';
    std::cout << "# modular permutations: " << perms.size() << " (backtracking: " << check.size() << ")\n";
    if (o.emit_table) {
        std::cout << format_permutation_table(mi, mj, perms);
    } else {
        for (const auto& p : perms) {
            for (std::size_t a = 0; a < p.image.size(); ++a)
                std::cout << (a ? " " : "") << mi.labels[a].name() << "->" << mj.labels[p.image[a]].name();
            std::cout << '\n';
        }
    }
    return perms == check ? kOk : kMismatch;
}

std::vector<LinkRecord> selected_records(const Options& o) {
    auto catalog = load_catalog(o.catalog);
    if (o.link.empty()) return catalog;
    return {find_record(catalog, o.link)};
}

int cmd_classify(const Options& o) {
    if (o.format != "json" && o.format != "tsv" && o.format != "markdown")
        throw UsageError("--format must be json, tsv or markdown");
    auto records = selected_records(o);
    Engine E(spec_of(o), o.jobs);
    auto store = open_store(o);
    std::vector<ClassificationResult> results;
    for (const auto& rec : records) {
        auto ts = tensors_for(E, rec, store.get());
        results.push_back(classify(rec, ts, E.shared_pairs()));
    }
    if (o.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& p : r.pairs)
                pairs.push_back({{"i", p.i}, {"j", p.j}, {"permutations", p.permutations},
                                 {"transporting", p.transporting}, {"distinguishes", p.distinguishes()}});
            out.push_back({{"link", r.id}, {"components", r.components}, {"writhe", r.writhe}, {"weak", r.weak},
                           {"strong", r.strong}, {"all_equal", r.all_equal}, {"pairs", pairs}, {"digests", r.digests}});
        }
        std::cout << out.dump(1) << '\n';
    } else {
        std::cout << report_tables(records, results, o.format);
    }
    return kOk;
}

int cmd_quandle(const Options& o) {
    if (o.link.empty()) throw UsageError("quandle needs --link");
    auto catalog = load_catalog(o.catalog);
    const auto& rec = find_record(catalog, o.link);
    auto X = make_quandle(spec_of(o), o.k);
    auto c = count_colorings(rec.word, X);
    std::cout << rec.id << "\tk=" << o.k << "\tbrute=" << c.brute << "\tlinear=" << c.linear << '\n';
    return c.agree() ? kOk : kMismatch;
}

int cmd_verify(const Options& o) {
    static const std::vector<std::string> suites = {"cocycle", "twists", "modular", "braid", "oracle",
                                                    "observations", "markov", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) throw UsageError("unknown suite " + o.suite);
    auto want = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
    std::vector<CheckResult> results;
    MetacyclicGroup G(spec_of(o));
    if (want("cocycle")) results.push_back(check_cocycles(G));
    if (o.suite != "cocycle") {
        Engine E(spec_of(o), o.jobs);
        if (want("twists")) results.push_back(check_twists(E));
        if (want("modular")) results.push_back(check_modular(E));
        if (want("braid")) {
            for (int u = 0; u < E.cocycle_count(); ++u) results.push_back(check_braid_relation(E, u, o.samples));
            results.push_back(check_braid_composition(E, 1));
        }
        if (want("markov")) results.push_back(check_markov_conjugation(E, load_catalog(o.catalog), 1, 20));
        if (want("oracle") || want("observations")) {
            auto catalog = load_catalog(o.catalog);
            auto store = open_store(o);
            std::vector<std::vector<InvariantTensor>> tensors;
            for (const auto& rec : catalog) tensors.push_back(tensors_for(E, rec, store.get()));
            if (want("oracle")) results.push_back(check_oracle(E, catalog, tensors));
            if (want("observations")) {
                auto t0 = std::chrono::steady_clock::now();
                auto rep = verify_observations(E.category(0), catalog, tensors);
                CheckResult r{"observations", rep.ok(), std::to_string(rep.knots) + " knots, " +
                                                            std::to_string(rep.violations.size()) + " violations"};
                for (const auto& v : rep.violations) r.detail += "\n  " + v;
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                results.push_back(r);
            }
        }
    }
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s\t%s\t%.2fs\t%s\n", r.pass ? "ok" : "MISMATCH", r.name.c_str(), r.seconds, r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? kOk : kMismatch;
}

int cmd_report(const Options& o) {
    if (o.anyons) {
        require_u(o);
        MetacyclicGroup G(spec_of(o));
        Category cat = build_category(G, o.u);
        std::cout << "label\td\ttwist_exponent_mod_" << cat.root_order() << '\n';
        for (const auto& a : cat.anyons()) std::cout << a.label.name() << '\t' << a.qdim << '\t' << a.twist << '\n';
        return kOk;
    }
    Options c = o;
    if (c.format == "json") throw UsageError("report renders tsv or markdown");
    return cmd_classify(c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link invariants of twisted Drinfeld doubles of Z_q x| Z_p"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--q", o.q, "order of the normal cyclic subgroup")->capture_default_str();
    app.add_option("--p", o.p, "order of the quotient cyclic group")->capture_default_str();
    app.add_option("--n", o.n, "action parameter, of multiplicative order p mod q")->capture_default_str();
    app.add_option("--catalog", o.catalog, "link catalog (id, braid word, strands)")->capture_default_str();
    app.add_option("--store", o.store, "directory for cached invariant tensors");
    app.add_option("--jobs", o.jobs, "worker threads")->capture_default_str();

    auto* inv = app.add_subcommand("invariants", "invariant tensor of one link");
    inv->add_option("--link", o.link)->required();
    inv->add_option("--u", o.u)->capture_default_str();
    inv->add_option("--labels", o.labels, "comma-separated labels, one per component");
    inv->add_option("--format", o.format, "json or tsv")->capture_default_str();

    auto* mp = app.add_subcommand("modperms", "modular permutations between two cocycles");
    mp->add_option("--pair", o.pair, "i,j")->capture_default_str();
    mp->add_flag("--emit-table", o.emit_table, "one row per label, one column per permutation");

    auto* cl = app.add_subcommand("classify", "weak/strong distinguishability");
    cl->add_option("--link", o.link, "restrict to one catalog id");
    cl->add_option("--format", o.format, "json, tsv or markdown")->capture_default_str();

    auto* qu = app.add_subcommand("quandle", "Alexander quandle coloring counts");
    qu->add_option("--link", o.link)->required();
    qu->add_option("--k", o.k)->capture_default_str();

    auto* ve = app.add_subcommand("verify", "run verification suites");
    ve->add_option("--suite", o.suite, "cocycle|twists|modular|braid|oracle|observations|markov|all")
        ->capture_default_str();
    ve->add_option("--samples", o.samples, "random colorings per u for the braid suite (0 = exhaustive)")
        ->capture_default_str();

    auto* re = app.add_subcommand("report", "tables or the anyon list");
    re->add_flag("--anyons", o.anyons, "list labels, dimensions and twists");
    re->add_option("--u", o.u)->capture_default_str();
    re->add_option("--format", o.format, "tsv or markdown")->capture_default_str();
    re->add_option("--link", o.link, "restrict to one catalog id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        if (*inv) return cmd_invariants(o);
        if (*mp) return cmd_modperms(o);
        if (*cl) return cmd_classify(o);
        if (*qu) return cmd_quandle(o);
        if (*ve) return cmd_verify(o);
        if (*re) return cmd_report(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
