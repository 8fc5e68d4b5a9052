#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "anyon.hpp"
#include "cyclotomic.hpp"
#include "monomial.hpp"

namespace dwlink {

struct BraidLetter {
    int generator = 1;  // sigma_generator, 1-based
    int sign = 1;

    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;

    BraidWord then(const BraidWord& next) const {
        if (next.strands != strands) throw std::invalid_argument("strand count mismatch in braid product");
        BraidWord out = *this;
        out.letters.insert(out.letters.end(), next.letters.begin(), next.letters.end());
        return out;
    }

    BraidWord inverse() const {
        BraidWord out{strands, {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->generator, -it->sign});
        return out;
    }
};

/// Gittings letters: A = sigma_1^-1, B = sigma_2^-1, a = sigma_1, b = sigma_2, in reading order
/// (reading order is bottom-up).
inline BraidWord parse_gittings(std::string_view word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    BraidWord out{strands, {}};
    for (std::size_t k = 0; k < word.size(); ++k) {
        BraidLetter l;
        switch (word[k]) {
            case 'A': l = {1, -1}; break;
            case 'B': l = {2, -1}; break;
            case 'a': l = {1, 1}; break;
            case 'b': l = {2, 1}; break;
            default:
                throw std::invalid_argument("unknown braid letter '" + std::string(1, word[k]) + "' at position " +
                                            std::to_string(k));
        }
        if (l.generator >= strands)
            throw std::invalid_argument("generator sigma_" + std::to_string(l.generator) + " needs more than " +
                                        std::to_string(strands) + " strands");
        out.letters.push_back(l);
    }
    return out;
}

inline std::string to_gittings(const BraidWord& w) {
    std::string s;
    for (auto l : w.letters) {
        if (l.generator > 2) throw std::invalid_argument("Gittings notation covers sigma_1 and sigma_2 only");
        s += l.generator == 1 ? (l.sign > 0 ? 'a' : 'A') : (l.sign > 0 ? 'b' : 'B');
    }
    return s;
}

inline int writhe(const BraidWord& w) {
    int s = 0;
    for (auto l : w.letters) s += l.sign;
    return s;
}

/// Bottom position -> top position of each strand.
inline std::vector<int> strand_permutation(const BraidWord& w) {
    std::vector<int> at(w.strands);  // at[pos] = strand currently at pos
    std::iota(at.begin(), at.end(), 0);
    for (auto l : w.letters) std::swap(at[l.generator - 1], at[l.generator]);
    std::vector<int> perm(w.strands);
    for (int pos = 0; pos < w.strands; ++pos) perm[at[pos]] = pos;
    return perm;
}

/// Closure components as sets of bottom positions, ordered by least position.
inline std::vector<std::vector<int>> components(const BraidWord& w) {
    auto perm = strand_permutation(w);
    std::vector<bool> seen(w.strands, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < w.strands; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int t = s; !seen[t]; t = perm[t]) {
            seen[t] = true;
            cyc.push_back(t);
        }
        std::sort(cyc.begin(), cyc.end());
        out.push_back(std::move(cyc));
    }
    return out;
}

/// One anyon index per closure component.
struct ComponentLabeling {
    std::vector<std::size_t> assignment;

    std::vector<std::size_t> strand_labels(const BraidWord& w) const {
        auto comps = components(w);
        if (comps.size() != assignment.size())
            throw std::invalid_argument("labeling has " + std::to_string(assignment.size()) + " labels for " +
                                        std::to_string(comps.size()) + " components");
        std::vector<std::size_t> out(w.strands);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (int s : comps[c]) out[s] = assignment[c];
        return out;
    }
};

struct BraidImage {
    std::vector<std::size_t> top_labels;
    MonomialOperator op;
};

/// Colored braid group representations on left-nested tensor products of simple objects.
class BraidRepresentation {
public:
    explicit BraidRepresentation(const Category& cat) : cat_(&cat) {
        inverse_action_.resize(cat.rank());
        for (std::size_t a = 0; a < cat.rank(); ++a)
            for (const auto& op : cat[a].action) inverse_action_[a].push_back(op.inverse());
    }

    const Category& category() const { return *cat_; }

    /// c_{x,y} : V_x (x) V_y -> V_y (x) V_x for sign +1, c_{y,x}^-1 for sign -1.
    MonomialOperator braiding(std::size_t x, std::size_t y, int sign) const {
        return apply(BraidWord{2, {{1, sign}}}, {x, y}).op;
    }

    /// Operator from the bottom space (labels as given) to the top space.
    BraidImage apply(const BraidWord& w, const std::vector<std::size_t>& bottom) const {
        check_labels(w, bottom);
        BraidImage img;
        img.top_labels = bottom;
        State st(w.strands);
        for (auto l : w.letters) std::swap(img.top_labels[l.generator - 1], img.top_labels[l.generator]);
        std::size_t dim = 1;
        for (auto lab : bottom) dim *= (*cat_)[lab].qdim;
        img.op.order = cat_->root_order();
        img.op.target.resize(dim);
        img.op.phase.resize(dim);
        for (std::size_t s = 0; s < dim; ++s) {
            decode(s, bottom, st);
            int ph = run(w, st);
            img.op.target[s] = static_cast<std::uint32_t>(encode(st));
            img.op.phase[s] = ph;
        }
        return img;
    }

    MonomialOperator represent(const BraidWord& w, const ComponentLabeling& labeling) const {
        return apply(w, labeling.strand_labels(w)).op;
    }

    /// Plain trace of the closed braid (blackboard framing).
    RootSum closure_trace(const BraidWord& w, const std::vector<std::size_t>& bottom) const {
        check_labels(w, bottom);
        auto perm = strand_permutation(w);
        for (int s = 0; s < w.strands; ++s)
            if (bottom[s] != bottom[perm[s]]) throw std::invalid_argument("labeling is not constant on components");
        const int N = cat_->root_order();
        std::vector<std::int64_t> hist(N, 0);
        std::size_t dim = 1;
        for (auto lab : bottom) dim *= (*cat_)[lab].qdim;
        State st(w.strands);
        std::vector<int> start(w.strands);
        for (std::size_t s = 0; s < dim; ++s) {
            decode(s, bottom, st);
            start = st.idx;
            int ph = run(w, st);
            if (st.idx == start) ++hist[ph];
        }
        return RootSum::from_histogram(N, hist);
    }

    CyclotomicInteger closure_invariant(const BraidWord& w, const ComponentLabeling& labeling) const {
        return closure_trace(w, labeling.strand_labels(w)).reduce();
    }

private:
    struct State {
        explicit State(int n) : label(n), idx(n) {}
        std::vector<std::size_t> label;
        std::vector<int> idx;
    };

    void check_labels(const BraidWord& w, const std::vector<std::size_t>& labels) const {
        if (static_cast<int>(labels.size()) != w.strands) throw std::invalid_argument("one label per strand required");
        for (auto l : labels)
            if (l >= cat_->rank()) throw std::invalid_argument("anyon index out of range");
        for (auto l : w.letters)
            if (l.generator < 1 || l.generator >= w.strands) throw std::invalid_argument("generator out of range");
    }

    void decode(std::size_t s, const std::vector<std::size_t>& labels, State& st) const {
        for (std::size_t k = labels.size(); k-- > 0;) {
            int d = (*cat_)[labels[k]].qdim;
            st.label[k] = labels[k];
            st.idx[k] = static_cast<int>(s % d);
            s /= d;
        }
    }

    std::size_t encode(const State& st) const {
        std::size_t s = 0;
        for (std::size_t k = 0; k < st.label.size(); ++k) s = s * (*cat_)[st.label[k]].qdim + st.idx[k];
        return s;
    }

    /// Pushes one basis state through the word; returns the accumulated phase exponent.
    int run(const BraidWord& w, State& st) const {
        const auto& G = cat_->group();
        const int N = cat_->root_order();
        long long ph = 0;
        for (auto l : w.letters) {
            const int k = l.generator - 1;
            int left = 0;  // degree of the tensor factor to the left of the crossing
            for (int t = 0; t < k; ++t) left = G.mul(left, (*cat_)[st.label[t]].degree[st.idx[t]]);
            const std::size_t A = st.label[k], B = st.label[k + 1];
            const int v = st.idx[k], wv = st.idx[k + 1];
            const int dv = (*cat_)[A].degree[v], dw = (*cat_)[B].degree[wv];
            int nk, nk1;
            if (l.sign > 0) {
                // v (x) w -> w (x) T^A_{|w|} v
                const auto& T = (*cat_)[A].action[dw];
                nk = wv;
                nk1 = static_cast<int>(T.target[v]);
                ph += T.phase[v];
            } else {
                // inverse of c_{B,A}: v (x) w' -> (T^B_{|v|})^-1 w' (x) v
                const auto& Ti = inverse_action_[B][dv];
                nk = static_cast<int>(Ti.target[wv]);
                nk1 = v;
                ph += Ti.phase[wv];
            }
            st.label[k] = B;
            st.label[k + 1] = A;
            st.idx[k] = nk;
            st.idx[k + 1] = nk1;
            const int ndk = (*cat_)[B].degree[nk], ndk1 = (*cat_)[A].degree[nk1];
            ph += cat_->omega(left, dv, dw) - cat_->omega(left, ndk, ndk1);
        }
        return static_cast<int>(((ph % N) + N) % N);
    }

    const Category* cat_;
    std::vector<std::vector<MonomialOperator>> inverse_action_;
};

/// Invariants of a closed braid indexed by one label per component, first component most significant.
struct InvariantTensor {
    std::string link;
    int u = 0;
    int order = 1;
    std::size_t rank = 0;
    std::vector<CyclotomicInteger> entries;

    std::size_t flat_index(const std::vector<std::size_t>& labels) const {
        std::size_t s = 0;
        for (auto l : labels) s = s * rank + l;
        return s;
    }
    std::vector<std::size_t> labels_of(std::size_t flat) const {
        std::vector<std::size_t> out(order);
        for (int c = order; c-- > 0;) {
            out[c] = flat % rank;
            flat /= rank;
        }
        return out;
    }
    const CyclotomicInteger& at(const std::vector<std::size_t>& labels) const { return entries[flat_index(labels)]; }
};

/// Evaluates every labeling; work is split across `jobs` threads with a fixed slot per entry.
inline InvariantTensor invariant_tensor(const BraidRepresentation& rep, const std::string& link, const BraidWord& w,
                                        unsigned jobs = 1) {
    auto comps = components(w);
    if (comps.size() > 3) throw std::invalid_argument("links with more than three components are out of scope");
    const auto& cat = rep.category();
    InvariantTensor t;
    t.link = link;
    t.u = cat.u();
    t.order = static_cast<int>(comps.size());
    t.rank = cat.rank();
    std::size_t total = 1;
    for (int c = 0; c < t.order; ++c) total *= t.rank;
    t.entries.resize(total);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t f = begin; f < end; ++f) {
            ComponentLabeling lab{t.labels_of(f)};
            t.entries[f] = rep.closure_invariant(w, lab);
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 64) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            std::size_t b = j * chunk, e = std::min(total, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return t;
}

}  // namespace dwlink
