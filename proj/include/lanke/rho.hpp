#pragma once

#include <chrono>

#include "lanke/module.hpp"
#include "lanke/rewrite.hpp"

namespace lanke {

// Shared combinatorial state of one multilinear component: the interned
// canonical words, the comb basis, and the rewriting engine.
struct RhoCore {
    int n = 0, k = 0;
    int degree = 0;       // the symmetric group acting on the distinct letters
    int fixed_letter = 0; // 0, or the repeated letter left fixed by the action
    WordIntern intern;
    std::unique_ptr<RewriteEngine> rw;
    std::vector<WordCode> words;              // all canonical nonzero words, sorted
    std::vector<Index> ambient;               // word id of each comb basis element
    std::unordered_map<Index, Index> amb_of_wid;

    Index ambient_dim() const { return (Index)ambient.size(); }

    IntRow to_ambient_row(const IntComb& c) const {
        IntRow out;
        out.reserve(c.size());
        for (auto& [wid, co] : c) {
            auto it = amb_of_wid.find(wid);
            if (it == amb_of_wid.end()) throw structural_error("rewrite produced a non-comb word");
            out.push_back({it->second, (long)co});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline std::unique_ptr<RhoCore> make_rho_core(int n, int k, std::vector<int> labels, int degree,
                                              int fixed_letter = 0) {
    auto core = std::make_unique<RhoCore>();
    core->n = n;
    core->k = k;
    core->degree = degree;
    core->fixed_letter = fixed_letter;
    core->rw = std::make_unique<RewriteEngine>(n, core->intern);
    core->words = enumerate_canonical_words(labels, n, k);
    for (const auto& w : core->words) {
        Index wid = core->intern.intern(w);
        if (is_comb(w, n)) {
            core->amb_of_wid[wid] = (Index)core->ambient.size();
            core->ambient.push_back(wid);
        }
    }
    return core;
}

// The component on k(n-1)+1 distinct letters.
inline std::unique_ptr<RhoCore> make_rho_core(int n, int k, int degree_cap = 13) {
    if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2, k >= 1");
    int m = k * (n - 1) + 1;
    if (m > degree_cap)
        throw cap_exceeded("degree " + std::to_string(m) + " exceeds cap " + std::to_string(degree_cap));
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    return make_rho_core(n, k, labels, m);
}

// The component of type 1^{k(n-2)+1} k: letters 1..k(n-2)+1 once each and
// one extra letter repeated k times, fixed by the group action.
inline std::unique_ptr<RhoCore> make_hat_core(int n, int k, int degree_cap = 13) {
    if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2, k >= 1");
    int L = k * (n - 2) + 1;
    if (L > degree_cap) throw cap_exceeded("degree exceeds cap");
    std::vector<int> labels(L);
    std::iota(labels.begin(), labels.end(), 1);
    labels.insert(labels.end(), k, L + 1);
    return make_rho_core(n, k, labels, L, L + 1);
}

inline MonomialAction word_action(const RhoCore& core) {
    return [&core](const Perm& sigma, Index amb_idx) -> std::pair<Index, int> {
        const WordCode& code = core.intern.code(core.ambient[amb_idx]);
        CanonicalWord cw = act_word(sigma, code, core.n);
        if (cw.sign == 0) return {0, 0};
        Index wid = core.intern.find(cw.code);
        auto it = core.amb_of_wid.find(wid);
        if (wid == NO_COL || it == core.amb_of_wid.end())
            throw structural_error("comb basis not closed under the action");
        return {it->second, cw.sign};
    };
}

// Feed every alternative-Jacobi instance of every canonical word, rewritten
// into comb coordinates, to the sinks.  This is the complete contextual
// family: instances at all internal nodes of all words, so the resulting
// span is the full relation subspace in one pass.
inline std::size_t generate_relation_rows(RhoCore& core,
                                          const std::vector<std::function<void(const IntRow&)>>& sinks) {
    std::size_t count = 0;
    for (const auto& w : core.words) {
        jacobi_eq4_instances(w, core.n, core.intern, [&](const IntComb& rel) {
            IntComb combs = core.rw->rewrite_combination(rel);
            IntRow row = core.to_ambient_row(combs);
            if (row.empty()) return;
            ++count;
            for (auto& sink : sinks) sink(row);
        });
    }
    return count;
}

template <class F>
std::unique_ptr<QuotientModule<F>> make_module(const RhoCore& core, F fld) {
    return std::make_unique<QuotientModule<F>>(fld, core.degree, core.ambient_dim(), word_action(core));
}

// How many relation basis rows to spot-check for invariance on large builds.
inline constexpr std::size_t INVARIANCE_SAMPLE_THRESHOLD = 3000;

template <class F>
void finish_module(QuotientModule<F>& mod) {
    if (mod.rank() > INVARIANCE_SAMPLE_THRESHOLD)
        mod.check_invariance(256);
    else
        mod.check_invariance();
    mod.finish();
}

struct RhoAnalysis {
    int n = 0, k = 0, degree = 0;
    Index ambient_dim = 0, rank = 0, quotient_dim = 0;
    std::optional<ClassFunction> character;
    std::optional<Decomposition> decomposition;
    double build_seconds = 0;
};

namespace detail {

inline ClassFunction exact_character(int degree, const std::vector<Rat>& traces) {
    ClassFunction f;
    f.degree = degree;
    f.values = traces;
    return f;
}

}  // namespace detail

// Build the module, optionally with its exact character and decomposition.
// Rational mode is fully exact; multimodular mode runs two primes above
// 2^20 and requires agreement (ranks equal, traces CRT-reconstructed).
inline RhoAnalysis rho_analyze(int n, int k, ArithMode mode, bool want_character,
                               int degree_cap = 13) {
    auto t0 = std::chrono::steady_clock::now();
    auto core = make_rho_core(n, k, degree_cap);
    RhoAnalysis out;
    out.n = n;
    out.k = k;
    out.degree = core->degree;
    out.ambient_dim = core->ambient_dim();

    if (mode == ArithMode::rational) {
        auto mod = make_module(*core, RationalField{});
        generate_relation_rows(*core, {[&](const IntRow& r) { mod->insert_relation(r); }});
        finish_module(*mod);
        out.rank = mod->rank();
        out.quotient_dim = mod->quotient_dim();
        if (want_character) {
            auto traces = mod->character_values();
            out.character = detail::exact_character(core->degree, traces);
            out.decomposition = decompose(*out.character);
        }
    } else {
        auto m1 = make_module(*core, PrimeField{MOD_PRIME_1});
        auto m2 = make_module(*core, PrimeField{MOD_PRIME_2});
        generate_relation_rows(*core, {[&](const IntRow& r) { m1->insert_relation(r); },
                                       [&](const IntRow& r) { m2->insert_relation(r); }});
        if (m1->rank() != m2->rank())
            throw structural_error("multimodular ranks disagree; rerun in rational mode");
        finish_module(*m1);
        finish_module(*m2);
        out.rank = m1->rank();
        out.quotient_dim = m1->quotient_dim();
        if (want_character) {
            auto r1 = m1->character_values();
            auto r2 = m2->character_values();
            out.character = character_from_residues(core->degree, r1, MOD_PRIME_1, r2, MOD_PRIME_2);
            if (out.character->value(Partition(std::vector<int>(core->degree, 1))) !=
                Rat((long)out.quotient_dim))
                throw structural_error("reconstructed character degree mismatch");
            out.decomposition = decompose(*out.character);
        }
    }
    out.build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

inline Decomposition rho_decompose(int n, int k, ArithMode mode, int degree_cap = 13) {
    if (n == 1) {  // one letter, one leaf: the trivial module S^1
        Decomposition d;
        d.degree = 1;
        d.add(Partition{1}, 1);
        return d;
    }
    auto a = rho_analyze(n, k, mode, true, degree_cap);
    return *a.decomposition;
}

// dim rho_{n,3} by the closed dimension formula of the k=3 decomposition.
inline Int rho_n3_dimension_formula(int n) {
    Int num = 4 * factorial(3 * n);
    Int den = factorial(n) * factorial(n) * factorial(n);
    den *= (n + 1);
    den *= (n + 2);
    den *= (n + 3);
    return num / den;
}

// beta: add a top row of length k to every diagram of rho_{n-1,k};
// gamma: the remainder, which must be nonnegative with at most k-1 columns.
inline std::pair<Decomposition, Decomposition> beta_gamma(int n, int k, ArithMode mode,
                                                          int degree_cap = 13) {
    Decomposition rho_n = rho_decompose(n, k, mode, degree_cap);
    Decomposition rho_prev = rho_decompose(n - 1, k, mode, degree_cap);
    Decomposition beta = rho_prev.with_top_row(k);
    Decomposition gamma;
    gamma.degree = rho_n.degree;
    for (auto& [p, c] : rho_n.mult) gamma.add(p, c);
    for (auto& [p, c] : beta.mult) {
        gamma.add(p, -c);
        if (gamma.multiplicity(p) < 0)
            throw structural_error("beta multiplicities exceed rho: contradiction at (" + p.to_string() +
                                   ")");
    }
    for (auto& [p, c] : gamma.mult)
        if (p.num_columns() > k - 1)
            throw structural_error("gamma contains a diagram with more than k-1 columns");
    return {beta, gamma};
}

// ---- submodule machinery ----

template <class F>
struct RhoModel {
    std::unique_ptr<RhoCore> core;
    std::unique_ptr<QuotientModule<F>> module;
};

template <class F>
RhoModel<F> build_rho_model(int n, int k, F fld, int degree_cap = 13) {
    RhoModel<F> m;
    m.core = make_rho_core(n, k, degree_cap);
    m.module = make_module(*m.core, fld);
    generate_relation_rows(*m.core, {[&](const IntRow& r) { m.module->insert_relation(r); }});
    finish_module(*m.module);
    return m;
}

// Span, inside the quotient, of the images of a set of canonical words.
template <class F>
SubmoduleSpan<F> span_of_words(const RhoModel<F>& model, const std::vector<WordCode>& gens) {
    SubmoduleSpan<F> span(*model.module);
    for (const auto& w : gens) {
        Index wid = model.core->intern.find(w);
        const IntComb& combs = model.core->rw->rewrite(wid);
        IntRow row;
        for (auto& [cid, c] : combs) row.push_back({model.core->amb_of_wid.at(cid), (long)c});
        std::sort(row.begin(), row.end());
        span.add_ambient_generator(row);
    }
    return span;
}

template <class F>
std::vector<WordCode> noncomb_words(const RhoModel<F>& model) {
    std::vector<WordCode> out;
    for (const auto& w : model.core->words)
        if (!is_comb(w, model.core->n)) out.push_back(w);
    return out;
}

// Words whose (plane) shape reorders to the given one.
template <class F>
std::vector<WordCode> words_of_shape(const RhoModel<F>& model, const ShapeCode& T) {
    ShapeCode target = shape_canonical(T, model.core->n);
    std::vector<WordCode> out;
    for (const auto& w : model.core->words)
        if (shape_canonical(shape_of(w), model.core->n) == target) out.push_back(w);
    return out;
}

// Words whose shape has depth vector lexicographically below delta(T).
template <class F>
std::vector<WordCode> words_below_shape(const RhoModel<F>& model, const ShapeCode& T) {
    auto dT = depth_vector(T, model.core->n);
    std::vector<WordCode> out;
    for (const auto& w : model.core->words)
        if (depth_vector_less(depth_vector(shape_of(w), model.core->n), dT)) out.push_back(w);
    return out;
}

}  // namespace lanke
