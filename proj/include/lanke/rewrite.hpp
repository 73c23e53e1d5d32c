#pragma once

#include <deque>
#include <map>
#include <mutex>

#include "lanke/bracket.hpp"
#include "lanke/linalg.hpp"

namespace lanke {

// Dense integer handles for canonical words; insert-or-get is safe for
// concurrent callers, lookups of existing ids are lock-free reads of a
// stable deque.
class WordIntern {
  public:
    Index intern(const WordCode& c) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = idx_.find(c);
        if (it != idx_.end()) return it->second;
        Index id = (Index)codes_.size();
        codes_.push_back(c);
        idx_.emplace(codes_.back(), id);
        return id;
    }

    // Id of an already-interned word, or NO_COL.
    Index find(const WordCode& c) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = idx_.find(c);
        return it == idx_.end() ? NO_COL : it->second;
    }

    const WordCode& code(Index id) const { return codes_[id]; }
    std::size_t size() const { return codes_.size(); }

  private:
    mutable std::mutex mu_;
    std::unordered_map<WordCode, Index, WordCodeHash> idx_;
    std::deque<WordCode> codes_;
};

// Integer combination of interned words, sorted by id.
using IntComb = std::vector<std::pair<Index, long long>>;

inline void comb_add(IntComb& acc, Index id, long long coeff) {
    acc.push_back({id, coeff});
}

inline void comb_normalize(IntComb& c) {
    std::sort(c.begin(), c.end());
    IntComb out;
    for (auto& [id, co] : c) {
        if (!out.empty() && out.back().first == id)
            out.back().second += co;
        else
            out.push_back({id, co});
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](auto& t) { return t.second == 0; }), out.end());
    c = std::move(out);
}

// The exact rational combination type used by the public operations.
using WordCombination = std::map<WordCode, Rat>;

// ---- generalized Jacobi instances ----

// One instance: the relation LHS - sum(RHS) as a signed combination of
// canonical words; every instance sums to zero in the algebra quotient.
struct JacobiVisitor {
    std::function<void(const IntComb&)> emit;
};

namespace detail {

// Parity of the permutation that moves positions idx (and jdx, when >= 0)
// of 0..n-1 to the front, keeping the rest in order.
inline int front_move_sign(int n, int idx, int jdx) {
    std::vector<int> perm;
    perm.push_back(idx);
    if (jdx >= 0) perm.push_back(jdx);
    for (int i = 0; i < n; ++i)
        if (i != idx && i != jdx) perm.push_back(i);
    return num_inversions_parity(perm) ? -1 : 1;
}

template <class ModifyFn>
inline void for_each_internal_node(WordNode& root, ModifyFn&& fn) {
    // fn(node) for every internal node; node may be temporarily modified
    if (root.is_leaf()) return;
    fn(root);
    for (auto& k : root.kids) for_each_internal_node(k, fn);
}

}  // namespace detail

// Alternative generalized Jacobi relation applied at every internal node
// with an internal child, for every choice of the distinguished sibling:
//   [[x_1..x_n], y_1, .., y_{n-1}] = sum_i [[x_1..y_1..x_n], x_i, y_2..y_{n-1}]
inline void jacobi_eq4_instances(const WordCode& w, int n, WordIntern& intern,
                                 const std::function<void(const IntComb&)>& emit) {
    WordNode root = decode(w, n);
    Index wid = intern.intern(w);
    detail::for_each_internal_node(root, [&](WordNode& a) {
        for (int idx = 0; idx < n; ++idx) {
            if (a.kids[idx].is_leaf()) continue;
            for (int jdx = 0; jdx < n; ++jdx) {
                if (jdx == idx) continue;
                int eps = detail::front_move_sign(n, idx, jdx);
                IntComb rel;
                comb_add(rel, wid, 1);
                WordNode inner = a.kids[idx];
                WordNode y1 = a.kids[jdx];
                for (int i = 0; i < n; ++i) {
                    // children of a become (inner with slot i := y1, inner.kids[i], rest)
                    std::vector<WordNode> saved = a.kids;
                    WordNode modified = inner;
                    modified.kids[i] = y1;
                    a.kids[idx] = modified;
                    a.kids[jdx] = inner.kids[i];
                    CanonicalWord cw = canonicalize(root);
                    a.kids = std::move(saved);
                    if (cw.sign == 0) continue;
                    comb_add(rel, intern.intern(cw.code), -(long long)eps * cw.sign);
                }
                comb_normalize(rel);
                if (!rel.empty()) emit(rel);
            }
        }
    });
}

// Original generalized Jacobi relation at every internal node with an
// internal child:
//   [[x_1..x_n], v_1..v_{n-1}] = sum_i [x_1..x_{i-1}, [x_i, v_1..v_{n-1}], x_{i+1}..x_n]
inline void jacobi_eq2_instances(const WordCode& w, int n, WordIntern& intern,
                                 const std::function<void(const IntComb&)>& emit) {
    WordNode root = decode(w, n);
    Index wid = intern.intern(w);
    detail::for_each_internal_node(root, [&](WordNode& a) {
        for (int idx = 0; idx < n; ++idx) {
            if (a.kids[idx].is_leaf()) continue;
            int eps = detail::front_move_sign(n, idx, -1);
            IntComb rel;
            comb_add(rel, wid, 1);
            WordNode inner = a.kids[idx];
            std::vector<WordNode> rest;
            for (int j = 0; j < n; ++j)
                if (j != idx) rest.push_back(a.kids[j]);
            for (int i = 0; i < n; ++i) {
                // term i: outer children are inner's kids with slot i
                // replaced by [inner.kids[i], v_1..v_{n-1}]
                WordNode m;
                m.kids.push_back(inner.kids[i]);
                for (auto& v : rest) m.kids.push_back(v);
                std::vector<WordNode> saved = a.kids;
                a.kids = inner.kids;
                a.kids[i] = m;
                CanonicalWord cw = canonicalize(root);
                a.kids = std::move(saved);
                if (cw.sign == 0) continue;
                comb_add(rel, intern.intern(cw.code), -(long long)eps * cw.sign);
            }
            comb_normalize(rel);
            if (!rel.empty()) emit(rel);
        }
    });
}

// ---- rewriting to combs ----

// Rewrites words into comb combinations, congruent modulo the generalized
// Jacobi relations: a word with a single internal child recurses into it;
// otherwise one alternative-Jacobi application strictly raises the maximal
// child bracket count, so the recursion terminates.  Results are memoized
// per interned word.
class RewriteEngine {
  public:
    RewriteEngine(int n, WordIntern& intern) : n_(n), intern_(intern) {}

    const IntComb& rewrite(Index wid) {
        auto it = memo_.find(wid);
        if (it != memo_.end()) return it->second;
        IntComb result = compute(wid);
        return memo_.emplace(wid, std::move(result)).first->second;
    }

    IntComb rewrite_combination(const IntComb& in) {
        IntComb acc;
        for (auto& [wid, c] : in) {
            const IntComb& rw = rewrite(wid);
            for (auto& [cw, cc] : rw) {
                long long prod = c * cc;
                comb_add(acc, cw, prod);
            }
        }
        comb_normalize(acc);
        return acc;
    }

    std::size_t memo_size() const { return memo_.size(); }

  private:
    int n_;
    WordIntern& intern_;
    std::unordered_map<Index, IntComb> memo_;

    IntComb compute(Index wid) {
        const WordCode code = intern_.code(wid);
        WordNode w = decode(code, n_);
        if (is_comb_node(w)) return {{wid, 1}};

        std::vector<int> internals;
        for (int i = 0; i < n_; ++i)
            if (!w.kids[i].is_leaf()) internals.push_back(i);

        IntComb acc;
        if (internals.size() == 1) {
            int idx = internals[0];
            Index sub = intern_.intern(encode(w.kids[idx]));
            IntComb subcombs = rewrite(sub);
            for (auto& [cid, c] : subcombs) {
                WordNode t = w;
                t.kids[idx] = decode(intern_.code(cid), n_);
                CanonicalWord cw = canonicalize(t);
                if (cw.sign == 0) continue;
                comb_add(acc, intern_.intern(cw.code), c * cw.sign);
            }
        } else {
            // pick the internal children with the fewest and most brackets
            int idx = internals[0], jdx = internals[0];
            int bmin = 1 << 30, bmax = -1;
            for (int i : internals) {
                int b = 0;
                WordCode sub = encode(w.kids[i]);
                for (auto byte : sub)
                    if (byte == 0) ++b;
                if (b < bmin) bmin = b, idx = i;
                if (b > bmax) bmax = b, jdx = i;
            }
            if (idx == jdx) jdx = internals[1];
            int eps = detail::front_move_sign(n_, idx, jdx);
            WordNode inner = w.kids[idx];
            WordNode y1 = w.kids[jdx];
            for (int i = 0; i < n_; ++i) {
                WordNode t = w;
                WordNode modified = inner;
                modified.kids[i] = y1;
                t.kids[idx] = modified;
                t.kids[jdx] = inner.kids[i];
                CanonicalWord cw = canonicalize(t);
                if (cw.sign == 0) continue;
                Index tid = intern_.intern(cw.code);
                IntComb sub = rewrite(tid);
                for (auto& [cid, c] : sub) comb_add(acc, cid, (long long)eps * cw.sign * c);
            }
        }
        comb_normalize(acc);
        for (auto& [cid, c] : acc)
            if (c > (1LL << 56) || c < -(1LL << 56)) throw structural_error("rewrite coefficient overflow");
        return acc;
    }
};

// Public form of the rewriting map, as exact rational combinations.
inline WordCombination comb_rewrite(const WordCode& word, int n, WordIntern& intern, RewriteEngine& rw) {
    CanonicalWord cw = canonicalize(decode(word, n));
    WordCombination out;
    if (cw.sign == 0) return out;
    const IntComb& combs = rw.rewrite(intern.intern(cw.code));
    for (auto& [cid, c] : combs) out[intern.code(cid)] = Rat((long)(cw.sign * c));
    return out;
}

}  // namespace lanke
