#pragma once

#include <cstdint>
#include <unordered_set>

#include "lanke/permutation.hpp"
#include "lanke/util.hpp"

namespace lanke {

// Preorder encoding of a leaf-labeled plane rooted n-ary tree: byte 0 opens
// an internal node (followed by its n children), any other byte is a leaf
// label.  Unlabeled shapes use 1 for every leaf.
using WordCode = std::vector<std::uint8_t>;
using ShapeCode = std::vector<std::uint8_t>;
using WordCodeHash = VectorHash;

struct WordNode {
    int label = 0;  // leaf label, 0 for internal
    std::vector<WordNode> kids;
    bool is_leaf() const { return kids.empty(); }
};

inline void encode_into(const WordNode& w, WordCode& out) {
    if (w.is_leaf()) {
        out.push_back((std::uint8_t)w.label);
    } else {
        out.push_back(0);
        for (const auto& k : w.kids) encode_into(k, out);
    }
}

inline WordCode encode(const WordNode& w) {
    WordCode c;
    encode_into(w, c);
    return c;
}

inline WordNode decode_at(const WordCode& c, std::size_t& pos, int n) {
    WordNode w;
    if (c[pos] != 0) {
        w.label = c[pos++];
        return w;
    }
    ++pos;
    w.kids.reserve(n);
    for (int i = 0; i < n; ++i) w.kids.push_back(decode_at(c, pos, n));
    return w;
}

inline WordNode decode(const WordCode& c, int n) {
    std::size_t pos = 0;
    return decode_at(c, pos, n);
}

// Signed canonical form: children of every internal node sorted by encoded
// subtree, sign tracking the parity of the sorting permutation.  Two equal
// sibling subtrees make the word vanish (antisymmetry with repeated labels).
struct CanonicalWord {
    WordCode code;
    int sign = 0;  // 0 for the zero word
};

inline CanonicalWord canonicalize(const WordNode& w) {
    if (w.is_leaf()) return {WordCode{(std::uint8_t)w.label}, 1};
    int sign = 1;
    std::vector<WordCode> codes;
    codes.reserve(w.kids.size());
    for (const auto& k : w.kids) {
        CanonicalWord c = canonicalize(k);
        if (c.sign == 0) return {WordCode{}, 0};
        sign *= c.sign;
        codes.push_back(std::move(c.code));
    }
    std::vector<int> order(codes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return codes[a] < codes[b]; });
    std::vector<int> perm(order.begin(), order.end());
    if (num_inversions_parity(perm)) sign = -sign;
    WordCode out;
    out.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && codes[order[i]] == codes[order[i - 1]]) return {WordCode{}, 0};
        out.insert(out.end(), codes[order[i]].begin(), codes[order[i]].end());
    }
    return {out, sign};
}

inline bool is_canonical(const WordCode& c, int n) {
    CanonicalWord cw = canonicalize(decode(c, n));
    return cw.sign == 1 && cw.code == c;
}

// Relabel leaves through sigma (1-based letters) and recanonicalize.
inline void relabel_node(WordNode& w, const Perm& sigma) {
    if (w.is_leaf())
        w.label = apply_letter(sigma, w.label);
    else
        for (auto& k : w.kids) relabel_node(k, sigma);
}

inline CanonicalWord act_word(const Perm& sigma, const WordCode& c, int n) {
    WordNode w = decode(c, n);
    relabel_node(w, sigma);
    return canonicalize(w);
}

inline void collect_labels(const WordNode& w, std::vector<int>& out) {
    if (w.is_leaf())
        out.push_back(w.label);
    else
        for (const auto& k : w.kids) collect_labels(k, out);
}

inline std::vector<int> word_labels(const WordCode& c, int n) {
    std::vector<int> out;
    WordNode w = decode(c, n);
    collect_labels(w, out);
    return out;
}

inline int bracket_count(const WordCode& c) {
    int k = 0;
    for (auto b : c)
        if (b == 0) ++k;
    return k;
}

// A comb nests brackets in one slot only: every internal node has at most
// one internal child, and that child is again a comb.
inline bool is_comb_node(const WordNode& w) {
    if (w.is_leaf()) return true;
    int internal = 0;
    for (const auto& k : w.kids)
        if (!k.is_leaf()) ++internal;
    if (internal > 1) return false;
    for (const auto& k : w.kids)
        if (!k.is_leaf() && !is_comb_node(k)) return false;
    return true;
}

inline bool is_comb(const WordCode& c, int n) { return is_comb_node(decode(c, n)); }

// ---- unlabeled plane shapes ----

inline ShapeCode shape_of(const WordCode& c) {
    ShapeCode s = c;
    for (auto& b : s)
        if (b != 0) b = 1;
    return s;
}

// All plane rooted n-ary trees with k internal nodes (ordered children);
// their number is the Fuss-Catalan number binom(nk,k)/(k(n-1)+1).
inline std::vector<ShapeCode> enumerate_shapes(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("enumerate_shapes: need n >= 2, k >= 1");
    auto rec = [&](auto&& self, int brackets) -> std::vector<ShapeCode> {
        if (brackets == 0) return {ShapeCode{1}};
        std::vector<ShapeCode> out;
        // ordered compositions of brackets-1 among the n children
        std::vector<int> comp(n, 0);
        auto walk = [&](auto&& go, int slot, int left) -> void {
            if (slot == n - 1) {
                comp[slot] = left;
                std::vector<std::vector<ShapeCode>> opts;
                for (int i = 0; i < n; ++i) opts.push_back(self(self, comp[i]));
                std::vector<int> pick(n, 0);
                auto assemble = [&](auto&& rec2, int i, ShapeCode acc) -> void {
                    if (i == n) {
                        out.push_back(acc);
                        return;
                    }
                    for (const auto& sub : opts[i]) {
                        ShapeCode nxt = acc;
                        nxt.insert(nxt.end(), sub.begin(), sub.end());
                        rec2(rec2, i + 1, nxt);
                    }
                };
                assemble(assemble, 0, ShapeCode{0});
                return;
            }
            for (int v = 0; v <= left; ++v) {
                comp[slot] = v;
                go(go, slot + 1, left - v);
            }
        };
        walk(walk, 0, brackets - 1);
        return out;
    };
    return rec(rec, k);
}

inline Int fuss_catalan(int n, int k) { return binomial(n * k, k) / (k * (n - 1) + 1); }

// Canonical representative of a plane shape up to reordering children
// (ties between equal subtrees are fine for unlabeled shapes).
inline ShapeCode shape_canonical(const ShapeCode& shape, int n) {
    WordNode w = decode(shape, n);
    auto rec = [&](auto&& self, const WordNode& node) -> ShapeCode {
        if (node.is_leaf()) return ShapeCode{1};
        std::vector<ShapeCode> codes;
        for (const auto& k : node.kids) codes.push_back(self(self, k));
        std::sort(codes.begin(), codes.end());
        ShapeCode out{0};
        for (const auto& c : codes) out.insert(out.end(), c.begin(), c.end());
        return out;
    };
    return rec(rec, w);
}

inline ShapeCode comb_shape(int n, int k) {
    WordNode w;
    w.kids.assign(n, WordNode{1, {}});
    for (int i = 1; i < k; ++i) {
        WordNode up;
        up.kids.push_back(w);
        for (int j = 1; j < n; ++j) up.kids.push_back(WordNode{1, {}});
        w = up;
    }
    return encode(w);
}

// delta_i = number of leaves at depth i, i = 1..depth of the tree.
inline std::vector<int> depth_vector(const ShapeCode& shape, int n) {
    WordNode w = decode(shape, n);
    std::vector<int> counts;
    auto rec = [&](auto&& self, const WordNode& node, int depth) -> void {
        if (node.is_leaf()) {
            if ((int)counts.size() < depth) counts.resize(depth, 0);
            ++counts[depth - 1];
            return;
        }
        for (const auto& k : node.kids) self(self, k, depth + 1);
    };
    if (w.is_leaf()) return {};
    for (const auto& k : w.kids) rec(rec, k, 1);
    return counts;
}

// mu(a) = number of leaf-children of each internal node, in preorder.
inline std::vector<int> leaf_child_counts(const ShapeCode& shape, int n) {
    WordNode w = decode(shape, n);
    std::vector<int> out;
    auto rec = [&](auto&& self, const WordNode& node) -> void {
        if (node.is_leaf()) return;
        int mu = 0;
        for (const auto& k : node.kids)
            if (k.is_leaf()) ++mu;
        out.push_back(mu);
        for (const auto& k : node.kids) self(self, k);
    };
    rec(rec, w);
    return out;
}

// Increasing: leaf-child counts weakly increase from parent to child along
// internal nodes.
inline bool is_increasing(const ShapeCode& shape, int n) {
    WordNode w = decode(shape, n);
    bool ok = true;
    auto rec = [&](auto&& self, const WordNode& node, int parent_mu) -> void {
        if (node.is_leaf() || !ok) return;
        int mu = 0;
        for (const auto& k : node.kids)
            if (k.is_leaf()) ++mu;
        if (parent_mu > mu) ok = false;
        for (const auto& k : node.kids) self(self, k, mu);
    };
    rec(rec, w, 0);
    return ok;
}

inline bool every_internal_has_leaf_child(const ShapeCode& shape, int n) {
    auto mus = leaf_child_counts(shape, n);
    for (int m : mus)
        if (m == 0) return false;
    return true;
}

// Lexicographic order on depth vectors.
inline bool depth_vector_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- enumeration of canonical words ----

// All canonical (sorted-children) words with k brackets on the given label
// multiset; zero words (equal siblings) are omitted.
inline std::vector<WordCode> enumerate_canonical_words(const std::vector<int>& labels, int n, int k) {
    std::vector<int> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());

    // Recursive helper over label sub-multisets; child bracket counts are
    // taken non-increasing and equal-count blocks ordered to enumerate each
    // unordered children multiset once, with a hash dedupe as backstop.
    struct Helper {
        int n;
        std::vector<WordCode> operator()(const std::vector<int>& lab, int brackets) const {
            std::vector<WordCode> res;
            if (brackets == 0) {
                if (lab.size() == 1) res.push_back(WordCode{(std::uint8_t)lab[0]});
                return res;
            }
            std::unordered_set<WordCode, WordCodeHash> local;
            std::vector<int> counts(n, 0);
            enumerate_counts(lab, brackets, counts, 0, brackets - 1, brackets - 1, res, local);
            return res;
        }

        void enumerate_counts(const std::vector<int>& lab, int brackets, std::vector<int>& counts,
                              int slot, int left, int maxv, std::vector<WordCode>& res,
                              std::unordered_set<WordCode, WordCodeHash>& seen) const {
            if (slot == n) {
                if (left == 0) split_blocks(lab, counts, res, seen);
                return;
            }
            for (int v = std::min(left, maxv); v >= 0; --v) {
                counts[slot] = v;
                enumerate_counts(lab, brackets, counts, slot + 1, left - v, v, res, seen);
            }
        }

        void split_blocks(const std::vector<int>& lab, const std::vector<int>& counts,
                          std::vector<WordCode>& res,
                          std::unordered_set<WordCode, WordCodeHash>& seen) const {
            std::vector<std::vector<int>> blocks(n);
            split_rec(lab, counts, blocks, 0, res, seen);
        }

        void split_rec(std::vector<int> remaining, const std::vector<int>& counts,
                       std::vector<std::vector<int>>& blocks, int bi, std::vector<WordCode>& res,
                       std::unordered_set<WordCode, WordCodeHash>& seen) const {
            if (bi == n) {
                std::vector<std::vector<WordCode>> opts(n);
                for (int i = 0; i < n; ++i) {
                    opts[i] = (*this)(blocks[i], counts[i]);
                    if (opts[i].empty()) return;
                }
                std::vector<const WordCode*> pick(n);
                assemble(opts, pick, 0, res, seen);
                return;
            }
            int size = counts[bi] * (n - 1) + 1;
            std::vector<int> cur;
            choose_block(remaining, size, 0, cur, counts, blocks, bi, res, seen);
        }

        void choose_block(std::vector<int>& remaining, int size, std::size_t from, std::vector<int>& cur,
                          const std::vector<int>& counts, std::vector<std::vector<int>>& blocks, int bi,
                          std::vector<WordCode>& res,
                          std::unordered_set<WordCode, WordCodeHash>& seen) const {
            if ((int)cur.size() == size) {
                if (bi > 0 && counts[bi] == counts[bi - 1] && cur < blocks[bi - 1]) return;
                blocks[bi] = cur;
                split_rec(remaining, counts, blocks, bi + 1, res, seen);
                return;
            }
            for (std::size_t i = from; i < remaining.size(); ++i) {
                if (i > from && remaining[i] == remaining[i - 1]) continue;  // skip equal labels
                int x = remaining[i];
                std::vector<int> rem2 = remaining;
                rem2.erase(rem2.begin() + i);
                cur.push_back(x);
                choose_block(rem2, size, i, cur, counts, blocks, bi, res, seen);
                cur.pop_back();
            }
        }

        void assemble(const std::vector<std::vector<WordCode>>& opts, std::vector<const WordCode*>& pick,
                      int i, std::vector<WordCode>& res,
                      std::unordered_set<WordCode, WordCodeHash>& seen) const {
            if (i == n) {
                WordNode root;
                for (int j = 0; j < n; ++j) {
                    std::size_t pos = 0;
                    root.kids.push_back(decode_at(*pick[j], pos, n));
                }
                CanonicalWord cw = canonicalize(root);
                if (cw.sign != 0 && seen.insert(cw.code).second) res.push_back(cw.code);
                return;
            }
            for (const auto& sub : opts[i]) {
                pick[i] = &sub;
                assemble(opts, pick, i + 1, res, seen);
            }
        }
    };

    Helper h{n};
    std::vector<WordCode> out = h(sorted_labels, k);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- text formats ----

inline std::string word_to_text(const WordCode& c, int n) {
    std::string s;
    auto rec = [&](auto&& self, const WordNode& w) -> void {
        if (w.is_leaf()) {
            s += std::to_string(w.label);
            return;
        }
        s += '[';
        for (std::size_t i = 0; i < w.kids.size(); ++i) {
            if (i) s += ',';
            self(self, w.kids[i]);
        }
        s += ']';
    };
    rec(rec, decode(c, n));
    return s;
}

inline std::string shape_to_text(const ShapeCode& c, int n) {
    std::string s = word_to_text(c, n);
    for (auto& ch : s)
        if (ch == '1') ch = '*';
    return s;
}

// Parses "[[1,2,3],4,5]"; "*" leaves read as label 1 (shape syntax).
inline WordNode parse_word_text(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) throw std::invalid_argument("bad bracket word text");
    WordNode w;
    if (text[pos] == '[') {
        ++pos;
        while (true) {
            w.kids.push_back(parse_word_text(text, pos));
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return w;
            }
            throw std::invalid_argument("bad bracket word text");
        }
    }
    if (text[pos] == '*') {
        ++pos;
        w.label = 1;
        return w;
    }
    std::size_t j = pos;
    while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
    if (j == pos) throw std::invalid_argument("bad bracket word text");
    w.label = std::stoi(text.substr(pos, j - pos));
    pos = j;
    return w;
}

inline WordNode parse_word_text(const std::string& text) {
    std::size_t pos = 0;
    WordNode w = parse_word_text(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in bracket word text");
    return w;
}

}  // namespace lanke
