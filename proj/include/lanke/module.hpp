#pragma once

#include <functional>
#include <optional>

#include "lanke/characters.hpp"
#include "lanke/linalg.hpp"

namespace lanke {

// A permutation sends a basis symbol to +/- another basis symbol (or kills
// it, for bases with repeated letters).
using MonomialAction = std::function<std::pair<Index, int>(const Perm&, Index)>;

// Concrete S_m-module: a free span of interned basis symbols modulo a
// relation subspace, with a monomial permutation action on the symbols.
template <class F>
class QuotientModule {
  public:
    QuotientModule(F fld, int degree, Index ambient, MonomialAction act)
        : fld_(fld), degree_(degree), ambient_(ambient), act_(std::move(act)), rel_(fld_, ambient) {}

    const F& field() const { return fld_; }
    int degree() const { return degree_; }
    Index ambient_dim() const { return ambient_; }
    Echelon<F>& relations() { return rel_; }
    const Echelon<F>& relations() const { return rel_; }
    Index rank() const { return rel_.rank(); }
    Index quotient_dim() const { return ambient_ - rel_.rank(); }

    bool insert_relation(const IntRow& row) { return rel_.insert(row_from_ints(fld_, row)); }

    // Relation subspaces must be invariant under the group action; checked
    // on adjacent transpositions, over a sampled subset of basis rows when
    // sample_cap is set (large instances).
    void check_invariance(std::optional<std::size_t> sample_cap = std::nullopt) const {
        const auto& rows = rel_.rows();
        std::size_t step = 1;
        if (sample_cap && rows.size() > *sample_cap) step = rows.size() / *sample_cap;
        for (int i = 0; i + 1 < degree_; ++i) {
            Perm s = transposition(degree_, i, i + 1);
            for (std::size_t r = 0; r < rows.size(); r += step) {
                SparseVec<F> img = apply_to_vec(s, rows[r]);
                if (!rel_.contains(img))
                    throw structural_error("relation subspace not invariant under adjacent transposition " +
                                           std::to_string(i + 1));
            }
        }
    }

    // Image of an ambient vector under sigma.
    SparseVec<F> apply_to_vec(const Perm& sigma, const SparseVec<F>& v) const {
        SparseVec<F> out;
        out.terms.reserve(v.terms.size());
        for (auto& [i, e] : v.terms) {
            auto [j, s] = act_(sigma, i);
            if (s == 0) continue;
            out.terms.push_back({j, s < 0 ? fld_.neg(e) : e});
        }
        std::sort(out.terms.begin(), out.terms.end());
        // merge duplicates (cannot occur for a bijective monomial action)
        SparseVec<F> merged;
        for (auto& t : out.terms) {
            if (!merged.terms.empty() && merged.terms.back().first == t.first)
                merged.terms.back().second = fld_.add(merged.terms.back().second, t.second);
            else
                merged.terms.push_back(t);
        }
        merged.terms.erase(std::remove_if(merged.terms.begin(), merged.terms.end(),
                                          [&](auto& t) { return fld_.is_zero(t.second); }),
                           merged.terms.end());
        return merged;
    }

    void finish() {
        if (!nfs_) nfs_ = rel_.normal_forms();
    }

    const typename Echelon<F>::NormalForms& nfs() const {
        if (!nfs_) throw structural_error("module not finished");
        return *nfs_;
    }

    // Trace of sigma acting on the quotient.
    typename F::Elem trace(const Perm& sigma) const {
        const auto& n = nfs();
        auto acc = fld_.zero();
        for (Index jq = 0; jq < n.qdim(); ++jq) {
            Index j = n.nonpivot[jq];
            auto [j2, s] = act_(sigma, j);
            if (s == 0) continue;
            typename F::Elem coeff;
            if (n.col_to_quot[j2] != NO_COL) {
                if (j2 != j) continue;
                coeff = fld_.one();
            } else {
                coeff = n.nf[row_of(j2)][jq];
                if constexpr (F::prime_field) coeff %= fld_.p;
            }
            acc = s < 0 ? fld_.sub(acc, coeff) : fld_.add(acc, coeff);
        }
        return acc;
    }

    // Trace on each conjugacy class, in character-table order.
    std::vector<typename F::Elem> character_values() const {
        const auto& T = CharacterTable::of(degree_);
        std::vector<typename F::Elem> out;
        for (const auto& mu : T.parts()) out.push_back(trace(class_representative(mu.parts())));
        return out;
    }

    // Quotient coordinates of an ambient integer vector.
    SparseVec<F> to_quotient(const IntRow& ambient_vec) const {
        const auto& n = nfs();
        SparseVec<F> red = rel_.reduce(row_from_ints(fld_, ambient_vec));
        SparseVec<F> out;
        for (auto& [c, e] : red.terms) out.terms.push_back({n.col_to_quot[c], e});
        return out;
    }

    // Image of a quotient-coordinate vector under sigma, densely accumulated.
    SparseVec<F> apply_on_quotient(const Perm& sigma, const SparseVec<F>& v) const {
        const auto& n = nfs();
        std::vector<typename F::Elem> dense(n.qdim(), fld_.zero());
        for (auto& [jq, e] : v.terms) {
            auto [j2, s] = act_(sigma, n.nonpivot[jq]);
            if (s == 0) continue;
            auto val = s < 0 ? fld_.neg(e) : e;
            if (n.col_to_quot[j2] != NO_COL) {
                Index t = n.col_to_quot[j2];
                dense[t] = fld_.add(dense[t], val);
            } else {
                const auto& nf = n.nf[row_of(j2)];
                for (Index t = 0; t < n.qdim(); ++t)
                    if (!fld_.is_zero(nf[t])) dense[t] = fld_.add(dense[t], fld_.mul(val, nf[t]));
            }
        }
        SparseVec<F> out;
        for (Index t = 0; t < n.qdim(); ++t)
            if (!fld_.is_zero(dense[t])) out.terms.push_back({t, dense[t]});
        return out;
    }

    // Sparse matrix of sigma on the quotient; rows[j] is the image of basis
    // vector j (column convention of induced_action_on_quotient).
    SparseMatrix<F> quotient_action_matrix(const Perm& sigma) const {
        const auto& n = nfs();
        SparseMatrix<F> m;
        m.ncols = n.qdim();
        m.rows.resize(n.qdim());
        for (Index jq = 0; jq < n.qdim(); ++jq) {
            SparseVec<F> unit;
            unit.terms.push_back({jq, fld_.one()});
            m.rows[jq] = apply_on_quotient(sigma, unit);
        }
        return m;
    }

  private:
    F fld_;
    int degree_;
    Index ambient_;
    MonomialAction act_;
    Echelon<F> rel_;
    std::optional<typename Echelon<F>::NormalForms> nfs_;

    int row_of(Index pivot_col) const {
        int r = rel_.row_index_of_pivot(pivot_col);
        if (r < 0) throw structural_error("pivot column lookup failed");
        return r;
    }
};

// A submodule of a quotient module, spanned inside quotient coordinates.
template <class F>
class SubmoduleSpan {
  public:
    SubmoduleSpan(const QuotientModule<F>& parent) : parent_(parent), ech_(parent.field(), parent.nfs().qdim()) {}

    void add_ambient_generator(const IntRow& v) { ech_.insert(parent_.to_quotient(v)); }
    void add_quotient_generator(const SparseVec<F>& v) { ech_.insert(v); }

    Index dim() const { return ech_.rank(); }
    const Echelon<F>& echelon() const { return ech_; }

    // Trace of sigma restricted to the span (which must be invariant).
    typename F::Elem trace(const Perm& sigma) const {
        const F& fld = parent_.field();
        auto acc = fld.zero();
        const auto& rows = ech_.rows();
        const auto& pivots = ech_.pivots();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            SparseVec<F> img = parent_.apply_on_quotient(sigma, rows[r]);
            // forward-reduce img against the span basis, recording the
            // multiplier used at this row's own pivot
            auto coeffs = reduce_with_coeffs(img);
            if (!coeffs.second.empty())
                throw structural_error("span is not invariant under the group action");
            acc = fld.add(acc, coeffs.first[r]);
        }
        return acc;
    }

    std::vector<typename F::Elem> character_values() const {
        const auto& T = CharacterTable::of(parent_.degree());
        std::vector<typename F::Elem> out;
        for (const auto& mu : T.parts()) out.push_back(trace(class_representative(mu.parts())));
        return out;
    }

  private:
    const QuotientModule<F>& parent_;
    Echelon<F> ech_;

    // Express v in the row basis; returns (coefficients per row, remainder).
    std::pair<std::vector<typename F::Elem>, std::vector<std::pair<Index, typename F::Elem>>>
    reduce_with_coeffs(const SparseVec<F>& v) const {
        const F& fld = parent_.field();
        const auto& rows = ech_.rows();
        const auto& pivots = ech_.pivots();
        std::vector<typename F::Elem> coeffs(rows.size(), fld.zero());
        // dense workspace over quotient coords
        std::map<Index, typename F::Elem> ws;
        for (auto& [i, e] : v.terms) ws[i] = e;
        std::map<Index, std::size_t> row_of_pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of_pivot[pivots[r]] = r;
        while (true) {
            // leftmost nonzero pivot coordinate
            auto it = ws.begin();
            while (it != ws.end() && fld.is_zero(it->second)) it = ws.erase(it);
            if (it == ws.end()) break;
            auto rp = row_of_pivot.find(it->first);
            if (rp == row_of_pivot.end()) break;
            auto c = it->second;
            coeffs[rp->second] = c;
            for (auto& [i, e] : rows[rp->second].terms) {
                auto& slot = ws[i];
                slot = fld.sub(slot, fld.mul(c, e));
            }
        }
        std::vector<std::pair<Index, typename F::Elem>> rem;
        for (auto& [i, e] : ws)
            if (!fld.is_zero(e)) rem.push_back({i, e});
        return {coeffs, rem};
    }
};

// Reconstruction of exact integer character values from two prime-field runs.
inline ClassFunction character_from_residues(int degree, const std::vector<std::uint64_t>& r1,
                                             std::uint64_t p1, const std::vector<std::uint64_t>& r2,
                                             std::uint64_t p2) {
    ClassFunction f;
    f.degree = degree;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        Int v = crt_balanced(r1[i] % p1, p1, r2[i] % p2, p2);
        f.values.push_back(Rat(v));
    }
    return f;
}

}  // namespace lanke
