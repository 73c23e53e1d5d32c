#pragma once

#include <cassert>
#include <cstdint>
#include <sstream>

#include "lanke/util.hpp"

namespace lanke {

using Index = std::uint32_t;
inline constexpr Index NO_COL = ~Index(0);

struct RationalField {
    using Elem = Rat;
    static constexpr bool prime_field = false;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_long(long v) const { return Rat(v); }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Rat(1) / a; }
    std::string to_string(const Elem& e) const { return rat_to_string(e); }
};

// Z/p for a prime p; p must stay below 2^21 so that lazy accumulation of
// a*b products in 64-bit workspaces cannot overflow within one sweep.
struct PrimeField {
    std::uint64_t p;
    using Elem = std::uint64_t;
    static constexpr bool prime_field = true;
    explicit PrimeField(std::uint64_t prime) : p(prime) { assert(p > 1 && p < (1ULL << 21)); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long v) const {
        long r = v % (long)p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(const Elem& e) const { return e % p == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
    Elem mul(Elem a, Elem b) const { return (a % p) * (b % p) % p; }
    Elem neg(Elem a) const { return (p - a % p) % p; }
    Elem inv(Elem a) const {  // p is prime
        Elem r = 1, base = a % p;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }
    std::string to_string(const Elem& e) const { return std::to_string(e % p); }
};

// Sorted-by-index sparse vector with no explicit zeros.
template <class F>
struct SparseVec {
    std::vector<std::pair<Index, typename F::Elem>> terms;
    bool empty() const { return terms.empty(); }
    std::size_t nnz() const { return terms.size(); }
};

template <class F>
struct SparseMatrix {
    Index ncols = 0;
    std::vector<SparseVec<F>> rows;
};

// Integer relation row, field-independent; instantiated per field.
using IntRow = std::vector<std::pair<Index, long>>;

template <class F>
SparseVec<F> row_from_ints(const F& fld, const IntRow& r) {
    SparseVec<F> v;
    v.terms.reserve(r.size());
    for (auto& [i, c] : r) {
        auto e = fld.from_long(c);
        if (!fld.is_zero(e)) v.terms.push_back({i, e});
    }
    return v;
}

// Reduced row-echelon basis of a subspace, rows sorted by pivot column.
template <class F>
struct Subspace {
    Index ncols = 0;
    std::vector<SparseVec<F>> basis;  // row i monic with pivot pivots[i]; tails avoid all pivots
    std::vector<Index> pivots;
    Index rank() const { return (Index)basis.size(); }
};

// Incremental row echelonization.  Stored rows are monic at their leading
// (pivot) column and forward-reduced at insertion time; later pivots may
// still occur in earlier tails, which the normal-form pass resolves.
template <class F>
class Echelon {
  public:
    Echelon(const F& fld, Index ncols) : fld_(fld), ncols_(ncols), row_of_col_(ncols, -1) {
        ws_.resize(ncols, fld_.zero());
    }

    const F& field() const { return fld_; }
    Index ncols() const { return ncols_; }
    Index rank() const { return (Index)rows_.size(); }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivot_of_row_; }
    bool is_pivot(Index c) const { return row_of_col_[c] >= 0; }
    int row_index_of_pivot(Index c) const { return row_of_col_[c]; }

    // Reduce v against the current basis and adjoin the remainder if nonzero.
    // Returns true when the rank grew.
    bool insert(const SparseVec<F>& v) {
        load(v);
        Index piv = sweep(0);
        if (piv == NO_COL) {
            clear_ws();
            return false;
        }
        SparseVec<F> row;
        auto lead_inv = fld_.inv(value_at(piv));
        row.terms.push_back({piv, fld_.one()});
        for (Index c : touched_)
            if (c > piv) {
                auto val = value_at(c);
                if (!fld_.is_zero(val)) row.terms.push_back({c, fld_.mul(val, lead_inv)});
            }
        std::sort(row.terms.begin(), row.terms.end());
        clear_ws();
        row_of_col_[piv] = (int)rows_.size();
        pivot_of_row_.push_back(piv);
        rows_.push_back(std::move(row));
        return true;
    }

    // Fully forward-reduce v; the result has no pivot coordinates.
    SparseVec<F> reduce(const SparseVec<F>& v) const {
        load(v);
        sweep(1);
        SparseVec<F> out;
        for (Index c : touched_) {
            auto val = value_at(c);
            if (!fld_.is_zero(val)) out.terms.push_back({c, val});
        }
        std::sort(out.terms.begin(), out.terms.end());
        clear_ws();
        return out;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  private:
    const F& fld_;
    Index ncols_;
    std::vector<SparseVec<F>> rows_;
    std::vector<Index> pivot_of_row_;
    std::vector<int> row_of_col_;
    mutable std::vector<typename F::Elem> ws_;
    mutable std::vector<Index> touched_;
    mutable std::vector<bool> is_touched_ = std::vector<bool>();
    mutable Index first_ = 0;  // leftmost touched column of the current sweep

    void ensure_flags() const {
        if (is_touched_.empty()) is_touched_.assign(ncols_, false);
    }

    void touch(Index c) const {
        if (!is_touched_[c]) {
            is_touched_[c] = true;
            touched_.push_back(c);
        }
    }

    void load(const SparseVec<F>& v) const {
        ensure_flags();
        first_ = ncols_;
        for (auto& [i, e] : v.terms) {
            touch(i);
            ws_[i] = fld_.add(ws_[i], e);
            first_ = std::min(first_, i);
        }
    }

    typename F::Elem value_at(Index c) const { return normalized(ws_[c]); }

    typename F::Elem normalized(const typename F::Elem& e) const {
        if constexpr (F::prime_field)
            return e % fld_.p;
        else
            return e;
    }

    void clear_ws() const {
        for (Index c : touched_) ws_[c] = fld_.zero();
        for (Index c : touched_) is_touched_[c] = false;
        touched_.clear();
    }

    // Scan columns left to right, eliminating every pivot coordinate; all
    // fill-in lands strictly to the right of the column being processed.
    // When mode == 0, stop at the first non-pivot nonzero column and return
    // it (the new pivot); when mode == 1, keep eliminating to the end.
    Index sweep(int mode) const {
        Index result = NO_COL;
        for (Index c = first_; c < ncols_; ++c) {
            if (!is_touched_[c]) continue;
            auto val = value_at(c);
            if (fld_.is_zero(val)) continue;
            int r = row_of_col_[c];
            if (r < 0) {
                if (mode == 0) return c;
                if (result == NO_COL) result = c;
                continue;
            }
            eliminate(c, val, rows_[r]);
        }
        return result;
    }

    // ws -= val * row (row monic at its pivot c).
    void eliminate(Index c, const typename F::Elem& val, const SparseVec<F>& row) const {
        if constexpr (F::prime_field) {
            std::uint64_t coef = fld_.p - val % fld_.p;  // add coef*row == subtract val*row
            for (auto& [i, e] : row.terms) {
                touch(i);
                ws_[i] += coef * e;  // lazy: p < 2^21 keeps this overflow-safe
            }
            ws_[c] = 0;
        } else {
            for (auto& [i, e] : row.terms) {
                touch(i);
                ws_[i] = fld_.sub(ws_[i], fld_.mul(val, e));
            }
        }
    }

  public:
    // Dense normal forms of the pivot columns over the non-pivot columns:
    // e_pivot is congruent, modulo the row space, to a unique combination of
    // non-pivot basis vectors.
    struct NormalForms {
        std::vector<Index> nonpivot;           // sorted
        std::vector<Index> col_to_quot;        // ncols, NO_COL for pivots
        std::vector<std::vector<typename F::Elem>> nf;  // indexed by row, length |nonpivot|
        Index qdim() const { return (Index)nonpivot.size(); }
    };

    NormalForms normal_forms() const {
        NormalForms out;
        out.col_to_quot.assign(ncols_, NO_COL);
        for (Index c = 0; c < ncols_; ++c)
            if (row_of_col_[c] < 0) {
                out.col_to_quot[c] = (Index)out.nonpivot.size();
                out.nonpivot.push_back(c);
            }
        Index q = (Index)out.nonpivot.size();
        out.nf.assign(rows_.size(), {});
        // process pivots in decreasing column order; tails only reference
        // larger columns, so every needed normal form is already built
        std::vector<Index> order(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = (Index)i;
        std::sort(order.begin(), order.end(),
                  [&](Index a, Index b) { return pivot_of_row_[a] > pivot_of_row_[b]; });
        for (Index r : order) {
            std::vector<typename F::Elem> acc(q, fld_.zero());
            for (auto& [i, e] : rows_[r].terms) {
                if (i == pivot_of_row_[r]) continue;
                if (out.col_to_quot[i] != NO_COL) {
                    Index j = out.col_to_quot[i];
                    acc[j] = fld_.sub(acc[j], e);
                } else {
                    // e_i for a pivot column expands to its own normal form
                    const auto& sub = out.nf[row_of_col_[i]];
                    if constexpr (F::prime_field) {
                        std::uint64_t coef = fld_.p - e % fld_.p;
                        if (coef == fld_.p) continue;
                        for (Index j = 0; j < q; ++j) acc[j] = (acc[j] + coef * (sub[j] % fld_.p)) % fld_.p;
                    } else {
                        for (Index j = 0; j < q; ++j)
                            if (!fld_.is_zero(sub[j])) acc[j] = fld_.sub(acc[j], fld_.mul(e, sub[j]));
                    }
                }
            }
            out.nf[r] = std::move(acc);
        }
        return out;
    }

    // Reduced row-echelon basis (tails cleared of all pivots), sorted by pivot.
    Subspace<F> to_subspace() const {
        auto nfs = normal_forms();
        Subspace<F> s;
        s.ncols = ncols_;
        std::vector<Index> order(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = (Index)i;
        std::sort(order.begin(), order.end(),
                  [&](Index a, Index b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
        for (Index r : order) {
            SparseVec<F> row;
            row.terms.push_back({pivot_of_row_[r], fld_.one()});
            for (Index j = 0; j < nfs.qdim(); ++j) {
                auto v = normalized(nfs.nf[r][j]);
                if (!fld_.is_zero(v)) row.terms.push_back({nfs.nonpivot[j], fld_.neg(v)});
            }
            std::sort(row.terms.begin(), row.terms.end());
            s.pivots.push_back(pivot_of_row_[r]);
            s.basis.push_back(std::move(row));
        }
        return s;
    }
};

template <class F>
Subspace<F> echelonize(const F& fld, const SparseMatrix<F>& m) {
    Echelon<F> e(fld, m.ncols);
    for (const auto& r : m.rows) e.insert(r);
    return e.to_subspace();
}

inline Index quotient_dimension(Index ambient_dim, Index relation_rank) {
    if (relation_rank > ambient_dim) throw structural_error("relation rank exceeds ambient dimension");
    return ambient_dim - relation_rank;
}

template <class F>
typename F::Elem dot(const F& fld, const SparseVec<F>& a, const SparseVec<F>& b) {
    auto it = a.terms.begin();
    auto jt = b.terms.begin();
    auto acc = fld.zero();
    while (it != a.terms.end() && jt != b.terms.end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            acc = fld.add(acc, fld.mul(it->second, jt->second));
            ++it;
            ++jt;
        }
    }
    return acc;
}

// Basis of {v : Mv = 0}; every returned vector is checked against M.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& fld, const SparseMatrix<F>& m) {
    Echelon<F> e(fld, m.ncols);
    for (const auto& r : m.rows) e.insert(r);
    auto nfs = e.normal_forms();
    const auto& pivots = e.pivots();
    std::vector<SparseVec<F>> out;
    for (Index j = 0; j < nfs.qdim(); ++j) {
        SparseVec<F> v;
        v.terms.push_back({nfs.nonpivot[j], fld.one()});
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            auto c = fld.is_zero(nfs.nf[r][j]) ? fld.zero() : nfs.nf[r][j];
            if constexpr (F::prime_field) c = c % fld.p;
            if (!fld.is_zero(c)) v.terms.push_back({pivots[r], c});
        }
        std::sort(v.terms.begin(), v.terms.end());
        for (const auto& row : m.rows)
            if (!fld.is_zero(dot(fld, row, v))) throw structural_error("kernel vector fails M v = 0");
        out.push_back(std::move(v));
    }
    return out;
}

// Matrix of a linear action on the quotient by a relation subspace, written
// on the non-pivot coordinates.  The action must preserve the relations.
template <class F>
SparseMatrix<F> induced_action_on_quotient(const F& fld, const Echelon<F>& rel,
                                           const SparseMatrix<F>& action) {
    for (const auto& row : rel.rows()) {
        // apply action to the relation basis vector and check membership
        SparseVec<F> img;
        std::vector<typename F::Elem> dense(action.ncols, fld.zero());
        for (auto& [i, e] : row.terms)
            for (auto& [j, a] : action.rows[i].terms) dense[j] = fld.add(dense[j], fld.mul(e, a));
        for (Index j = 0; j < action.ncols; ++j)
            if (!fld.is_zero(dense[j])) img.terms.push_back({j, dense[j]});
        if (!rel.contains(img)) throw structural_error("action does not preserve the relation subspace");
    }
    auto nfs = rel.normal_forms();
    Index q = nfs.qdim();
    SparseMatrix<F> out;
    out.ncols = q;
    out.rows.resize(q);
    for (Index jq = 0; jq < q; ++jq) {
        Index j = nfs.nonpivot[jq];
        SparseVec<F> img = rel.reduce(action.rows[j]);
        for (auto& [c, e] : img.terms) out.rows[jq].terms.push_back({nfs.col_to_quot[c], e});
    }
    // column convention: out.rows[j] lists the image of basis vector j
    return out;
}

// Zassenhaus: echelonize (a | a) for a in A and (b | 0) for b in B; rows with
// zero left half carry a spanning set of A cap B in their right half.
template <class F>
Subspace<F> subspace_intersection(const F& fld, Index ncols, const std::vector<SparseVec<F>>& A,
                                  const std::vector<SparseVec<F>>& B) {
    Echelon<F> e(fld, 2 * ncols);
    for (const auto& a : A) {
        SparseVec<F> v;
        for (auto& [i, x] : a.terms) v.terms.push_back({i, x});
        for (auto& [i, x] : a.terms) v.terms.push_back({i + ncols, x});
        e.insert(v);
    }
    for (const auto& b : B) {
        SparseVec<F> v;
        for (auto& [i, x] : b.terms) v.terms.push_back({i, x});
        e.insert(v);
    }
    Echelon<F> inter(fld, ncols);
    const auto& rows = e.rows();
    const auto& pivots = e.pivots();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (pivots[r] < ncols) continue;
        SparseVec<F> w;
        for (auto& [i, x] : rows[r].terms) w.terms.push_back({i - ncols, x});
        inter.insert(w);
    }
    return inter.to_subspace();
}

// One line per row, "index:value" pairs, exact rationals as p/q.
template <class F>
std::string dump_matrix(const F& fld, const SparseMatrix<F>& m) {
    std::ostringstream os;
    for (const auto& r : m.rows) {
        bool first = true;
        for (auto& [i, e] : r.terms) {
            if (!first) os << ' ';
            os << i << ':' << fld.to_string(e);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

// Default multi-modular primes: both exceed 2^20 and stay below 2^21.
inline constexpr std::uint64_t MOD_PRIME_1 = 1048583;
inline constexpr std::uint64_t MOD_PRIME_2 = 2000003;

// Chinese-remainder lift of (r1 mod p1, r2 mod p2) to the balanced residue
// in (-p1*p2/2, p1*p2/2].
inline Int crt_balanced(std::uint64_t r1, std::uint64_t p1, std::uint64_t r2, std::uint64_t p2) {
    Int P1 = (long)p1, P2 = (long)p2, M = P1 * P2;
    Int inv;  // p1^{-1} mod p2
    {
        PrimeField f2(p2);
        inv = (long)f2.inv(p1 % p2);
    }
    Int k = ((Int((long)r2) - Int((long)r1)) * inv) % P2;
    if (k < 0) k += P2;
    Int x = Int((long)r1) + k * P1;  // 0 <= x < M
    if (2 * x > M) x -= M;
    return x;
}

enum class ArithMode { rational, multimodular };

}  // namespace lanke
