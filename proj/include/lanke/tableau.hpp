#pragma once

#include <functional>
#include <numeric>

#include "lanke/partition.hpp"

namespace lanke {

// Young tableau of straight shape; entries row-major.  Repeated entries are
// allowed (needed for the tableaux with a repeated letter).
struct YoungTableau {
    Partition shape;
    std::vector<int> entries;  // row-major, entries.size() == shape.size()

    YoungTableau(Partition sh, std::vector<int> ent) : shape(std::move(sh)), entries(std::move(ent)) {
        if ((int)entries.size() != shape.size())
            throw std::invalid_argument("tableau: entry count does not match shape size");
    }

    int at(int r, int c) const {  // 1-based
        int idx = 0;
        for (int i = 1; i < r; ++i) idx += shape.part(i);
        return entries[idx + c - 1];
    }

    bool is_standard() const {
        int n = shape.size();
        std::vector<bool> seen(n + 1, false);
        for (int e : entries) {
            if (e < 1 || e > n || seen[e]) return false;
            seen[e] = true;
        }
        for (int r = 1; r <= shape.num_parts(); ++r)
            for (int c = 1; c <= shape.part(r); ++c) {
                if (c < shape.part(r) && at(r, c) >= at(r, c + 1)) return false;
                if (r < shape.num_parts() && shape.part(r + 1) >= c && at(r, c) >= at(r + 1, c)) return false;
            }
        return true;
    }

    // Row index (1-based) of a given entry; standard tableaux only.
    int row_of(int entry) const {
        int idx = 0;
        for (int r = 1; r <= shape.num_parts(); ++r)
            for (int c = 1; c <= shape.part(r); ++c, ++idx)
                if (entries[idx] == entry) return r;
        throw std::invalid_argument("entry not present");
    }
};

// All standard Young tableaux of the given shape, emitted in lexicographic
// order of the row-major entry sequence.
inline void syt_enumerate(const Partition& shape, const std::function<void(const YoungTableau&)>& visit) {
    int n = shape.size();
    int rows = shape.num_parts();
    std::vector<int> fill(rows, 0);  // cells already filled per row
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(shape.part(r + 1), 0);

    std::vector<YoungTableau> found;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<int> ent;
            for (int r = 0; r < rows; ++r) ent.insert(ent.end(), grid[r].begin(), grid[r].end());
            found.emplace_back(shape, std::move(ent));
            return;
        }
        for (int r = 0; r < rows; ++r) {
            int c = fill[r];
            if (c >= shape.part(r + 1)) continue;
            if (r > 0 && fill[r - 1] <= c) continue;  // cell above must be filled
            grid[r][c] = next;
            ++fill[r];
            self(self, next + 1);
            --fill[r];
            grid[r][c] = 0;
        }
    };
    rec(rec, 1);
    std::sort(found.begin(), found.end(),
              [](const YoungTableau& a, const YoungTableau& b) { return a.entries < b.entries; });
    for (const auto& t : found) visit(t);
}

inline std::vector<YoungTableau> syt_list(const Partition& shape) {
    std::vector<YoungTableau> out;
    syt_enumerate(shape, [&](const YoungTableau& t) { out.push_back(t); });
    return out;
}

// Sum of the entries j for which j+1 sits in a strictly lower row.
inline int major_index(const YoungTableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("major_index: tableau is not standard");
    int n = t.shape.size(), maj = 0;
    for (int j = 1; j < n; ++j)
        if (t.row_of(j + 1) > t.row_of(j)) maj += j;
    return maj;
}

// Number of standard tableaux of shape lambda with major index congruent to
// i mod m, for i coprime to m = |lambda|.  Independent of the choice of i.
inline long kw_multiplicity(const Partition& lambda, int i) {
    int m = lambda.size();
    if (m < 2) throw std::invalid_argument("kw_multiplicity: degree must be at least 2");
    if (std::gcd(((i % m) + m) % m, m) != 1) throw std::invalid_argument("kw_multiplicity: i must be coprime to the degree");
    long count = 0;
    int target = ((i % m) + m) % m;
    syt_enumerate(lambda, [&](const YoungTableau& t) {
        if (major_index(t) % m == target) ++count;
    });
    return count;
}

// A filling of a skew shape; rows are full outer rows, inner cells hold 0.
struct SkewFilling {
    SkewShape shape;
    std::vector<std::vector<int>> rows;
};

// Littlewood-Richardson fillings of the skew shape with the given content:
// rows weakly increase, columns strictly increase, and the reverse reading
// word (right to left along rows, top to bottom) is a lattice word.
inline void lr_fillings(const SkewShape& shape, const Partition& type,
                        const std::function<void(const SkewFilling&)>& visit) {
    if (shape.size() != type.size())
        throw std::invalid_argument("lr_fillings: skew size must equal content size");
    int nrows = shape.outer.num_parts();
    int maxe = type.num_parts();
    std::vector<std::vector<int>> grid(nrows);
    for (int r = 0; r < nrows; ++r) grid[r].assign(shape.outer.part(r + 1), 0);
    std::vector<int> used(maxe + 2, 0);

    // cells in reverse reading order
    std::vector<std::pair<int, int>> order;  // (r, c) 1-based
    for (int r = 1; r <= nrows; ++r)
        for (int c = shape.outer.part(r); c > shape.inner.part(r); --c) order.push_back({r, c});

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            visit(SkewFilling{shape, grid});
            return;
        }
        auto [r, c] = order[k];
        for (int e = 1; e <= maxe; ++e) {
            if (used[e] >= type.part(e)) continue;
            if (e > 1 && used[e] >= used[e - 1]) continue;  // lattice condition
            if (c < shape.outer.part(r) && e > grid[r - 1][c]) continue;          // row weak
            if (r > 1 && shape.inner.part(r - 1) < c && c <= shape.outer.part(r - 1) &&
                e <= grid[r - 2][c - 1])
                continue;  // column strict
            grid[r - 1][c - 1] = e;
            ++used[e];
            self(self, k + 1);
            --used[e];
            grid[r - 1][c - 1] = 0;
        }
    };
    rec(rec, 0);
}

inline long lr_coefficient(const SkewShape& shape, const Partition& type) {
    long c = 0;
    lr_fillings(shape, type, [&](const SkewFilling&) { ++c; });
    return c;
}

}  // namespace lanke
