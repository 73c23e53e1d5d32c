#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lanke/util.hpp"

namespace lanke {

// Integer partition: weakly decreasing list of positive parts.  The empty
// partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("partition parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // i-th part, 1-based, 0 beyond the last row.
    int part(int i) const { return (i >= 1 && i <= num_parts()) ? parts_[i - 1] : 0; }

    int num_columns() const { return parts_.empty() ? 0 : parts_[0]; }

    // Length of column c (1-based): number of rows with at least c cells.
    int column_length(int c) const {
        int l = 0;
        for (int p : parts_)
            if (p >= c) ++l;
        return l;
    }

    int first_column_length() const { return num_parts(); }
    int last_column_length() const { return parts_.empty() ? 0 : column_length(parts_[0]); }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= num_columns(); ++j) c.push_back(column_length(j));
        return Partition(std::move(c));
    }

    // Cellwise containment (mu inside *this).
    bool contains(const Partition& mu) const {
        if (mu.num_parts() > num_parts()) return false;
        for (int i = 1; i <= mu.num_parts(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // lex on part lists
    bool operator>(const Partition& o) const { return o < *this; }

    // "3,3,1"; the empty partition prints as "".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    // Accepts "3,3,1" and exponent sugar "3^2,1"; "" is the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
            if (i >= text.size()) break;
            std::size_t j = i;
            while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw std::invalid_argument("bad partition text: " + text);
            int base = std::stoi(text.substr(i, j - i));
            int rep = 1;
            if (j < text.size() && text[j] == '^') {
                std::size_t k = ++j;
                while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
                if (j == k) throw std::invalid_argument("bad partition text: " + text);
                rep = std::stoi(text.substr(k, j - k));
            }
            for (int r = 0; r < rep; ++r) parts.push_back(base);
            i = j;
        }
        return Partition(std::move(parts));
    }

  private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return VectorHash()(p.parts()); }
};

// Sum of cell contents c(r,s) = s - r over the diagram.
inline long content_sum(const Partition& lambda) {
    long c = 0;
    for (int r = 1; r <= lambda.num_parts(); ++r)
        for (int s = 1; s <= lambda.part(r); ++s) c += s - r;
    return c;
}

// True iff the last column of lambda1 is at least as long as the first column
// of lambda2, so the diagrams can be placed side by side.
inline bool is_compatible(const Partition& lambda1, const Partition& lambda2) {
    return lambda1.last_column_length() >= lambda2.first_column_length();
}

// Componentwise sum of compatible partitions (side-by-side diagrams).
inline Partition concat(const Partition& lambda1, const Partition& lambda2) {
    if (!is_compatible(lambda1, lambda2))
        throw std::invalid_argument("concat: incompatible partitions " + lambda1.to_string() + " | " +
                                    lambda2.to_string());
    std::vector<int> parts;
    int rows = std::max(lambda1.num_parts(), lambda2.num_parts());
    for (int i = 1; i <= rows; ++i) parts.push_back(lambda1.part(i) + lambda2.part(i));
    return Partition(std::move(parts));
}

struct SkewShape {
    Partition outer, inner;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
    }
    int size() const { return outer.size() - inner.size(); }
};

// All partitions obtained from lambda by adding r cells, no two in the same
// row (vertical strips; the sgn_r side of Pieri's rule).
inline std::vector<Partition> pieri_column(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("pieri_column: r must be >= 1");
    std::vector<Partition> out;
    int rows = lambda.num_parts() + r;
    std::vector<int> chosen;  // rows that receive a cell, increasing
    auto emit = [&]() {
        std::vector<int> parts;
        for (int i = 1; i <= rows; ++i) parts.push_back(lambda.part(i));
        for (int i : chosen) ++parts[i - 1];
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        // keep only valid partitions (weakly decreasing)
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1]) return;
        out.emplace_back(std::move(parts));
    };
    // choose r distinct rows
    std::vector<int> stack;
    auto rec = [&](auto&& self, int next, int left) -> void {
        if (left == 0) {
            chosen = stack;
            emit();
            return;
        }
        if (next > rows) return;
        for (int i = next; i + left - 1 <= rows; ++i) {
            stack.push_back(i);
            self(self, i + 1, left - 1);
            stack.pop_back();
        }
    };
    rec(rec, 1, r);
    // deterministic order, deduped (each target arises once anyway)
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a > b; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All partitions of m, lexicographically decreasing: (m), (m-1,1), ...
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

// n! / (product of hook lengths): the dimension of the irreducible indexed
// by lambda.
inline Int hook_length_dimension(const Partition& lambda) {
    Int prod = 1;
    Partition conj = lambda.conjugate();
    for (int r = 1; r <= lambda.num_parts(); ++r)
        for (int s = 1; s <= lambda.part(r); ++s) {
            int hook = (lambda.part(r) - s) + (conj.part(s) - r) + 1;
            prod *= hook;
        }
    return factorial(lambda.size()) / prod;
}

}  // namespace lanke
