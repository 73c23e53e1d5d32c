#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "lanke/partition.hpp"
#include "lanke/permutation.hpp"

namespace lanke {

// Irreducible character values of a symmetric group, one table per degree,
// built lazily by the Murnaghan-Nakayama recursion.  Tables are immutable
// once built; construction is guarded by a single mutex.
class CharacterTable {
  public:
    int degree() const { return m_; }
    const std::vector<Partition>& parts() const { return parts_; }  // lex decreasing

    int index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("partition has the wrong degree");
        return it->second;
    }

    long long chi(int lam_idx, int mu_idx) const { return chi_[lam_idx][mu_idx]; }
    long long chi(const Partition& lam, const Partition& mu) const {
        return chi_[index_of(lam)][index_of(mu)];
    }
    const Int& class_size(int mu_idx) const { return class_size_[mu_idx]; }

    static int degree_cap() { return cap_(); }
    static void set_degree_cap(int cap) { cap_() = cap; }

    static const CharacterTable& of(int m) {
        if (m > cap_())
            throw cap_exceeded("character table degree " + std::to_string(m) + " exceeds cap " +
                               std::to_string(cap_()));
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CharacterTable>> tables;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = tables[m];
        if (!slot) slot = std::unique_ptr<CharacterTable>(new CharacterTable(m));
        return *slot;
    }

  private:
    int m_;
    std::vector<Partition> parts_;
    std::unordered_map<Partition, int, PartitionHash> index_;
    std::vector<std::vector<long long>> chi_;
    std::vector<Int> class_size_;

    static int& cap_() {
        static int cap = 13;
        return cap;
    }

    explicit CharacterTable(int m) : m_(m), parts_(partitions_of(m)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) index_[parts_[i]] = (int)i;
        Int mfact = factorial(m);
        for (const auto& mu : parts_) class_size_.push_back(mfact / centralizer_order(mu.parts()));
        std::unordered_map<std::vector<int>, long long, VectorHash> memo;
        chi_.assign(parts_.size(), std::vector<long long>(parts_.size(), 0));
        for (std::size_t l = 0; l < parts_.size(); ++l)
            for (std::size_t u = 0; u < parts_.size(); ++u)
                chi_[l][u] = mn(parts_[l].parts(), parts_[u].parts(), memo, 0);
    }

    // Murnaghan-Nakayama over beta-numbers: remove a border strip of length
    // mu[k] in every possible way; the strip height is the number of
    // beta-values jumped over.
    static long long mn(const std::vector<int>& lam, const std::vector<int>& mu,
                        std::unordered_map<std::vector<int>, long long, VectorHash>& memo,
                        std::size_t k) {
        if (k == mu.size()) return 1;
        std::vector<int> key;
        key.reserve(lam.size() + mu.size() + 1);
        key.insert(key.end(), lam.begin(), lam.end());
        key.push_back(-1);
        key.insert(key.end(), mu.begin() + k, mu.end());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        int L = mu[k];
        int rows = (int)lam.size();
        std::vector<int> beta(rows);
        for (int i = 0; i < rows; ++i) beta[i] = lam[i] + (rows - 1 - i);
        long long acc = 0;
        for (int i = 0; i < rows; ++i) {
            int b = beta[i] - L;
            if (b < 0) continue;
            bool taken = false;
            int height = 0;
            for (int j = 0; j < rows; ++j) {
                if (j == i) continue;
                if (beta[j] == b) taken = true;
                if (beta[j] > b && beta[j] < beta[i]) ++height;
            }
            if (taken) continue;
            std::vector<int> nb = beta;
            nb[i] = b;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> nlam(rows);
            for (int j = 0; j < rows; ++j) nlam[j] = nb[j] - (rows - 1 - j);
            while (!nlam.empty() && nlam.back() == 0) nlam.pop_back();
            acc += (height % 2 ? -1 : 1) * mn(nlam, mu, memo, k + 1);
        }
        memo[key] = acc;
        return acc;
    }
};

// Exact class function on a symmetric group, stored on the cycle types in
// the order of the degree's character table.
struct ClassFunction {
    int degree = 0;
    std::vector<Rat> values;

    const Rat& value(const Partition& cycle_type) const {
        return values[CharacterTable::of(degree).index_of(cycle_type)];
    }

    static ClassFunction irreducible(const Partition& lambda) {
        const auto& T = CharacterTable::of(lambda.size());
        ClassFunction f;
        f.degree = lambda.size();
        int l = T.index_of(lambda);
        for (std::size_t u = 0; u < T.parts().size(); ++u) f.values.push_back(Rat((long)T.chi(l, (int)u)));
        return f;
    }

    static ClassFunction trivial(int m) { return irreducible(Partition(std::vector<int>{m})); }
    static ClassFunction sign(int m) { return irreducible(Partition(std::vector<int>(m, 1))); }

    ClassFunction operator+(const ClassFunction& o) const {
        check_degree(o);
        ClassFunction f = *this;
        for (std::size_t i = 0; i < values.size(); ++i) f.values[i] += o.values[i];
        return f;
    }

    ClassFunction operator-(const ClassFunction& o) const {
        check_degree(o);
        ClassFunction f = *this;
        for (std::size_t i = 0; i < values.size(); ++i) f.values[i] -= o.values[i];
        return f;
    }

    bool operator==(const ClassFunction& o) const { return degree == o.degree && values == o.values; }

    void check_degree(const ClassFunction& o) const {
        if (degree != o.degree) throw std::invalid_argument("class function degree mismatch");
    }
};

inline Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    f.check_degree(g);
    const auto& T = CharacterTable::of(f.degree);
    Rat acc = 0;
    for (std::size_t u = 0; u < f.values.size(); ++u)
        acc += Rat(T.class_size((int)u)) * f.values[u] * g.values[u];
    return acc / Rat(factorial(f.degree));
}

struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// Multiset of irreducibles with multiplicities, ordered lex decreasing.
struct Decomposition {
    int degree = 0;
    std::map<Partition, long, LexGreater> mult;

    long multiplicity(const Partition& p) const {
        auto it = mult.find(p);
        return it == mult.end() ? 0 : it->second;
    }

    Int dimension() const {
        Int d = 0;
        for (auto& [p, c] : mult) d += Int(c) * hook_length_dimension(p);
        return d;
    }

    void add(const Partition& p, long c) {
        if (c == 0) return;
        long& slot = mult[p];
        slot += c;
        if (slot == 0) mult.erase(p);
    }

    bool componentwise_leq(const Decomposition& o) const {
        for (auto& [p, c] : mult)
            if (c > o.multiplicity(p)) return false;
        return true;
    }

    bool operator==(const Decomposition& o) const { return degree == o.degree && mult == o.mult; }

    // Prepend a row of the given length to every diagram.
    Decomposition with_top_row(int k) const {
        Decomposition out;
        out.degree = degree + k;
        for (auto& [p, c] : mult) {
            std::vector<int> parts;
            parts.push_back(k);
            for (int x : p.parts()) parts.push_back(x);
            out.add(Partition(std::move(parts)), c);
        }
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (auto& [p, c] : mult) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += std::to_string(c) + "*";
            s += "(" + p.to_string() + ")";
        }
        return s.empty() ? "0" : s;
    }

    ClassFunction character() const {
        const auto& T = CharacterTable::of(degree);
        ClassFunction f;
        f.degree = degree;
        f.values.assign(T.parts().size(), Rat(0));
        for (auto& [p, c] : mult) {
            int l = T.index_of(p);
            for (std::size_t u = 0; u < f.values.size(); ++u)
                f.values[u] += Rat(c) * Rat((long)T.chi(l, (int)u));
        }
        return f;
    }
};

// Multiplicities of a genuine character via inner products; rejects
// non-integral or negative results, which signal an upstream bug.
inline Decomposition decompose(const ClassFunction& f) {
    const auto& T = CharacterTable::of(f.degree);
    Decomposition d;
    d.degree = f.degree;
    for (const auto& lam : T.parts()) {
        Rat m = inner_product(f, ClassFunction::irreducible(lam));
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0)
            throw structural_error("not a genuine character: multiplicity of (" + lam.to_string() +
                                   ") is " + rat_to_string(m));
        d.add(lam, (long)m.get_num().get_si());
    }
    return d;
}

// Character of the induction product: sum over splittings of each cycle
// type, weighted by z_mu / (z_nu z_kappa).
inline ClassFunction induction_product_character(const ClassFunction& f, const ClassFunction& g) {
    int a = f.degree, b = g.degree;
    const auto& T = CharacterTable::of(a + b);
    ClassFunction out;
    out.degree = a + b;
    out.values.assign(T.parts().size(), Rat(0));
    for (std::size_t u = 0; u < T.parts().size(); ++u) {
        const auto& mu = T.parts()[(int)u].parts();
        // distinct part values with multiplicities
        std::vector<std::pair<int, int>> groups;
        for (int x : mu) {
            if (!groups.empty() && groups.back().first == x)
                ++groups.back().second;
            else
                groups.push_back({x, 1});
        }
        Rat acc = 0;
        std::vector<int> take(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t gi, int left) -> void {
            if (gi == groups.size()) {
                if (left != 0) return;
                std::vector<int> nu, kappa;
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    for (int t = 0; t < take[i]; ++t) nu.push_back(groups[i].first);
                    for (int t = take[i]; t < groups[i].second; ++t) kappa.push_back(groups[i].first);
                }
                Rat fv = f.values[CharacterTable::of(a).index_of(Partition(nu))];
                Rat gv = g.values[CharacterTable::of(b).index_of(Partition(kappa))];
                if (fv == 0 || gv == 0) return;
                Int zmu = centralizer_order(mu);
                Int znu = centralizer_order(nu), zk = centralizer_order(kappa);
                acc += Rat(zmu) / (Rat(znu) * Rat(zk)) * fv * gv;
                return;
            }
            for (int t = 0; t <= groups[gi].second && t * groups[gi].first <= left; ++t) {
                take[gi] = t;
                self(self, gi + 1, left - t * groups[gi].first);
            }
            take[gi] = 0;
        };
        rec(rec, 0, a);
        out.values[u] = acc;
    }
    return out;
}

// Decomposition of the composition product sgn_2[sgn_n]: one copy of
// 2^{n-i} 1^{2i} for each odd i in [n].
inline Decomposition sgn2_plethysm_sgn(int n) {
    if (n < 1) throw std::invalid_argument("sgn2_plethysm_sgn: n must be positive");
    Decomposition d;
    d.degree = 2 * n;
    for (int i = 1; i <= n; i += 2) {
        std::vector<int> parts(n - i, 2);
        parts.insert(parts.end(), 2 * i, 1);
        d.add(Partition(std::move(parts)), 1);
    }
    return d;
}

// Brute-force character of sgn_2[sgn_n] from its signed-basis model: basis
// symbols are unordered pairs of disjoint n-sets covering [2n], a permutation
// acts by relabelling, with a sign for sorting each block and a sign for
// swapping the blocks.
inline ClassFunction sgn2_plethysm_character_bruteforce(int n) {
    int m = 2 * n;
    const auto& T = CharacterTable::of(m);
    // enumerate canonical symbols: (block containing 1, complement)
    std::vector<std::vector<int>> firsts;
    std::vector<int> cur = {1};
    auto rec = [&](auto&& self, int next) -> void {
        if ((int)cur.size() == n) {
            firsts.push_back(cur);
            return;
        }
        for (int x = next; x <= m; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 2);

    ClassFunction out;
    out.degree = m;
    for (const auto& mu : T.parts()) {
        Perm sigma = class_representative(mu.parts());
        Rat trace = 0;
        for (const auto& B1 : firsts) {
            std::vector<int> in1(m + 1, 0);
            for (int x : B1) in1[x] = 1;
            std::vector<int> B2;
            for (int x = 1; x <= m; ++x)
                if (!in1[x]) B2.push_back(x);
            std::vector<int> I1, I2;
            for (int x : B1) I1.push_back(apply_letter(sigma, x));
            for (int x : B2) I2.push_back(apply_letter(sigma, x));
            int sign = 1;
            if (num_inversions_parity(I1)) sign = -sign;
            if (num_inversions_parity(I2)) sign = -sign;
            std::sort(I1.begin(), I1.end());
            std::sort(I2.begin(), I2.end());
            if (I1[0] != 1) {
                std::swap(I1, I2);
                sign = -sign;  // swapping the blocks carries sgn_2
            }
            if (I1 == B1 && I2 == B2) trace += sign;
        }
        out.values.push_back(trace);
    }
    return out;
}

}  // namespace lanke
