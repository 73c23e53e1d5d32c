#pragma once

#include <numeric>
#include <vector>

#include "lanke/util.hpp"

namespace lanke {

// Permutation of {0,...,m-1}; perm[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a b) as a permutation of {0,...,m-1}, 0-based points.
inline Perm transposition(int m, int a, int b) {
    Perm p = identity_perm(m);
    std::swap(p[a], p[b]);
    return p;
}

// Composition acting on points: (p * q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
    return r;
}

// Relabel a 1-based letter; letters beyond the permutation's degree are
// fixed (used when a repeated marker letter sits above the acting group).
inline int apply_letter(const Perm& p, int letter) {
    if (letter > (int)p.size()) return letter;
    return p[letter - 1] + 1;
}

// Cycle lengths, weakly decreasing.
inline std::vector<int> cycle_lengths(const Perm& p) {
    int m = (int)p.size();
    std::vector<bool> seen(m, false);
    std::vector<int> cyc;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.rbegin(), cyc.rend());
    return cyc;
}

// Canonical representative of the conjugacy class with the given cycle type:
// consecutive blocks, each cyclically shifted.
inline Perm class_representative(const std::vector<int>& cycle_type) {
    int m = 0;
    for (int c : cycle_type) m += c;
    Perm p(m);
    int start = 0;
    for (int c : cycle_type) {
        for (int i = 0; i < c; ++i) p[start + i] = start + (i + 1) % c;
        start += c;
    }
    return p;
}

inline int num_inversions_parity(std::vector<int> v) {
    // insertion sort counting swaps; v is small
    int swaps = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            ++swaps;
        }
    }
    return swaps & 1;
}

inline int sign_of(const Perm& p) {
    std::vector<int> v(p.begin(), p.end());
    return num_inversions_parity(v) ? -1 : 1;
}

// z_mu = prod i^{a_i} a_i!  for cycle type mu; |class| = m!/z_mu.
inline Int centralizer_order(const std::vector<int>& mu) {
    Int z = 1;
    int run = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        z *= mu[i];
        ++run;
        if (i + 1 == mu.size() || mu[i + 1] != mu[i]) {
            z *= factorial(run);
            run = 0;
        }
    }
    return z;
}

}  // namespace lanke
