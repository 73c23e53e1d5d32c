#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace lanke {

using Rat = mpq_class;
using Int = mpz_class;

// Thrown when a requested degree exceeds the configured desk-scale cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a module is internally inconsistent (e.g. a group action does
// not preserve a relation subspace).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// n! / (b_1! b_2! ... b_r!)
inline Int multinomial(int n, const std::vector<int>& blocks) {
    Int r = factorial(n);
    for (int b : blocks) r /= factorial(b);
    return r;
}

inline bool fits_long(const Int& x) { return x.fits_slong_p(); }

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();  // "p/q" or "p"
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VectorHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const {
        std::size_t h = v.size();
        for (const auto& x : v) hash_combine(h, std::hash<T>()(x));
        return h;
    }
};

}  // namespace lanke
