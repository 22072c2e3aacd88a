#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace rigidcalc {

// A monomial is its exponent vector; length always equals the ring's nvars.
using Monomial = std::vector<int32_t>;

inline int mono_deg(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline bool mono_is_one(const Monomial& m) {
    for (int32_t e : m) if (e) return false;
    return true;
}

inline Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i) if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) { // b / a
    Monomial r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

// Monomial orders. BLOCK eliminates the first `split` variables: compares the
// leading block by grevlex, ties broken by grevlex on the tail block.
struct Order {
    enum Kind : uint8_t { LEX, GREVLEX, BLOCK } kind = GREVLEX;
    int split = 0;

    static Order lex() { return Order{LEX, 0}; }
    static Order grevlex() { return Order{GREVLEX, 0}; }
    static Order block(int split) { return Order{BLOCK, split}; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool equal_kind(const Order& o) const { return kind == o.kind && split == o.split; }
};

int lex_cmp(const Monomial& a, const Monomial& b, size_t lo, size_t hi);
int grevlex_cmp(const Monomial& a, const Monomial& b, size_t lo, size_t hi);

} // namespace rigidcalc
