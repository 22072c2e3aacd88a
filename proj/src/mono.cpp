#include "rigidcalc/mono.hpp"

namespace rigidcalc {

int lex_cmp(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int grevlex_cmp(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: the one whose last differing exponent is SMALLER is larger
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int Order::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
    case LEX:
        return lex_cmp(a, b, 0, a.size());
    case GREVLEX:
        return grevlex_cmp(a, b, 0, a.size());
    case BLOCK: {
        size_t s = static_cast<size_t>(split);
        if (int c = grevlex_cmp(a, b, 0, s)) return c;
        return grevlex_cmp(a, b, s, a.size());
    }
    }
    return 0;
}

} // namespace rigidcalc
