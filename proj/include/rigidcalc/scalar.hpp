#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace rigidcalc {

// Exact base field: QQ (arbitrary-precision rationals, canonical lowest terms,
// positive denominator -- mpq_class guarantees that after canonicalize) or
// GF(p) residues stored in [0, p) with p an odd-or-2 prime < 2^31.

struct Field {
    enum Kind : uint8_t { QQ, GFP } kind = QQ;
    int64_t p = 0; // prime, only for GFP

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string str() const { return kind == QQ ? "QQ" : "GF(" + std::to_string(p) + ")"; }

    static Field rationals() { return Field{QQ, 0}; }
    static Field prime(int64_t p);
};

class Scalar {
public:
    Scalar() = default; // zero over QQ
    static Scalar zero(const Field& f) { Scalar s; s.f_ = f; return s; }
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long n);
    static Scalar of_mpq(mpq_class q) { Scalar s; s.q_ = std::move(q); s.q_.canonicalize(); return s; }
    // parse "a/b" or "a" in the given field
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws NoSolution on div-by-zero
    Scalar operator-() const;
    Scalar inv() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rat() const { return q_; } // QQ only
    int64_t residue() const { return r_; }      // GFP only

    std::string str() const; // "3/2", "-1", "4"

private:
    void check_same(const Scalar& o) const {
        if (f_ != o.f_) throw RingMismatch("scalars over different fields: " + f_.str() + " vs " + o.f_.str());
    }
    Field f_{};
    mpq_class q_{0};
    int64_t r_ = 0;
};

} // namespace rigidcalc
