#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mono.hpp"
#include "scalar.hpp"

namespace rigidcalc {

struct Ring;
using RingP = std::shared_ptr<const Ring>;

// accessors implemented in ring.cpp (Ring's full definition lives there)
const Field& ring_field(const RingP& r);
const Order& ring_order(const RingP& r);
int ring_nvars(const RingP& r);
const std::string& ring_var_name(const RingP& r, int i);
bool ring_same(const RingP& a, const RingP& b); // same object or equal presentation
void check_same_ring(const RingP& a, const RingP& b);

struct Term {
    Monomial m;
    Scalar c;
};

// Canonical sparse polynomial: terms strictly descending in the ring's order,
// no zero coefficients. Immutable in practice (all ops return fresh values).
class Poly {
public:
    Poly() = default;
    static Poly zero(RingP r) { Poly p; p.ring_ = std::move(r); return p; }
    static Poly constant(RingP r, Scalar c);
    static Poly one(RingP r) { return constant(r, Scalar::one(ring_field(r))); }
    static Poly var(RingP r, int i, int exp = 1);
    static Poly monomial(RingP r, Monomial m, Scalar c);
    // terms need not be sorted/combined; canonicalized here
    static Poly from_terms(RingP r, std::vector<Term> terms);

    const RingP& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].m)); }
    const Term& lt() const; // leading term; throws on zero
    int deg() const; // total degree, -1 for zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(const Scalar& c) const;
    Poly mul_term(const Monomial& m, const Scalar& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // formal partial derivative in variable i
    Poly derivative(int i) const;
    // substitute: images[i] replaces variable i; all images share the target ring
    Poly substitute(const std::vector<Poly>& images) const;
    // re-sort terms under a different ring with the same variable count
    // (used when moving between order-variants of one presentation)
    Poly reinterpret(RingP other) const;

    std::string str() const;

private:
    RingP ring_;
    std::vector<Term> terms_;
};

// plain multivariate division (no ideal theory): f = sum q_i d_i + r with no
// term of r divisible by any leading monomial of d_i
struct DivModResult {
    std::vector<Poly> quotients;
    Poly remainder;
};
DivModResult poly_divmod(const Poly& f, const std::vector<Poly>& divisors);

// parse polynomial text like "3/2*x^2*y - z + 1" over ring r
Poly parse_poly(const RingP& r, const std::string& text);

} // namespace rigidcalc
