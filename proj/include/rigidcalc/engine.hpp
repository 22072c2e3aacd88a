#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace rigidcalc {

// ---------------------------------------------------------------------------
// Module-level Groebner engine. Everything here computes in the polynomial
// ring underlying R; the wrappers fold R's relations into every component, so
// callers work over the quotient ring transparently.
// ---------------------------------------------------------------------------

struct ModTerm {
    int comp;
    Monomial m;
    Scalar c;
};

struct ModPoly {
    std::vector<ModTerm> t; // strictly descending under the active ModOrder
    bool is_zero() const { return t.empty(); }
    const ModTerm& lt() const;
};

// Module order. Components in [0, split) form the value block: compared
// position-over-term (lower component is larger; ring order breaks ties).
// Components >= split form the tag block: compared term-over-position (ring
// order on monomials first; lower component breaks ties). Any value-block term
// is larger than any tag-block term. split = ncomps gives plain POT.
struct ModOrder {
    Order ring_order;
    int split = 1 << 30;
    int cmp(const ModTerm& a, const ModTerm& b) const;
};

ModPoly mod_add(const ModPoly& a, const ModPoly& b, const ModOrder& ord);
ModPoly mod_mul_term(const ModPoly& a, const Monomial& m, const Scalar& c);
ModPoly mod_normalize(std::vector<ModTerm> terms, const ModOrder& ord);

// conversions between ring polynomials and module polynomials
ModPoly to_modpoly(const Poly& p, int comp, const ModOrder& ord);
// v[i] lands in component comp0 + i
ModPoly vec_to_modpoly(const std::vector<Poly>& v, int comp0, const ModOrder& ord);
// components [comp0, comp0 + n) of f as a vector of polynomials over r
std::vector<Poly> modpoly_to_vec(const ModPoly& f, const RingP& r, int comp0, int n);

struct ModGB {
    ModOrder ord;
    int ncomps = 0;
    std::vector<ModPoly> basis;   // reduced: monic, auto-reduced, sorted
    std::vector<int> sugar;
};

// Buchberger with sugar strategy and deterministic tie-breaks; throws
// DegreeBoundExceeded when any intermediate exceeds degree_bound.
ModGB buchberger_mod(std::vector<ModPoly> gens, int ncomps, ModOrder ord, int degree_bound);
ModPoly nf_mod(ModPoly f, const ModGB& gb, int degree_bound);

// ---------------------------------------------------------------------------
// Ring-level API
// ---------------------------------------------------------------------------

struct ReducedGB {
    RingP ring;
    Order order;
    std::vector<Poly> polys; // reduced GB of the preimage ideal (ring relations included)
    int degree_bound = 0;
    std::shared_ptr<const ModGB> engine; // reduction-ready form, filled by buchberger()
};

// reduced GB of (gens) over the underlying polynomial ring of r — no relation
// folding; used while presenting rings (r's own GB may not exist yet)
std::vector<Poly> raw_ideal_gb(const RingP& r, const std::vector<Poly>& gens, Order order,
                               int degree_bound);

ReducedGB buchberger(const RingP& r, const std::vector<Poly>& gens, Order order,
                     int degree_bound = 0);
Poly normal_form(const Poly& f, const ReducedGB& gb);
// normal form against the ring's own relation GB (canonical representative)
Poly nf_ring(const Poly& f);
bool in_ideal(const Poly& f, const ReducedGB& gb);

// ideal elimination: generators of (gens + relations) ∩ k[vars >= nbig]
std::vector<Poly> eliminate(const RingP& r, const std::vector<Poly>& gens, int nbig,
                            int degree_bound = 0);

// kernel of a ring map as an ideal of the source ring, via elimination in the
// graph ring (block order, target variables dominant)
ReducedGB ringmap_kernel(const RingMap& u);

// generators of ker(R^cols -> R^rows) of the matrix m, over R
Mat syz(const Mat& m);
// solve m·X = t over R (entry count rows x k); nullopt if no solution
std::optional<Mat> lift(const Mat& m, const Mat& t);
// generators of {v : m·v ∈ im(modulus)}
Mat modsyz(const Mat& m, const Mat& modulus);
// solve m·X ≡ t mod im(modulus)
std::optional<Mat> modlift(const Mat& m, const Mat& modulus, const Mat& t);

bool is_unit(const Poly& f);
std::optional<Poly> unit_inverse(const Poly& f);

// canonical representative of v modulo the column span of m (relations folded)
std::vector<Poly> nf_module(const std::vector<Poly>& v, const Mat& m);
bool in_module(const std::vector<Poly>& v, const Mat& m);

// Subring syzygies over a BLOCK-ordered ring (first nbig variables dominant):
// generators of the syzygies of the columns of `cols` whose coefficients lie
// in the small block k[vars >= nbig], as a matrix of such coefficients.
Mat subring_syz(const Mat& cols, int nbig);

} // namespace rigidcalc
