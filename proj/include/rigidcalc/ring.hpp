#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace rigidcalc {

// global computation limits (set by CLI flags)
struct Limits {
    int degree_bound = 40;
    int window = 6;
};
Limits& limits();

// A finitely presented algebra over the base field. Localizations are encoded
// by auxiliary inverse variables appended after the core variables, with
// relations z*s - 1. Relations are kept as a reduced GB in `order`.
struct Ring {
    Field field;
    std::vector<std::string> vars;
    Order order = Order::grevlex();
    int n_core = 0;               // vars[0..n_core) are user variables
    std::vector<Poly> rel_user;   // user relations (core vars only)
    std::vector<Poly> inverted;   // inverted elements (core vars only)
    std::vector<Poly> rel_all;    // user + aux relations
    std::vector<Poly> rel_gb;     // reduced GB of rel_all
    bool zero_ring = false;       // GB == {1}

    mutable std::mutex mu;
    mutable std::map<std::string, std::shared_ptr<const void>> cache;

    bool is_field() const { return vars.empty(); }
    std::string str() const;
};

// per-ring memoization helper
template <class T>
std::shared_ptr<T> ring_cache(const RingP& r, const std::string& key,
                              const std::function<std::shared_ptr<T>()>& make) {
    {
        std::lock_guard<std::mutex> g(r->mu);
        auto it = r->cache.find(key);
        if (it != r->cache.end()) return std::static_pointer_cast<T>(it->second);
    }
    auto value = make(); // computed outside the lock; harmless to race, last write wins
    std::lock_guard<std::mutex> g(r->mu);
    auto [it, _] = r->cache.emplace(key, value);
    return std::static_pointer_cast<T>(it->second);
}

// Present k[vars]/(relations) with the listed elements inverted. Relations and
// inverted elements are parsed against the core variables. A presentation of
// the zero ring is allowed but flagged.
RingP present_ring(const Field& f, std::vector<std::string> vars,
                   const std::vector<std::string>& relations,
                   const std::vector<std::string>& inverted,
                   Order order = Order::grevlex());
// same, but relations/inverted already parsed in a bare ring made by bare_ring
RingP present_ring_polys(const Field& f, std::vector<std::string> vars,
                         std::vector<Poly> relations, std::vector<Poly> inverted,
                         Order order = Order::grevlex(), int n_core = -1);
// the base field as a 0-variable ring
RingP field_ring(const Field& f);
// a bare polynomial ring (no relations) for staging parses
RingP bare_ring(const Field& f, std::vector<std::string> vars, Order order = Order::grevlex());
// r with one more element inverted (appends an aux variable)
RingP localize(const RingP& r, const Poly& s);

// A declared homomorphism between presented rings: images per source variable.
struct RingMap {
    RingP src, tgt;
    std::vector<Poly> images; // size = src nvars, over tgt
    bool finite = false;
    std::vector<Poly> finite_basis; // optional certified module basis of tgt over src
    bool localization = false;
    bool smooth = false;
    int smooth_dim = 0;
    bool etale = false;
    bool surjective = false; // detected or verified
};

struct MapAttrs {
    bool finite = false;
    std::vector<std::string> basis; // textual, parsed over tgt
    bool localization = false;
    bool smooth = false;
    int smooth_dim = 0;
    bool etale = false;
};

// validates: every source relation maps to 0 (normal form in tgt); finiteness
// claims are certified via the graph-ring staircase criterion.
RingMap make_ring_map(const RingP& src, const RingP& tgt, std::vector<Poly> images,
                      const MapAttrs& attrs = {});
RingMap identity_map(const RingP& r);
RingMap compose(const RingMap& f, const RingMap& g); // g after f: src(f) -> tgt(g)
Poly map_apply(const RingMap& u, const Poly& f);

// graph ring of u: k[tgt vars, src-bar vars]/(rel_tgt, bar_i - u(src_i)),
// block order with tgt vars dominant. bar var i corresponds to src var i.
struct GraphRing {
    RingP joint;       // the presented joint ring
    int n_tgt;         // leading joint vars = tgt vars
    RingP src, tgt;
    Poly to_joint_tgt(const Poly& f) const;  // tgt poly -> joint
    Poly to_joint_src(const Poly& f) const;  // src poly -> joint (bar vars)
    std::optional<Poly> to_src(const Poly& joint_poly) const; // if bar-vars only
};
std::shared_ptr<const GraphRing> graph_ring(const RingMap& u);

// module-finiteness of tgt over src via the staircase criterion on the graph
// ring; returns a monomial module basis when finite
std::optional<std::vector<Poly>> module_finite_basis(const RingMap& u);
bool map_is_surjective(const RingMap& u);

// staircase basis of r as a k-vector space (normal-form monomials); nullopt if
// infinite-dimensional
std::optional<std::vector<Monomial>> k_basis(const RingP& r);

} // namespace rigidcalc
