#include "rigidcalc/ring.hpp"

#include <algorithm>
#include <sstream>

#include "rigidcalc/engine.hpp"
#include "rigidcalc/errors.hpp"

namespace rigidcalc {

Limits& limits() {
    static Limits l;
    return l;
}

// ---------------------------------------------------------------------------
// accessors declared in poly.hpp
// ---------------------------------------------------------------------------

const Field& ring_field(const RingP& r) { return r->field; }
const Order& ring_order(const RingP& r) { return r->order; }
int ring_nvars(const RingP& r) { return (int)r->vars.size(); }
const std::string& ring_var_name(const RingP& r, int i) { return r->vars[i]; }

static bool same_presentation(const Ring& a, const Ring& b) {
    if (!(a.field.kind == b.field.kind && a.field.p == b.field.p)) return false;
    if (a.vars != b.vars || a.n_core != b.n_core) return false;
    if (!(a.order.kind == b.order.kind && a.order.split == b.order.split)) return false;
    if (a.rel_all.size() != b.rel_all.size()) return false;
    for (size_t i = 0; i < a.rel_all.size(); ++i) {
        const auto& ta = a.rel_all[i].terms();
        const auto& tb = b.rel_all[i].terms();
        if (ta.size() != tb.size()) return false;
        for (size_t k = 0; k < ta.size(); ++k)
            if (ta[k].m != tb[k].m || !(ta[k].c == tb[k].c)) return false;
    }
    return true;
}

bool ring_same(const RingP& a, const RingP& b) {
    if (a.get() == b.get()) return true;
    return a && b && same_presentation(*a, *b); // equal presentations are one ring
}

void check_same_ring(const RingP& a, const RingP& b) {
    if (ring_same(a, b)) return;
    throw RingMismatch("operands live in different rings ("
                       + (a ? a->str() : std::string("null")) + " vs "
                       + (b ? b->str() : std::string("null")) + ")");
}

std::string Ring::str() const {
    std::ostringstream os;
    os << field.str() << "[";
    for (int i = 0; i < n_core; ++i) {
        if (i) os << ",";
        os << vars[i];
    }
    os << "]";
    if (!rel_user.empty()) {
        os << "/(";
        for (size_t i = 0; i < rel_user.size(); ++i) {
            if (i) os << ", ";
            os << rel_user[i].str();
        }
        os << ")";
    }
    if (!inverted.empty()) {
        os << " inv(";
        for (size_t i = 0; i < inverted.size(); ++i) {
            if (i) os << ", ";
            os << inverted[i].str();
        }
        os << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ring construction
// ---------------------------------------------------------------------------

// re-express a poly over a ring with extra trailing variables (exponent 0)
static Poly extend_vars(const Poly& p, const RingP& bigger) {
    int n = ring_nvars(bigger);
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m = t.m;
        if ((int)m.size() > n) throw internal_error("extend_vars: shrinking");
        m.resize(n, 0);
        ts.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(bigger, std::move(ts));
}

static std::string fresh_var_name(const std::vector<std::string>& taken) {
    for (int i = 0;; ++i) {
        std::string cand = i == 0 ? "z" : "z" + std::to_string(i);
        if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
    }
}

RingP bare_ring(const Field& f, std::vector<std::string> vars, Order order) {
    auto rp = std::make_shared<Ring>();
    rp->field = f;
    rp->vars = std::move(vars);
    rp->order = order;
    rp->n_core = (int)rp->vars.size();
    return rp;
}

RingP field_ring(const Field& f) { return present_ring_polys(f, {}, {}, {}); }

RingP present_ring_polys(const Field& f, std::vector<std::string> vars,
                         std::vector<Poly> relations, std::vector<Poly> inverted,
                         Order order, int n_core) {
    auto rp = std::make_shared<Ring>();
    rp->field = f;
    rp->vars = std::move(vars);
    rp->order = order;
    rp->n_core = n_core < 0 ? (int)rp->vars.size() : n_core;
    // one aux variable per inverted element
    for (size_t i = 0; i < inverted.size(); ++i)
        rp->vars.push_back(fresh_var_name(rp->vars));
    RingP self = rp;
    for (auto& g : relations) {
        Poly ge = extend_vars(g, self);
        rp->rel_user.push_back(ge);
        rp->rel_all.push_back(ge);
    }
    int base = (int)rp->vars.size() - (int)inverted.size();
    for (size_t i = 0; i < inverted.size(); ++i) {
        Poly s = extend_vars(inverted[i], self);
        if (s.is_zero())
            throw InconsistentRing("cannot invert 0 in " + self->str());
        rp->inverted.push_back(s);
        Poly z = Poly::var(self, base + (int)i);
        rp->rel_all.push_back(z * s - Poly::one(self));
    }
    rp->rel_gb = raw_ideal_gb(self, rp->rel_all, rp->order, limits().degree_bound);
    rp->zero_ring = !rp->rel_gb.empty() && rp->rel_gb[0].is_constant() && !rp->rel_gb[0].is_zero();
    return self;
}

RingP present_ring(const Field& f, std::vector<std::string> vars,
                   const std::vector<std::string>& relations,
                   const std::vector<std::string>& inverted, Order order) {
    RingP stage = bare_ring(f, vars, order);
    std::vector<Poly> rels, invs;
    for (const auto& s : relations) rels.push_back(parse_poly(stage, s));
    for (const auto& s : inverted) invs.push_back(parse_poly(stage, s));
    return present_ring_polys(f, std::move(vars), std::move(rels), std::move(invs), order);
}

RingP localize(const RingP& r, const Poly& s) {
    check_same_ring(r, s.ring());
    auto rp = std::make_shared<Ring>();
    rp->field = r->field;
    rp->vars = r->vars;
    rp->vars.push_back(fresh_var_name(rp->vars));
    rp->order = r->order;
    rp->n_core = r->n_core;
    RingP self = rp;
    for (const auto& g : r->rel_user) rp->rel_user.push_back(extend_vars(g, self));
    for (const auto& g : r->inverted) rp->inverted.push_back(extend_vars(g, self));
    for (const auto& g : r->rel_all) rp->rel_all.push_back(extend_vars(g, self));
    Poly se = extend_vars(s, self);
    if (se.is_zero()) throw InconsistentRing("cannot invert 0 in " + r->str());
    rp->inverted.push_back(se);
    Poly z = Poly::var(self, (int)rp->vars.size() - 1);
    rp->rel_all.push_back(z * se - Poly::one(self));
    rp->rel_gb = raw_ideal_gb(self, rp->rel_all, rp->order, limits().degree_bound);
    rp->zero_ring = !rp->rel_gb.empty() && rp->rel_gb[0].is_constant() && !rp->rel_gb[0].is_zero();
    return self;
}

// ---------------------------------------------------------------------------
// ring maps
// ---------------------------------------------------------------------------

Poly map_apply(const RingMap& u, const Poly& f) {
    check_same_ring(u.src, f.ring());
    return nf_ring(f.substitute(u.images));
}

RingMap make_ring_map(const RingP& src, const RingP& tgt, std::vector<Poly> images,
                      const MapAttrs& attrs) {
    if (!(src->field.kind == tgt->field.kind && src->field.p == tgt->field.p))
        throw RingMismatch("map between rings over different fields");
    for (const auto& im : images) check_same_ring(tgt, im.ring());
    if ((int)images.size() == src->n_core && src->n_core < (int)src->vars.size()) {
        // derive images of the inverse variables: 1/u(s) must exist in tgt
        for (size_t i = 0; i < src->inverted.size(); ++i) {
            std::vector<Poly> partial = images;
            partial.resize(src->vars.size(), Poly::zero(tgt));
            Poly us = nf_ring(src->inverted[i].substitute(partial));
            auto inv = unit_inverse(us);
            if (!inv)
                throw NoSolution("image of inverted element " + src->inverted[i].str()
                                 + " is not a unit in " + tgt->str());
            images.push_back(*inv);
        }
    }
    if ((int)images.size() != (int)src->vars.size())
        throw internal_error("ring map needs one image per source variable");

    RingMap u;
    u.src = src;
    u.tgt = tgt;
    u.images = std::move(images);
    for (const auto& g : src->rel_all) {
        if (!map_apply(u, g).is_zero())
            throw InconsistentRing("relation " + g.str() + " does not map to 0 under "
                                   + src->str() + " -> " + tgt->str());
    }
    u.localization = attrs.localization;
    u.smooth = attrs.smooth;
    u.smooth_dim = attrs.smooth_dim;
    u.etale = attrs.etale;
    if (attrs.finite) {
        auto basis = module_finite_basis(u);
        if (!basis)
            throw NotFinite("target is not module-finite over the image of " + src->str());
        u.finite = true;
        u.finite_basis = std::move(*basis);
    }
    // surjectivity: cheap syntactic pass, then the graph-ring membership test
    bool all_hit = true;
    for (int j = 0; j < (int)tgt->vars.size() && all_hit; ++j) {
        Poly vj = Poly::var(tgt, j);
        bool hit = false;
        for (const auto& im : u.images)
            if (im == vj) { hit = true; break; }
        all_hit = hit;
    }
    if (all_hit) {
        u.surjective = true;
    } else {
        try {
            u.surjective = map_is_surjective(u);
        } catch (const DegreeBoundExceeded&) {
            u.surjective = false; // unknown; treated as not-known-surjective
        }
    }
    return u;
}

RingMap identity_map(const RingP& r) {
    RingMap u;
    u.src = r;
    u.tgt = r;
    for (int i = 0; i < (int)r->vars.size(); ++i) u.images.push_back(Poly::var(r, i));
    u.finite = true;
    u.finite_basis = {Poly::one(r)};
    u.localization = false;
    u.smooth = true;
    u.smooth_dim = 0;
    u.etale = true;
    u.surjective = true;
    return u;
}

RingMap compose(const RingMap& f, const RingMap& g) {
    check_same_ring(f.tgt, g.src);
    std::vector<Poly> images;
    images.reserve(f.images.size());
    for (const auto& im : f.images) images.push_back(map_apply(g, im));
    MapAttrs a;
    a.finite = f.finite && g.finite;
    a.localization = f.localization && g.localization;
    a.etale = f.etale && g.etale;
    a.smooth = f.smooth && g.smooth;
    a.smooth_dim = f.smooth_dim + g.smooth_dim;
    return make_ring_map(f.src, g.tgt, std::move(images), a);
}

// ---------------------------------------------------------------------------
// graph ring and finiteness
// ---------------------------------------------------------------------------

Poly GraphRing::to_joint_tgt(const Poly& f) const {
    check_same_ring(tgt, f.ring());
    int n = (int)joint->vars.size();
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m = t.m;
        m.resize(n, 0);
        ts.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(joint, std::move(ts));
}

Poly GraphRing::to_joint_src(const Poly& f) const {
    check_same_ring(src, f.ring());
    int n = (int)joint->vars.size();
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m(n, 0);
        for (int i = 0; i < (int)t.m.size(); ++i) m[n_tgt + i] = t.m[i];
        ts.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(joint, std::move(ts));
}

std::optional<Poly> GraphRing::to_src(const Poly& joint_poly) const {
    int ns = (int)src->vars.size();
    std::vector<Term> ts;
    for (const auto& t : joint_poly.terms()) {
        for (int i = 0; i < n_tgt; ++i)
            if (t.m[i] != 0) return std::nullopt;
        Monomial m(ns, 0);
        for (int i = 0; i < ns; ++i) m[i] = t.m[n_tgt + i];
        ts.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(src, std::move(ts));
}

std::shared_ptr<const GraphRing> graph_ring(const RingMap& u) {
    std::ostringstream key;
    key << "graph|" << (const void*)u.src.get();
    for (const auto& im : u.images) key << "|" << im.str();
    return ring_cache<const GraphRing>(u.tgt, key.str(), [&]() -> std::shared_ptr<const GraphRing> {
        auto gr = std::make_shared<GraphRing>();
        gr->src = u.src;
        gr->tgt = u.tgt;
        gr->n_tgt = (int)u.tgt->vars.size();
        std::vector<std::string> vars = u.tgt->vars;
        for (const auto& sv : u.src->vars) {
            std::string cand = sv + "_bar";
            while (std::find(vars.begin(), vars.end(), cand) != vars.end()) cand += "_";
            vars.push_back(cand);
        }
        int njoint = (int)vars.size();
        RingP stage = bare_ring(u.tgt->field, vars, Order::block(gr->n_tgt));
        std::vector<Poly> rels;
        for (const auto& g : u.tgt->rel_all) {
            std::vector<Term> ts;
            for (const auto& t : g.terms()) {
                Monomial m = t.m;
                m.resize(njoint, 0);
                ts.push_back(Term{std::move(m), t.c});
            }
            rels.push_back(Poly::from_terms(stage, std::move(ts)));
        }
        for (int i = 0; i < (int)u.src->vars.size(); ++i) {
            std::vector<Term> ts;
            for (const auto& t : u.images[i].terms()) {
                Monomial m = t.m;
                m.resize(njoint, 0);
                ts.push_back(Term{std::move(m), t.c});
            }
            Poly img = Poly::from_terms(stage, std::move(ts));
            rels.push_back(Poly::var(stage, gr->n_tgt + i) - img);
        }
        gr->joint = present_ring_polys(u.tgt->field, vars, std::move(rels), {},
                                       Order::block(gr->n_tgt));
        return gr;
    });
}

std::optional<std::vector<Poly>> module_finite_basis(const RingMap& u) {
    auto gr = graph_ring(u);
    const RingP& J = gr->joint;
    int nt = gr->n_tgt;
    if (J->zero_ring) return std::vector<Poly>{}; // zero ring: empty basis
    // leads of the joint GB whose support lies in the target block
    std::vector<Monomial> tgt_leads;
    std::vector<int> bound(nt, -1);
    for (const auto& g : J->rel_gb) {
        const Monomial& m = g.lt().m;
        bool tgt_only = true;
        for (int i = nt; i < (int)m.size(); ++i)
            if (m[i] != 0) { tgt_only = false; break; }
        if (!tgt_only) continue;
        tgt_leads.push_back(m);
        int support = -1, nsup = 0;
        for (int i = 0; i < nt; ++i)
            if (m[i] != 0) { support = i; ++nsup; }
        if (nsup == 1 && (bound[support] < 0 || m[support] < bound[support]))
            bound[support] = m[support];
    }
    for (int i = 0; i < nt; ++i)
        if (bound[i] < 0) return std::nullopt; // variable i unbounded: not finite
    // enumerate target monomials under the staircase
    std::vector<Poly> basis;
    Monomial cur(nt, 0);
    auto divisible = [&](const Monomial& m) {
        for (const auto& l : tgt_leads) {
            bool div = true;
            for (int i = 0; i < nt; ++i)
                if (m[i] < l[i]) { div = false; break; }
            if (div) return true;
        }
        return false;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == nt) {
            if (!divisible(cur)) {
                Monomial m(u.tgt->vars.size(), 0);
                for (int k = 0; k < nt; ++k) m[k] = cur[k];
                basis.push_back(Poly::monomial(u.tgt, m, Scalar::one(u.tgt->field)));
            }
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
        return u.tgt->order.cmp(a.lt().m, b.lt().m) < 0;
    });
    return basis;
}

bool map_is_surjective(const RingMap& u) {
    auto gr = graph_ring(u);
    for (int j = 0; j < gr->n_tgt; ++j) {
        Poly nf = nf_ring(Poly::var(gr->joint, j));
        for (const auto& t : nf.terms())
            for (int i = 0; i < gr->n_tgt; ++i)
                if (t.m[i] != 0) return false;
    }
    return true;
}

std::optional<std::vector<Monomial>> k_basis(const RingP& r) {
    int n = (int)r->vars.size();
    if (r->zero_ring) return std::vector<Monomial>{};
    std::vector<Monomial> leads;
    std::vector<int> bound(n, -1);
    for (const auto& g : r->rel_gb) {
        const Monomial& m = g.lt().m;
        leads.push_back(m);
        int support = -1, nsup = 0;
        for (int i = 0; i < n; ++i)
            if (m[i] != 0) { support = i; ++nsup; }
        if (nsup == 1 && (bound[support] < 0 || m[support] < bound[support]))
            bound[support] = m[support];
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;
    std::vector<Monomial> basis;
    Monomial cur(n, 0);
    auto divisible = [&](const Monomial& m) {
        for (const auto& l : leads) {
            bool div = true;
            for (int i = 0; i < n; ++i)
                if (m[i] < l[i]) { div = false; break; }
            if (div) return true;
        }
        return false;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (!divisible(cur)) basis.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return r->order.cmp(a, b) < 0; });
    return basis;
}

} // namespace rigidcalc
