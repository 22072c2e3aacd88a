#include "rigidcalc/engine.hpp"

#include <algorithm>
#include <sstream>

#include "rigidcalc/errors.hpp"

namespace rigidcalc {

// ---------------------------------------------------------------------------
// module terms and arithmetic
// ---------------------------------------------------------------------------

const ModTerm& ModPoly::lt() const {
    if (t.empty()) throw internal_error("leading term of zero module element");
    return t.front();
}

int ModOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    bool aval = a.comp < split, bval = b.comp < split;
    if (aval != bval) return aval ? 1 : -1; // value block beats tag block
    if (aval) {
        // position over term; lower component is larger
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ring_order.cmp(a.m, b.m);
    }
    // term over position; lower component breaks ties
    int c = ring_order.cmp(a.m, b.m);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

ModPoly mod_normalize(std::vector<ModTerm> terms, const ModOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
    ModPoly out;
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (!out.t.empty() && out.t.back().comp == t.comp && out.t.back().m == t.m) {
            out.t.back().c = out.t.back().c + t.c;
            if (out.t.back().c.is_zero()) out.t.pop_back();
        } else {
            out.t.push_back(std::move(t));
        }
    }
    return out;
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b, const ModOrder& ord) {
    ModPoly out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = ord.cmp(a.t[i], b.t[j]);
        if (c > 0) {
            out.t.push_back(a.t[i++]);
        } else if (c < 0) {
            out.t.push_back(b.t[j++]);
        } else {
            Scalar s = a.t[i].c + b.t[j].c;
            if (!s.is_zero()) out.t.push_back(ModTerm{a.t[i].comp, a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size()) out.t.push_back(a.t[i++]);
    while (j < b.t.size()) out.t.push_back(b.t[j++]);
    return out;
}

ModPoly mod_mul_term(const ModPoly& a, const Monomial& m, const Scalar& c) {
    ModPoly out;
    if (c.is_zero()) return out;
    out.t.reserve(a.t.size());
    for (const auto& t : a.t)
        out.t.push_back(ModTerm{t.comp, mono_mul(t.m, m), t.c * c});
    return out;
}

static ModPoly mod_neg(const ModPoly& a) {
    ModPoly out;
    out.t.reserve(a.t.size());
    for (const auto& t : a.t) out.t.push_back(ModTerm{t.comp, t.m, -t.c});
    return out;
}

static ModPoly mod_monic(ModPoly a) {
    if (a.is_zero()) return a;
    Scalar inv = a.t.front().c.inv();
    for (auto& t : a.t) t.c = t.c * inv;
    return a;
}

ModPoly to_modpoly(const Poly& p, int comp, const ModOrder& ord) {
    std::vector<ModTerm> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back(ModTerm{comp, t.m, t.c});
    return mod_normalize(std::move(ts), ord);
}

ModPoly vec_to_modpoly(const std::vector<Poly>& v, int comp0, const ModOrder& ord) {
    std::vector<ModTerm> ts;
    for (int i = 0; i < (int)v.size(); ++i)
        for (const auto& t : v[i].terms()) ts.push_back(ModTerm{comp0 + i, t.m, t.c});
    return mod_normalize(std::move(ts), ord);
}

std::vector<Poly> modpoly_to_vec(const ModPoly& f, const RingP& r, int comp0, int n) {
    std::vector<std::vector<Term>> parts(n);
    for (const auto& t : f.t) {
        int c = t.comp - comp0;
        if (c < 0 || c >= n) continue;
        parts[c].push_back(Term{t.m, t.c});
    }
    std::vector<Poly> out;
    out.reserve(n);
    for (auto& p : parts) out.push_back(Poly::from_terms(r, std::move(p)));
    return out;
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

static void check_bound(const ModPoly& f, int bound) {
    if (bound <= 0) return;
    for (const auto& t : f.t)
        if (mono_deg(t.m) > bound)
            throw DegreeBoundExceeded("intermediate degree " + std::to_string(mono_deg(t.m))
                                      + " exceeds bound " + std::to_string(bound));
}

// full normal form; when sugars are given, *fsugar is updated alongside
static ModPoly reduce_full(ModPoly work, const std::vector<ModPoly>& basis,
                           const std::vector<int>* sugars, int* fsugar, const ModOrder& ord,
                           int bound) {
    std::vector<ModTerm> done;
    while (!work.is_zero()) {
        const ModTerm& lt = work.t.front();
        const ModPoly* red = nullptr;
        int red_i = -1;
        for (int i = 0; i < (int)basis.size(); ++i) {
            const ModPoly& g = basis[i];
            if (g.is_zero()) continue;
            const ModTerm& gl = g.lt();
            if (gl.comp == lt.comp && mono_divides(gl.m, lt.m)) {
                red = &g;
                red_i = i;
                break;
            }
        }
        if (!red) {
            done.push_back(lt);
            work.t.erase(work.t.begin());
            continue;
        }
        Monomial mult = mono_div(lt.m, red->lt().m);
        Scalar coef = lt.c * red->lt().c.inv();
        ModPoly sub = mod_mul_term(*red, mult, -coef);
        check_bound(sub, bound);
        work = mod_add(work, sub, ord);
        if (sugars && fsugar)
            *fsugar = std::max(*fsugar, (*sugars)[red_i] + mono_deg(mult));
    }
    ModPoly out;
    out.t = std::move(done);
    return out;
}

ModPoly nf_mod(ModPoly f, const ModGB& gb, int degree_bound) {
    return reduce_full(std::move(f), gb.basis, nullptr, nullptr, gb.ord, degree_bound);
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

static int mod_sugar(const ModPoly& f) {
    int s = 0;
    for (const auto& t : f.t) s = std::max(s, mono_deg(t.m));
    return s;
}

static bool single_component(const ModPoly& f, int comp) {
    for (const auto& t : f.t)
        if (t.comp != comp) return false;
    return true;
}

namespace {
struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
    int deg;
};
} // namespace

ModGB buchberger_mod(std::vector<ModPoly> gens, int ncomps, ModOrder ord, int degree_bound) {
    std::vector<ModPoly> basis;
    std::vector<int> sugar;
    for (auto& g : gens) {
        ModPoly n = mod_normalize(std::move(g.t), ord);
        if (n.is_zero()) continue;
        sugar.push_back(mod_sugar(n));
        basis.push_back(mod_monic(std::move(n)));
    }

    std::vector<Pair> queue;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[i].lt().comp != basis[j].lt().comp) continue;
            Monomial l = mono_lcm(basis[i].lt().m, basis[j].lt().m);
            int s = std::max(sugar[i] + mono_deg(l) - mono_deg(basis[i].lt().m),
                             sugar[j] + mono_deg(l) - mono_deg(basis[j].lt().m));
            queue.push_back(Pair{i, j, std::move(l), s, 0});
            queue.back().deg = mono_deg(queue.back().lcm);
        }
    };
    for (int j = 0; j < (int)basis.size(); ++j) add_pairs(j);

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.ring_order.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = std::move(*it);
        queue.erase(it);

        const ModPoly& f = basis[p.i];
        const ModPoly& g = basis[p.j];
        // product criterion, valid when both elements live in one shared component
        bool coprime = true;
        for (size_t k = 0; k < p.lcm.size(); ++k)
            if (f.lt().m[k] != 0 && g.lt().m[k] != 0) { coprime = false; break; }
        if (coprime && single_component(f, f.lt().comp) && single_component(g, g.lt().comp))
            continue;

        Monomial mf = mono_div(p.lcm, f.lt().m);
        Monomial mg = mono_div(p.lcm, g.lt().m);
        ModPoly s = mod_add(mod_mul_term(f, mf, Scalar::one(f.lt().c.field())),
                            mod_mul_term(g, mg, -Scalar::one(g.lt().c.field())), ord);
        check_bound(s, degree_bound);
        int ssugar = p.sugar;
        ModPoly h = reduce_full(std::move(s), basis, &sugar, &ssugar, ord, degree_bound);
        if (h.is_zero()) continue;
        basis.push_back(mod_monic(std::move(h)));
        sugar.push_back(ssugar);
        add_pairs((int)basis.size() - 1);
    }

    // minimalize: walk leads from small to large, drop anything a kept lead divides
    std::vector<int> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return ord.cmp(basis[a].lt(), basis[b].lt()) < 0; });
    std::vector<ModPoly> kept;
    for (int i : idx) {
        const ModTerm& lt = basis[i].lt();
        bool divisible = false;
        for (const auto& k : kept) {
            if (k.lt().comp == lt.comp && mono_divides(k.lt().m, lt.m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(basis[i]);
    }
    std::reverse(kept.begin(), kept.end()); // largest lead first
    // tail-reduce each element against the others
    std::vector<ModPoly> reduced;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModPoly> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModPoly h = reduce_full(kept[i], others, nullptr, nullptr, ord, degree_bound);
        reduced.push_back(mod_monic(std::move(h)));
    }
    ModGB out;
    out.ord = ord;
    out.ncomps = ncomps;
    out.basis = std::move(reduced);
    out.sugar.clear();
    for (const auto& b : out.basis) out.sugar.push_back(mod_sugar(b));
    return out;
}

// ---------------------------------------------------------------------------
// ring-level wrappers
// ---------------------------------------------------------------------------

static int effective_bound(int degree_bound) {
    return degree_bound > 0 ? degree_bound : limits().degree_bound;
}

std::vector<Poly> raw_ideal_gb(const RingP& r, const std::vector<Poly>& gens, Order order,
                               int degree_bound) {
    ModOrder ord{order, 1};
    std::vector<ModPoly> mgens;
    for (const auto& g : gens)
        if (!g.is_zero()) mgens.push_back(to_modpoly(g, 0, ord));
    ModGB gb = buchberger_mod(std::move(mgens), 1, ord, effective_bound(degree_bound));
    std::vector<Poly> out;
    for (const auto& b : gb.basis) out.push_back(modpoly_to_vec(b, r, 0, 1)[0]);
    return out;
}

ReducedGB buchberger(const RingP& r, const std::vector<Poly>& gens, Order order,
                     int degree_bound) {
    int bound = effective_bound(degree_bound);
    ModOrder ord{order, 1};
    std::vector<ModPoly> mgens;
    for (const auto& g : gens) {
        check_same_ring(r, g.ring());
        if (!g.is_zero()) mgens.push_back(to_modpoly(g, 0, ord));
    }
    for (const auto& g : r->rel_gb) mgens.push_back(to_modpoly(g, 0, ord));
    auto mgb = std::make_shared<ModGB>(buchberger_mod(std::move(mgens), 1, ord, bound));
    ReducedGB out;
    out.ring = r;
    out.order = order;
    out.degree_bound = bound;
    for (const auto& b : mgb->basis) out.polys.push_back(modpoly_to_vec(b, r, 0, 1)[0]);
    out.engine = std::move(mgb);
    return out;
}

Poly normal_form(const Poly& f, const ReducedGB& gb) {
    check_same_ring(f.ring(), gb.ring);
    if (!gb.engine) throw internal_error("normal_form against a GB without engine data");
    ModPoly m = to_modpoly(f, 0, gb.engine->ord);
    ModPoly nf = nf_mod(std::move(m), *gb.engine, gb.degree_bound);
    return modpoly_to_vec(nf, gb.ring, 0, 1)[0];
}

bool in_ideal(const Poly& f, const ReducedGB& gb) { return normal_form(f, gb).is_zero(); }

Poly nf_ring(const Poly& f) {
    const RingP& r = f.ring();
    if (r->rel_gb.empty()) return f;
    auto mgb = ring_cache<const ModGB>(r, "ringgb", [&]() {
        auto g = std::make_shared<ModGB>();
        g->ord = ModOrder{r->order, 1};
        g->ncomps = 1;
        for (const auto& rel : r->rel_gb) {
            g->basis.push_back(to_modpoly(rel, 0, g->ord));
            g->sugar.push_back(mod_sugar(g->basis.back()));
        }
        return std::shared_ptr<const ModGB>(std::move(g));
    });
    ModPoly m = to_modpoly(f, 0, mgb->ord);
    ModPoly nf = nf_mod(std::move(m), *mgb, limits().degree_bound);
    return modpoly_to_vec(nf, r, 0, 1)[0];
}

std::vector<Poly> eliminate(const RingP& r, const std::vector<Poly>& gens, int nbig,
                            int degree_bound) {
    Order block = Order::block(nbig);
    ModOrder ord{block, 1};
    std::vector<ModPoly> mgens;
    for (const auto& g : gens) {
        check_same_ring(r, g.ring());
        if (!g.is_zero()) mgens.push_back(to_modpoly(g, 0, ord));
    }
    for (const auto& g : r->rel_gb) mgens.push_back(to_modpoly(g, 0, ord));
    ModGB gb = buchberger_mod(std::move(mgens), 1, ord, effective_bound(degree_bound));
    std::vector<Poly> out;
    for (const auto& b : gb.basis) {
        bool small = true;
        for (const auto& t : b.t) {
            for (int i = 0; i < nbig && small; ++i)
                if (t.m[i] != 0) small = false;
            if (!small) break;
        }
        if (small) out.push_back(modpoly_to_vec(b, r, 0, 1)[0]);
    }
    return out;
}

ReducedGB ringmap_kernel(const RingMap& u) {
    auto gr = graph_ring(u);
    std::vector<Poly> gens;
    for (const auto& g : gr->joint->rel_gb) {
        auto s = gr->to_src(g);
        if (s && !s->is_zero()) gens.push_back(*s);
    }
    return buchberger(u.src, gens, u.src->order, 0);
}

// ---------------------------------------------------------------------------
// module solves: syzygies, lifts, normal forms
// ---------------------------------------------------------------------------

static std::string mat_key(const char* what, const Mat& m) {
    std::ostringstream os;
    os << what << "|" << m.rows() << "x" << m.cols() << "|" << m.str();
    return os.str();
}

// GB of the module generated by (col_j, e_j) plus ring relations everywhere;
// components [0, rows) hold values, [rows, rows+cols) hold the tags
static std::shared_ptr<const ModGB> tagged_gb(const Mat& m) {
    const RingP& r = m.ring();
    return ring_cache<const ModGB>(r, mat_key("tgb", m), [&]() {
        int rows = m.rows(), cols = m.cols();
        ModOrder ord{r->order, rows};
        int ncomps = rows + cols;
        std::vector<ModPoly> gens;
        for (int j = 0; j < cols; ++j) {
            ModPoly g = vec_to_modpoly(m.col(j), 0, ord);
            std::vector<ModTerm> ts = g.t;
            ts.push_back(ModTerm{rows + j, mono_one(ring_nvars(r)), Scalar::one(r->field)});
            gens.push_back(mod_normalize(std::move(ts), ord));
        }
        for (const auto& rel : r->rel_gb)
            for (int c = 0; c < ncomps; ++c) gens.push_back(to_modpoly(rel, c, ord));
        return std::make_shared<const ModGB>(
            buchberger_mod(std::move(gens), ncomps, ord, limits().degree_bound));
    });
}

// GB of the column span itself (no tags), relations folded
static std::shared_ptr<const ModGB> value_gb(const Mat& m) {
    const RingP& r = m.ring();
    return ring_cache<const ModGB>(r, mat_key("vgb", m), [&]() {
        int rows = m.rows(), cols = m.cols();
        ModOrder ord{r->order, rows};
        std::vector<ModPoly> gens;
        for (int j = 0; j < cols; ++j) {
            ModPoly g = vec_to_modpoly(m.col(j), 0, ord);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
        for (const auto& rel : r->rel_gb)
            for (int c = 0; c < rows; ++c) gens.push_back(to_modpoly(rel, c, ord));
        return std::make_shared<const ModGB>(
            buchberger_mod(std::move(gens), rows, ord, limits().degree_bound));
    });
}

static Mat drop_zero_cols(const Mat& m) {
    std::vector<int> keep;
    for (int j = 0; j < m.cols(); ++j) {
        bool z = true;
        for (int i = 0; i < m.rows() && z; ++i) z = m.at(i, j).is_zero();
        if (!z) keep.push_back(j);
    }
    Mat out(m.ring(), m.rows(), (int)keep.size());
    for (int j = 0; j < (int)keep.size(); ++j) out.set_col(j, m.col(keep[j]));
    return out;
}

Mat syz(const Mat& m) {
    const RingP& r = m.ring();
    int rows = m.rows(), cols = m.cols();
    auto gb = tagged_gb(m);
    std::vector<std::vector<Poly>> found;
    for (const auto& b : gb->basis) {
        if (b.is_zero() || b.lt().comp < rows) continue; // value part present
        std::vector<Poly> tag = modpoly_to_vec(b, r, rows, cols);
        bool zero = true;
        for (auto& e : tag) {
            e = nf_ring(e);
            if (!e.is_zero()) zero = false;
        }
        if (!zero) found.push_back(std::move(tag));
    }
    Mat out(r, cols, (int)found.size());
    for (int j = 0; j < (int)found.size(); ++j) out.set_col(j, found[j]);
    return out;
}

std::optional<Mat> lift(const Mat& m, const Mat& t) {
    check_same_ring(m.ring(), t.ring());
    if (m.rows() != t.rows()) throw internal_error("lift: shape mismatch");
    const RingP& r = m.ring();
    int rows = m.rows(), cols = m.cols();
    auto gb = tagged_gb(m);
    Mat x(r, cols, t.cols());
    for (int j = 0; j < t.cols(); ++j) {
        ModPoly w = vec_to_modpoly(t.col(j), 0, gb->ord);
        ModPoly nf = nf_mod(std::move(w), *gb, limits().degree_bound);
        for (const auto& term : nf.t)
            if (term.comp < rows) return std::nullopt; // value residue: no solution
        std::vector<Poly> tag = modpoly_to_vec(nf, r, rows, cols);
        for (int i = 0; i < cols; ++i) x.at(i, j) = nf_ring(-tag[i]);
    }
    return x;
}

Mat modsyz(const Mat& m, const Mat& modulus) {
    check_same_ring(m.ring(), modulus.ring());
    if (m.rows() != modulus.rows()) throw internal_error("modsyz: shape mismatch");
    Mat s = syz(m.hstack(modulus));
    return drop_zero_cols(s.rows_slice(0, m.cols()));
}

std::optional<Mat> modlift(const Mat& m, const Mat& modulus, const Mat& t) {
    check_same_ring(m.ring(), modulus.ring());
    auto x = lift(m.hstack(modulus), t);
    if (!x) return std::nullopt;
    return x->rows_slice(0, m.cols());
}

bool is_unit(const Poly& f) { return unit_inverse(f).has_value(); }

std::optional<Poly> unit_inverse(const Poly& f) {
    const RingP& r = f.ring();
    Mat m(r, 1, 1);
    m.at(0, 0) = f;
    Mat one(r, 1, 1);
    one.at(0, 0) = Poly::one(r);
    auto x = lift(m, one);
    if (!x) return std::nullopt;
    return x->at(0, 0);
}

std::vector<Poly> nf_module(const std::vector<Poly>& v, const Mat& m) {
    const RingP& r = m.ring();
    if ((int)v.size() != m.rows()) throw internal_error("nf_module: shape mismatch");
    auto gb = value_gb(m);
    ModPoly w = vec_to_modpoly(v, 0, gb->ord);
    ModPoly nf = nf_mod(std::move(w), *gb, limits().degree_bound);
    return modpoly_to_vec(nf, r, 0, m.rows());
}

bool in_module(const std::vector<Poly>& v, const Mat& m) {
    for (const auto& e : nf_module(v, m))
        if (!e.is_zero()) return false;
    return true;
}

Mat subring_syz(const Mat& cols, int nbig) {
    const RingP& r = cols.ring();
    if (r->order.kind != Order::BLOCK || r->order.split != nbig)
        throw internal_error("subring_syz needs a block order splitting at nbig");
    int rows = cols.rows(), nc = cols.cols();
    auto gb = tagged_gb(cols);
    std::vector<std::vector<Poly>> found;
    for (const auto& b : gb->basis) {
        if (b.is_zero() || b.lt().comp < rows) continue;
        bool small = true;
        for (int i = 0; i < nbig && small; ++i)
            if (b.lt().m[i] != 0) small = false;
        if (!small) continue; // tag coefficients touch the big block
        std::vector<Poly> tag = modpoly_to_vec(b, r, rows, nc);
        bool zero = true;
        for (const auto& e : tag)
            if (!e.is_zero()) zero = false;
        if (!zero) found.push_back(std::move(tag));
    }
    Mat out(r, nc, (int)found.size());
    for (int j = 0; j < (int)found.size(); ++j) out.set_col(j, found[j]);
    return out;
}

} // namespace rigidcalc
