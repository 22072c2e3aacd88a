#include "rigidcalc/poly.hpp"

#include <algorithm>

namespace rigidcalc {

Poly Poly::constant(RingP r, Scalar c) {
    Poly p;
    p.ring_ = std::move(r);
    if (!c.is_zero()) p.terms_.push_back({mono_one(ring_nvars(p.ring_)), std::move(c)});
    return p;
}

Poly Poly::var(RingP r, int i, int exp) {
    Poly p;
    p.ring_ = std::move(r);
    Monomial m = mono_one(ring_nvars(p.ring_));
    m[i] = exp;
    p.terms_.push_back({std::move(m), Scalar::one(ring_field(p.ring_))});
    return p;
}

Poly Poly::monomial(RingP r, Monomial m, Scalar c) {
    Poly p;
    p.ring_ = std::move(r);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(RingP r, std::vector<Term> terms) {
    const Order& ord = ring_order(r);
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    Poly p;
    p.ring_ = std::move(r);
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c = p.terms_.back().c + t.c;
            if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Poly::lt() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.front();
}

int Poly::deg() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, mono_deg(t.m));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    const Order& ord = ring_order(ring_);
    Poly p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) p.terms_.push_back({terms_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Poly Poly::operator-() const {
    Poly p;
    p.ring_ = ring_;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m, -t.c});
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
    Poly p;
    p.ring_ = ring_;
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({mono_mul(t.m, m), t.c * c});
    return p;
}

Poly Poly::scale(const Scalar& c) const { return mul_term(mono_one(ring_nvars(ring_)), c); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly acc = Poly::zero(ring_);
    // multiply by the shorter factor termwise
    const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : a.terms_) acc = acc + b.mul_term(t.m, t.c);
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_same(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::derivative(int i) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m[i] == 0) continue;
        Term d{t.m, t.c * Scalar::of_int(ring_field(ring_), t.m[i])};
        d.m[i] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != static_cast<size_t>(ring_nvars(ring_)))
        throw RingMismatch("substitution needs one image per variable");
    RingP target = images.empty() ? ring_ : images[0].ring();
    Poly acc = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly m = Poly::constant(target, t.c);
        for (size_t i = 0; i < images.size(); ++i) {
            for (int32_t e = 0; e < t.m[i]; ++e) m = m * images[i];
        }
        acc = acc + m;
    }
    return acc;
}

Poly Poly::reinterpret(RingP other) const {
    if (ring_nvars(other) != ring_nvars(ring_))
        throw RingMismatch("reinterpret requires equal variable counts");
    std::vector<Term> ts = terms_;
    return from_terms(std::move(other), std::move(ts));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_var_name(ring_, static_cast<int>(i));
            if (t.m[i] > 1) vars += "^" + std::to_string(t.m[i]);
        }
        if (vars.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            out += cs + "*" + vars;
        }
    }
    return out;
}

DivModResult poly_divmod(const Poly& f, const std::vector<Poly>& divisors) {
    for (const auto& d : divisors) {
        check_same_ring(f.ring(), d.ring());
        if (d.is_zero()) throw NoSolution("division by zero polynomial");
    }
    DivModResult res;
    res.quotients.assign(divisors.size(), Poly::zero(f.ring()));
    res.remainder = Poly::zero(f.ring());
    Poly h = f;
    while (!h.is_zero()) {
        bool divided = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            const Term& lt = divisors[i].lt();
            if (mono_divides(lt.m, h.lt().m)) {
                Monomial q = mono_div(h.lt().m, lt.m);
                Scalar c = h.lt().c / lt.c;
                res.quotients[i] = res.quotients[i] + Poly::monomial(f.ring(), q, c);
                h = h - divisors[i].mul_term(q, c);
                divided = true;
                break;
            }
        }
        if (!divided) {
            // move leading term to the remainder
            Poly lead = Poly::monomial(f.ring(), h.lt().m, h.lt().c);
            res.remainder = res.remainder + lead;
            h = h - lead;
        }
    }
    return res;
}

} // namespace rigidcalc
