#include "rigidcalc/scalar.hpp"

namespace rigidcalc {

static bool is_prime64(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(int64_t p) {
    if (p < 2 || p >= (int64_t(1) << 31) || !is_prime64(p))
        throw ParseError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    return Field{GFP, p};
}

static int64_t mod_pos(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// extended euclid inverse mod p
static int64_t mod_inv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw NoSolution("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
    return mod_pos(t, p);
}

Scalar Scalar::one(const Field& f) {
    Scalar s; s.f_ = f;
    if (f.kind == Field::QQ) s.q_ = 1; else s.r_ = 1 % f.p;
    return s;
}

Scalar Scalar::of_int(const Field& f, long n) {
    Scalar s; s.f_ = f;
    if (f.kind == Field::QQ) s.q_ = n; else s.r_ = mod_pos(n, f.p);
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    Scalar s; s.f_ = f;
    if (f.kind == Field::QQ) {
        s.q_ = mpq_class(text);
        s.q_.canonicalize();
    } else {
        auto slash = text.find('/');
        mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
        int64_t n = mod_pos(mpz_class(num % f.p).get_si(), f.p);
        if (slash != std::string::npos) {
            mpz_class den(text.substr(slash + 1));
            int64_t d = mod_pos(mpz_class(den % f.p).get_si(), f.p);
            n = mod_pos(n * mod_inv(d, f.p), f.p);
        }
        s.r_ = n;
    }
    return s;
}

bool Scalar::is_zero() const { return f_.kind == Field::QQ ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.kind == Field::QQ ? q_ == 1 : r_ == 1 % f_.p; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.kind == Field::QQ) s.q_ = q_ + o.q_; else s.r_ = mod_pos(r_ + o.r_, f_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.kind == Field::QQ) s.q_ = q_ - o.q_; else s.r_ = mod_pos(r_ - o.r_, f_.p);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.kind == Field::QQ) s.q_ = q_ * o.q_;
    else s.r_ = mod_pos((__int128)r_ * o.r_ % f_.p, f_.p);
    return s;
}

Scalar Scalar::inv() const {
    Scalar s; s.f_ = f_;
    if (f_.kind == Field::QQ) {
        if (q_ == 0) throw NoSolution("division by zero");
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inv(r_, f_.p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar s; s.f_ = f_;
    if (f_.kind == Field::QQ) s.q_ = -q_; else s.r_ = mod_pos(-r_, f_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    return f_.kind == Field::QQ ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (f_.kind == Field::QQ) return q_.get_str();
    return std::to_string(r_);
}

} // namespace rigidcalc
