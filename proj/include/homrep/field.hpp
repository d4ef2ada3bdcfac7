#ifndef HOMREP_FIELD_HPP
#define HOMREP_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "homrep/error.hpp"

namespace homrep {

/// Coefficient field: the rationals (characteristic 0) or GF(p) for a prime p.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    static Field gf(unsigned long p) {
        mpz_class z(static_cast<unsigned long>(p));
        if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
            fail(Errc::bad_argument, "GF(p) requires a prime, got p=" + std::to_string(p));
        Field f;
        f.p_ = p;
        return f;
    }

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

private:
    unsigned long p_;
};

inline void require_same_field(const Field& a, const Field& b, const char* where) {
    if (a != b)
        fail(Errc::field_mismatch,
             std::string(where) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

/// Exact field element. Rationals are reduced with positive denominator
/// (mpq canonical form); GF(p) values are residues in [0, p).
class Scalar {
public:
    Scalar() : f_(Field::rationals()), v_(0) {}
    explicit Scalar(long n) : f_(Field::rationals()), v_(n) {}
    Scalar(const Field& f, long n) : f_(f), v_(n) { normalize(); }
    Scalar(const Field& f, mpq_class v) : f_(f), v_(std::move(v)) { normalize(); }

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    /// Parse "p/q" or "p". GF(p) values are reduced mod p (q must be a unit).
    static Scalar parse(const Field& f, const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            fail(Errc::schema_violation, "bad scalar literal: '" + s + "'");
        q.canonicalize();
        if (!f.is_rational()) {
            // clear the denominator mod p
            Scalar num(f, mpq_class(q.get_num()));
            Scalar den(f, mpq_class(q.get_den()));
            return num / den;
        }
        return Scalar(f, q);
    }

    const Field& field() const { return f_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const {
        Scalar r(*this);
        r.v_ = -r.v_;
        r.normalize();
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        require_same_field(f_, o.f_, "scalar add");
        v_ += o.v_;
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        require_same_field(f_, o.f_, "scalar sub");
        v_ -= o.v_;
        normalize();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        require_same_field(f_, o.f_, "scalar mul");
        v_ *= o.v_;
        normalize();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) fail(Errc::bad_argument, "division by zero");
        Scalar r(*this);
        if (f_.is_rational()) {
            r.v_ = 1 / v_;
        } else {
            mpz_class p(f_.characteristic()), inv;
            int ok = mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
            ensure(ok != 0, "residue invertible mod p");
            r.v_ = mpq_class(inv);
            r.normalize();
        }
        return r;
    }

    bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical string: "p/q" with reduced q > 0, or plain residue for GF(p).
    std::string str() const {
        if (!f_.is_rational()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

private:
    void normalize() {
        v_.canonicalize();
        if (!f_.is_rational()) {
            ensure(v_.get_den() == 1, "GF(p) scalar has unit denominator");
            mpz_class p(f_.characteristic());
            mpz_class r;
            mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
            v_ = mpq_class(r);
        }
    }

    Field f_;
    mpq_class v_;
};

} // namespace homrep

#endif
