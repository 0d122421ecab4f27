#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkz {

using Q = mpq_class;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string q_str(const Q& q);

// Element of Q(zeta) with zeta a primitive ord-th root of unity, stored in the
// power basis modulo the ord-th cyclotomic polynomial. ord == 0 marks a plain
// rational that combines with any order.
class Cyc {
public:
    Cyc() : c_{Q(0)} {}
    Cyc(long v) : c_{Q(v)} {}
    Cyc(const Q& v) : c_{v} {}
    Cyc(int ord, std::vector<Q> c);

    static Cyc zeta(int ord, long k = 1);

    int ord() const { return ord_; }
    const std::vector<Q>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Q rational() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }
    Cyc inv() const;
    Cyc pow(long e) const;

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend bool operator==(const Cyc& a, const Cyc& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    void lift(int ord);
    void reduce();

    int ord_ = 0;
    std::vector<Q> c_;
};

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int n);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }
inline bool is_zero(const Cyc& c) { return c.is_zero(); }
inline std::string coeff_str(const Q& q) { return q_str(q); }
inline std::string coeff_str(const Cyc& c) { return c.str(); }

// Exact rational with a checked division, for pointwise evaluation.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(const Q& v) : v_(v) {}
    const Q& q() const { return v_; }
    Rat operator-() const { return Rat(Q(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    bool is_zero() const { return sgn(v_) == 0; }

private:
    Q v_;
};

struct PoleHit : AlgebraError {
    PoleHit() : AlgebraError("division by zero at sample point") {}
};

// Conversion of a rational constant into an arbitrary scalar type.
template <class T> struct Scalar;
template <> struct Scalar<Q> {
    static Q from_q(const Q& q) { return q; }
};
template <> struct Scalar<Rat> {
    static Rat from_q(const Q& q) { return Rat(q); }
};
template <> struct Scalar<Cyc> {
    static Cyc from_q(const Q& q) { return Cyc(q); }
};
template <> struct Scalar<std::complex<double>> {
    static std::complex<double> from_q(const Q& q) { return {q.get_d(), 0.0}; }
};

template <class T> T from_q(const Q& q) { return Scalar<T>::from_q(q); }

template <class T> T ipow(T x, long e)
{
    if (e < 0) return T(1) / ipow(x, -e);
    T r(1);
    while (e) {
        if (e & 1) r *= x;
        e >>= 1;
        if (e) x *= x;
    }
    return r;
}

}  // namespace qkz
