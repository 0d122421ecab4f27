#pragma once

#include "qkz/poly.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace qkz {

struct IdenticallyZeroDenominator : AlgebraError {
    IdenticallyZeroDenominator() : AlgebraError("denominator factor vanishes identically") {}
};
struct InexactDivision : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Numerator over a product of monic linear forms. Reduced: no denominator
// factor divides the numerator.
template <class C>
class RatFunc {
public:
    using P = Poly<C>;
    using Den = std::map<P, int>;

    RatFunc() = default;
    RatFunc(long c) : num_(c) {}
    RatFunc(const C& c) : num_(c) {}
    RatFunc(const P& p) : num_(p) {}

    static RatFunc var(int v) { return RatFunc(P::var(v)); }
    static RatFunc make(P num, const std::vector<std::pair<P, int>>& den)
    {
        RatFunc r(std::move(num));
        for (auto& [L, k] : den) r.absorb_den(L, k);
        r.reduce();
        return r;
    }

    const P& num() const { return num_; }
    const Den& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    const P& as_poly() const
    {
        if (!den_.empty()) throw AlgebraError("rational function is not a polynomial: " + str());
        return num_;
    }
    P den_poly() const
    {
        P d(1);
        for (auto& [L, k] : den_) d *= L.pow(k);
        return d;
    }

    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        if (!r.fac_.empty()) r.fac_.push_back(P(-1));
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        RatFunc r(a.num_ * b.num_);
        r.fac_ = a.factors();
        for (auto& f : b.factors()) r.fac_.push_back(f);
        r.den_ = a.den_;
        for (auto& [L, k] : b.den_) r.den_[L] += k;
        r.reduce();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero()) throw AlgebraError("division by the zero function");
        RatFunc r(a.num_ * b.den_poly());
        r.fac_ = a.factors();
        for (auto& [L, k] : b.den_)
            for (int i = 0; i < k; ++i) r.fac_.push_back(L);
        r.den_ = a.den_;
        for (auto& f : b.factors()) {
            if (f.is_const() || f.is_linear()) {
                r.absorb_den(f, 1);
                continue;
            }
            auto q = r.num_.div_exact(f);
            if (!q) throw InexactDivision("divisor numerator is not a product of linear forms: " + f.str());
            r.num_ = *q;
            r.fac_.clear();
        }
        r.reduce();
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc rename(const std::map<int, int>& ren) const
    {
        RatFunc r(num_.rename(ren));
        for (auto& f : fac_) r.fac_.push_back(f.rename(ren));
        for (auto& [L, k] : den_) r.absorb_den(L.rename(ren), k);
        return r;
    }

    // Substitution of polynomials; each denominator image must stay linear.
    RatFunc subst(const std::map<int, P>& b) const
    {
        RatFunc r(num_.subst(b));
        for (auto& f : fac_) r.fac_.push_back(f.subst(b));
        for (auto& [L, k] : den_) r.absorb_den(L.subst(b), k);
        r.reduce();
        return r;
    }
    RatFunc subst(int v, const P& val) const { return subst(std::map<int, P>{{v, val}}); }

    // General substitution of rational functions, through arithmetic.
    RatFunc subst_rf(const std::map<int, RatFunc>& b) const
    {
        int n = 0;
        for (int v : vars()) n = std::max(n, v + 1);
        std::vector<RatFunc> vals(n);
        for (int v = 0; v < n; ++v) {
            auto it = b.find(v);
            vals[v] = it == b.end() ? var(v) : it->second;
        }
        return eval(vals);
    }

    template <class T>
    T eval(const std::vector<T>& byvar) const
    {
        T r = num_.template eval<T>(byvar);
        for (auto& [L, k] : den_) r = r / ipow(L.template eval<T>(byvar), k);
        return r;
    }

    std::set<int> vars() const
    {
        auto s = num_.vars();
        for (auto& [L, k] : den_)
            for (int v : L.vars()) s.insert(v);
        return s;
    }

    // Degree in v of the numerator minus that of the denominator.
    int deg_balance(int v) const
    {
        int d = num_.deg(v);
        for (auto& [L, k] : den_) d -= k * L.deg(v);
        return d;
    }
    int pole_order(const P& L) const
    {
        auto it = den_.find(L);
        return it == den_.end() ? 0 : it->second;
    }

    std::string str() const
    {
        if (den_.empty()) return num_.str();
        std::vector<std::string> fs;
        for (auto& [L, k] : den_) fs.push_back("(" + L.str() + ")" + (k > 1 ? "^" + std::to_string(k) : ""));
        std::sort(fs.begin(), fs.end());
        std::string d;
        for (auto& f : fs) d += (d.empty() ? "" : "*") + f;
        return "(" + num_.str() + ")/(" + d + ")";
    }

private:
    // Normalize L to monic in its leading variable and record it with
    // multiplicity k; constants are folded into the numerator.
    void absorb_den(const P& L, int k)
    {
        if (k == 0) return;
        if (L.is_zero()) throw IdenticallyZeroDenominator();
        if (L.is_const()) {
            C s = ipow<C>(C(1) / L.const_term(), k);
            num_ *= s;
            if (!fac_.empty()) fac_.push_back(P(s));
            return;
        }
        if (!L.is_linear()) throw AlgebraError("non-linear denominator factor: " + L.str());
        int v = L.lead_var();
        C lc = L.coeff({{v, 1}});
        P Ln = L.scaled(C(1) / lc);
        C s = ipow<C>(C(1) / lc, k);
        num_ *= s;
        if (!fac_.empty()) fac_.push_back(P(s));
        den_[Ln] += k;
    }

    void reduce()
    {
        if (num_.is_zero()) {
            den_.clear();
            fac_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.div_linear(it->first);
                if (!q) break;
                num_ = std::move(*q);
                drop_factor(it->first);
                --it->second;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
    }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool sub)
    {
        if (b.is_zero()) return a;
        if (a.is_zero()) return sub ? -b : b;
        RatFunc r;
        if (a.den_ == b.den_) {
            r.num_ = sub ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
            r.reduce();
            return r;
        }
        Den lcd = a.den_;
        for (auto& [L, k] : b.den_) lcd[L] = std::max(lcd[L], k);
        auto lift = [&](const RatFunc& f) {
            P n = f.num_;
            for (auto& [L, k] : lcd) {
                auto it = f.den_.find(L);
                int have = it == f.den_.end() ? 0 : it->second;
                if (k > have) n *= L.pow(k - have);
            }
            return n;
        };
        r.num_ = sub ? lift(a) - lift(b) : lift(a) + lift(b);
        r.den_ = std::move(lcd);
        r.reduce();
        return r;
    }

    // Known factorization of num_ (product equals num_); empty if unknown.
    std::vector<P> factors() const { return fac_.empty() ? std::vector<P>{num_} : fac_; }
    void drop_factor(const P& L)
    {
        if (fac_.empty()) return;
        for (auto& f : fac_) {
            if (!f.is_linear()) continue;
            C c = f.coeff({{L.lead_var(), 1}});
            if (!qkz::is_zero(c) && f == L.scaled(c)) {
                f = P(c);
                return;
            }
        }
        for (auto& f : fac_) {
            if (f.is_const()) continue;
            if (auto q = f.div_linear(L)) {
                f = *q;
                return;
            }
        }
        fac_.clear();
    }

    P num_;
    std::vector<P> fac_;
    Den den_;
};

using QRat = RatFunc<Q>;
using CRat = RatFunc<Cyc>;

template <> struct Scalar<QRat> {
    static QRat from_q(const Q& q) { return QRat(q); }
};
template <> struct Scalar<CRat> {
    static CRat from_q(const Q& q) { return CRat(Cyc(q)); }
};
template <> struct Scalar<QPoly> {
    static QPoly from_q(const Q& q) { return QPoly(q); }
};
template <> struct Scalar<CPoly> {
    static CPoly from_q(const Q& q) { return CPoly(Cyc(q)); }
};

inline QRat qvar(int v) { return QRat::var(v); }

// Skew-symmetrization over the given variables: sum over permutations of
// sign times the renamed function. Cost is r! renamings plus additions.
template <class C>
RatFunc<C> skew_symmetrize(const RatFunc<C>& f, const std::vector<int>& vars);
template <class C>
Poly<C> skew_symmetrize(const Poly<C>& f, const std::vector<int>& vars);

enum class EqMode { Deterministic, Probabilistic };

struct EqConfig {
    EqMode mode = EqMode::Deterministic;
    unsigned seed = 20240601u;
    int trials = 8;
    long lo = 1000;
    long hi = 1000000;
};

// Random integer sample point avoiding all listed linear denominators.
std::vector<Rat> sample_point(const std::set<int>& vars, std::mt19937_64& rng, long lo, long hi);

bool equals(const QRat& f, const QRat& g, const EqConfig& cfg = {});

QRat parse_qrat(const std::string& s);
CRat parse_crat(const std::string& s);

}  // namespace qkz
