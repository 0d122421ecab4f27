#pragma once

#include "qkz/coeff.hpp"
#include "qkz/vars.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qkz {

// Sparse monomial: (variable id, nonzero exponent) pairs sorted by id.
using Mono = std::vector<std::pair<int, int>>;

Mono mono_mul(const Mono& a, const Mono& b);
int mono_deg(const Mono& m, int v);
int mono_total(const Mono& m);
// Lexicographic order with smaller variable ids ranking higher.
bool mono_lex_greater(const Mono& a, const Mono& b);
std::string mono_str(const Mono& m);

inline bool coeff_less(const Q& a, const Q& b) { return a < b; }
bool coeff_less(const Cyc& a, const Cyc& b);

template <class C>
class Poly {
public:
    using Terms = std::map<Mono, C>;

    Poly() = default;
    Poly(long c) { add_term({}, C(c)); }
    Poly(const C& c) { add_term({}, c); }

    static Poly var(int v, int e = 1)
    {
        if (e < 0 && !VarTable::get().laurent(v)) throw AlgebraError("negative exponent on non-Laurent variable " + VarTable::get().name(v));
        Poly p;
        if (e == 0) p.add_term({}, C(1));
        else p.add_term({{v, e}}, C(1));
        return p;
    }
    static Poly monomial(const Mono& m, const C& c)
    {
        Poly p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_const() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    C const_term() const
    {
        auto it = t_.find(Mono{});
        return it == t_.end() ? C(0) : it->second;
    }
    C coeff(const Mono& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Mono& m, const C& c)
    {
        if (qkz::is_zero(c)) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second += c;
        if (qkz::is_zero(it->second)) t_.erase(it);
    }

    int deg(int v) const
    {
        int d = 0;
        bool any = false;
        for (auto& [m, c] : t_) {
            int e = mono_deg(m, v);
            d = any ? std::max(d, e) : e;
            any = true;
        }
        return d;
    }
    int min_deg(int v) const
    {
        int d = 0;
        bool any = false;
        for (auto& [m, c] : t_) {
            int e = mono_deg(m, v);
            d = any ? std::min(d, e) : e;
            any = true;
        }
        return d;
    }
    int total_deg() const
    {
        int d = 0;
        for (auto& [m, c] : t_) d = std::max(d, mono_total(m));
        return d;
    }
    std::set<int> vars() const
    {
        std::set<int> s;
        for (auto& [m, c] : t_)
            for (auto& [v, e] : m) s.insert(v);
        return s;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const C& s)
    {
        if (qkz::is_zero(s)) {
            t_.clear();
            return *this;
        }
        for (auto& [m, c] : t_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.is_const()) return b.scaled(a.const_term());
        if (b.is_const()) return a.scaled(b.const_term());
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly scaled(const C& s) const
    {
        Poly r = *this;
        r *= s;
        return r;
    }
    Poly pow(int e) const
    {
        if (e < 0) throw AlgebraError("negative power of a polynomial");
        Poly r(1), x = *this;
        while (e) {
            if (e & 1) r *= x;
            e >>= 1;
            if (e) x = x * x;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || i->second != j->second) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b)
    {
        if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
            if (coeff_less(i->second, j->second)) return true;
            if (coeff_less(j->second, i->second)) return false;
        }
        return false;
    }

    // Variable renaming; vars absent from the map are kept.
    Poly rename(const std::map<int, int>& ren) const
    {
        Poly r;
        for (auto& [m, c] : t_) {
            Mono nm;
            nm.reserve(m.size());
            for (auto& [v, e] : m) {
                auto it = ren.find(v);
                nm.emplace_back(it == ren.end() ? v : it->second, e);
            }
            std::sort(nm.begin(), nm.end());
            Mono merged;
            for (auto& p : nm) {
                if (!merged.empty() && merged.back().first == p.first) {
                    merged.back().second += p.second;
                    if (merged.back().second == 0) merged.pop_back();
                } else {
                    merged.push_back(p);
                }
            }
            r.add_term(merged, c);
        }
        return r;
    }

    // Ring homomorphism substituting polynomials for variables.
    Poly subst(const std::map<int, Poly>& b) const
    {
        if (b.empty()) return *this;
        std::map<std::pair<int, int>, Poly> cache;
        auto power = [&](int v, int e) -> const Poly& {
            auto key = std::make_pair(v, e);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            const Poly& base = b.at(v);
            Poly val;
            if (e >= 0) {
                val = base.pow(e);
            } else {
                if (base.size() != 1) throw AlgebraError("Laurent substitution needs a monomial image");
                auto& [bm, bc] = *base.t_.begin();
                Mono neg;
                for (auto& [w, f] : bm) neg.emplace_back(w, f * e);
                val = Poly::monomial(neg, ipow<C>(bc, e));
            }
            return cache.emplace(key, std::move(val)).first->second;
        };
        Poly r;
        for (auto& [m, c] : t_) {
            Mono keep;
            Poly factor(c);
            for (auto& [v, e] : m) {
                if (b.count(v)) factor = factor * power(v, e);
                else keep.emplace_back(v, e);
            }
            if (keep.empty()) r += factor;
            else r += factor * Poly::monomial(keep, C(1));
        }
        return r;
    }
    Poly subst(int v, const Poly& val) const { return subst(std::map<int, Poly>{{v, val}}); }

    // Evaluation with values indexed by variable id.
    template <class T>
    T eval(const std::vector<T>& byvar) const
    {
        T r(0);
        for (auto& [m, c] : t_) {
            T x = from_coeff<T>(c);
            for (auto& [v, e] : m) {
                if (size_t(v) >= byvar.size()) throw AlgebraError("no value for variable " + VarTable::get().name(v));
                x *= ipow(byvar[v], e);
            }
            r += x;
        }
        return r;
    }

    // Coefficients as a polynomial in v.
    std::map<int, Poly> collect(int v) const
    {
        std::map<int, Poly> out;
        for (auto& [m, c] : t_) {
            Mono rest;
            int e = 0;
            for (auto& p : m) {
                if (p.first == v) e = p.second;
                else rest.push_back(p);
            }
            out[e].add_term(rest, c);
        }
        return out;
    }

    bool is_linear() const
    {
        for (auto& [m, c] : t_) {
            if (m.size() > 1) return false;
            if (m.size() == 1 && m[0].second != 1) return false;
        }
        return total_deg() == 1;
    }
    // Smallest variable id carrying a degree-one term.
    int lead_var() const
    {
        int best = -1;
        for (auto& [m, c] : t_)
            if (m.size() == 1 && m[0].second == 1 && (best < 0 || m[0].first < best)) best = m[0].first;
        return best;
    }

    // Exact quotient by a linear form, or nullopt if it does not divide.
    std::optional<Poly> div_linear(const Poly& L) const
    {
        int v = L.lead_var();
        if (v < 0) throw AlgebraError("div_linear needs a linear form");
        C lc = L.coeff({{v, 1}});
        Poly rest = L - Poly::monomial({{v, 1}}, lc);
        auto cs = collect(v);
        if (cs.empty()) return Poly();
        if (cs.begin()->first < 0) return std::nullopt;
        int d = cs.rbegin()->first;
        if (d == 0) return std::nullopt;
        Poly cur = cs.count(d) ? cs[d] : Poly();
        Poly q;
        C inv = C(1) / lc;
        for (int k = d; k >= 1; --k) {
            Poly qk = cur.scaled(inv);
            q += qk * Poly::var(v, k - 1);
            Poly next = cs.count(k - 1) ? cs[k - 1] : Poly();
            cur = next - rest * qk;
        }
        if (!cur.is_zero()) return std::nullopt;
        return q;
    }

    // Exact multivariate division; nullopt when the remainder is nonzero.
    std::optional<Poly> div_exact(const Poly& d) const
    {
        if (d.is_zero()) throw AlgebraError("division by zero polynomial");
        if (d.is_const()) return scaled(C(1) / d.const_term());
        if (d.is_linear()) return div_linear(d);
        auto lead = [](const Poly& p) {
            auto best = p.t_.begin();
            for (auto it = p.t_.begin(); it != p.t_.end(); ++it)
                if (mono_lex_greater(it->first, best->first)) best = it;
            return *best;
        };
        auto [dm, dc] = lead(d);
        for (auto& [v, e] : dm)
            if (e < 0) throw AlgebraError("div_exact on Laurent divisor");
        Poly r = *this, q;
        while (!r.is_zero()) {
            auto [rm, rc] = lead(r);
            Mono qm;
            size_t i = 0;
            for (auto& [v, e] : rm) {
                int f = 0;
                if (i < dm.size() && dm[i].first < v) return std::nullopt;
                if (i < dm.size() && dm[i].first == v) f = dm[i++].second;
                if (e - f < 0) return std::nullopt;
                if (e - f) qm.emplace_back(v, e - f);
            }
            if (i < dm.size()) return std::nullopt;
            Poly t = Poly::monomial(qm, rc / dc);
            q += t;
            r -= t * d;
        }
        return q;
    }

    std::string str() const;

private:
    template <class T>
    static T from_coeff(const C& c);

    Terms t_;
};

template <>
template <class T>
T Poly<Q>::from_coeff(const Q& c)
{
    return from_q<T>(c);
}

template <>
template <class T>
T Poly<Cyc>::from_coeff(const Cyc& c)
{
    if constexpr (std::is_same_v<T, Cyc>) return c;
    else if constexpr (std::is_same_v<T, std::complex<double>>) return c.to_complex();
    else return T(c);
}

template <class C>
std::string Poly<C>::str() const
{
    if (t_.empty()) return "0";
    // canonical order: total degree descending, then by printed monomial
    std::vector<std::pair<std::string, const C*>> items;
    for (auto& [m, c] : t_) items.emplace_back(mono_str(m), &c);
    std::vector<size_t> idx(items.size());
    std::vector<int> tdeg;
    for (auto& [m, c] : t_) tdeg.push_back(mono_total(m));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (tdeg[a] != tdeg[b]) return tdeg[a] > tdeg[b];
        return items[a].first < items[b].first;
    });
    std::ostringstream os;
    bool first = true;
    for (size_t k : idx) {
        const std::string& ms = items[k].first;
        std::string cs = coeff_str(*items[k].second);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (neg) os << "-";
        else if (!first) os << "+";
        first = false;
        if (ms.empty()) os << cs;
        else if (cs == "1") os << ms;
        else os << cs << "*" << ms;
    }
    return os.str();
}

using QPoly = Poly<Q>;
using CPoly = Poly<Cyc>;

}  // namespace qkz
