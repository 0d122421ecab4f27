#pragma once

#include "qkz/index.hpp"
#include "qkz/ratfunc.hpp"

#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace qkz {

inline bool scalar_is_zero(const Q& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Rat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Cyc& x) { return x.is_zero(); }
inline bool scalar_is_zero(const QRat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const CRat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == 0.0; }

// Element of (V_N)^{(x) n}: coefficients on v_J keyed by the raw entries of J.
template <class T>
class TensorVector {
public:
    using Key = std::vector<int>;
    using Map = std::map<Key, T>;

    TensorVector() = default;
    explicit TensorVector(int N) : N_(N) {}
    static TensorVector basis(int N, const Key& J, const T& c = T(1))
    {
        TensorVector v(N);
        v.add(J, c);
        return v;
    }

    int N() const { return N_; }
    const Map& comps() const { return c_; }
    T at(const Key& J) const
    {
        auto it = c_.find(J);
        return it == c_.end() ? T(0) : it->second;
    }
    bool is_zero() const { return c_.empty(); }

    void add(const Key& J, const T& c)
    {
        if (scalar_is_zero(c)) return;
        auto it = c_.find(J);
        if (it == c_.end()) {
            c_.emplace(J, c);
            return;
        }
        it->second = it->second + c;
        if (scalar_is_zero(it->second)) c_.erase(it);
    }

    TensorVector& operator+=(const TensorVector& o)
    {
        if (N_ == 0) N_ = o.N_;
        for (auto& [k, c] : o.c_) add(k, c);
        return *this;
    }
    TensorVector& operator-=(const TensorVector& o)
    {
        if (N_ == 0) N_ = o.N_;
        for (auto& [k, c] : o.c_) add(k, -c);
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    TensorVector scaled(const T& s) const
    {
        TensorVector r(N_);
        for (auto& [k, c] : c_) r.add(k, c * s);
        return r;
    }
    template <class F>
    TensorVector map_coeffs(F&& f) const
    {
        TensorVector r(N_);
        for (auto& [k, c] : c_) r.add(k, f(c));
        return r;
    }

    // Flip of sites i and j (1-based).
    TensorVector apply_P(int i, int j) const
    {
        TensorVector r(N_);
        for (auto& [k, c] : c_) {
            Key s = k;
            std::swap(s.at(i - 1), s.at(j - 1));
            r.add(s, c);
        }
        return r;
    }

    // R_{ij}(beta) = (beta + hbar P_{ij}) / (beta + hbar).
    TensorVector apply_R(int i, int j, const T& beta, const T& hbar) const
    {
        if (scalar_is_zero(beta + hbar)) throw PoleHit();
        T d = beta + hbar;
        T a = beta / d, b = hbar / d;
        TensorVector r(N_);
        for (auto& [k, c] : c_) {
            r.add(k, a * c);
            Key s = k;
            std::swap(s.at(i - 1), s.at(j - 1));
            r.add(s, b * c);
        }
        return r;
    }

    // E_k = sum over sites of e_k, e_k v_j = delta_{kj} v_{j-1}.
    TensorVector apply_E(int k) const
    {
        if (k < 1 || k >= N_) throw AlgebraError("raising operator index out of range");
        TensorVector r(N_);
        for (auto& [key, c] : c_)
            for (size_t s = 0; s < key.size(); ++s)
                if (key[s] == k) {
                    Key t = key;
                    t[s] = k - 1;
                    r.add(t, c);
                }
        return r;
    }

    std::string str(const std::function<std::string(const T&)>& fmt) const
    {
        std::string s;
        for (auto& [k, c] : c_) {
            std::string key;
            for (size_t i = 0; i < k.size(); ++i) key += (i ? "," : "") + std::to_string(k[i]);
            s += "v[" + key + "]: " + fmt(c) + "\n";
        }
        return s;
    }

private:
    int N_ = 0;
    Map c_;
};

template <class T>
bool tensor_equal(const TensorVector<T>& a, const TensorVector<T>& b,
                  const std::function<bool(const T&, const T&)>& eq)
{
    std::set<typename TensorVector<T>::Key> keys;
    for (auto& [k, c] : a.comps()) keys.insert(k);
    for (auto& [k, c] : b.comps()) keys.insert(k);
    for (auto& k : keys)
        if (!eq(a.at(k), b.at(k))) return false;
    return true;
}

// One factor of an operator product: R_{ij}(arg) or the flip P_{ij}.
template <class T>
struct SiteOp {
    enum Kind { R, P } kind;
    int i, j;
    T arg;
};

// Operator product in written order; application is right to left.
template <class T>
struct OpChain {
    std::vector<SiteOp<T>> factors;
    TensorVector<T> apply(TensorVector<T> v, const T& hbar) const
    {
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (it->kind == SiteOp<T>::P) v = v.apply_P(it->i, it->j);
            else v = v.apply_R(it->i, it->j, it->arg, hbar);
        }
        return v;
    }
};

// K_j = R_{j,j-1}(b_j-b_{j-1}+p)...R_{j,1}(b_j-b_1+p) R_{j,n}(b_j-b_n)...R_{j,j+1}(b_j-b_{j+1}).
template <class T>
OpChain<T> build_K(int j, const std::vector<T>& beta, const T& p)
{
    int n = int(beta.size());
    if (j < 1 || j > n) throw AlgebraError("build_K site out of range");
    OpChain<T> K;
    for (int i = j - 1; i >= 1; --i) K.factors.push_back({SiteOp<T>::R, j, i, beta[j - 1] - beta[i - 1] + p});
    for (int i = n; i > j; --i) K.factors.push_back({SiteOp<T>::R, j, i, beta[j - 1] - beta[i - 1]});
    return K;
}

// Level -N + p/hbar; only level zero (p = N hbar) is admitted by build_level_zero_p.
template <class T>
T level_zero_p(int N, const T& hbar)
{
    return T(N) * hbar;
}

// All basis vectors of (V_N)^{(x) n}.
std::vector<std::vector<int>> all_basis(int N, int n);

// Exact operator checks on (V_N)^{(x) 3} and (V_N)^{(x) 2} over Q(beta, hbar).
bool check_yang_baxter(int N);
bool check_unitarity(int N);
bool check_E_commutes_R(int N);

}  // namespace qkz
