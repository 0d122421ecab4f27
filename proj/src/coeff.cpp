#include "qkz/coeff.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qkz {

std::string q_str(const Q& q)
{
    return q.get_str();
}

static std::vector<long> poly_quo(std::vector<long> num, const std::vector<long>& den)
{
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (int i = int(num.size()) - 1; i >= int(den.size()) - 1; --i) {
        long c = num[i];
        int s = i - int(den.size()) + 1;
        q[s] = c;
        for (size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
    }
    return q;
}

static const std::vector<long>& cyclo_locked(int n, std::map<int, std::vector<long>>& cache)
{
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_quo(num, cyclo_locked(d, cache));
    return cache.emplace(n, num).first->second;
}

const std::vector<long>& cyclotomic_poly(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    return cyclo_locked(n, cache);
}

static size_t degree_of(int ord)
{
    return ord == 0 ? 1 : cyclotomic_poly(ord).size() - 1;
}

Cyc::Cyc(int ord, std::vector<Q> c) : ord_(ord), c_(std::move(c))
{
    if (ord_ < 0) throw AlgebraError("negative cyclotomic order");
    if (ord_ == 1 || ord_ == 2) {
        // Q(zeta_1) = Q(zeta_2) = Q; fold into the rational representation
        Q v = 0, z = 1, root = ord_ == 1 ? 1 : -1;
        for (auto& x : c_) {
            v += x * z;
            z *= root;
        }
        ord_ = 0;
        c_ = {v};
        return;
    }
    reduce();
}

Cyc Cyc::zeta(int ord, long k)
{
    if (ord <= 0) throw AlgebraError("zeta needs a positive order");
    long e = ((k % ord) + ord) % ord;
    std::vector<Q> c(e + 1, Q(0));
    c[e] = 1;
    return Cyc(ord, std::move(c));
}

void Cyc::reduce()
{
    if (ord_ == 0) {
        if (c_.empty()) c_ = {Q(0)};
        c_.resize(1);
        return;
    }
    const auto& phi = cyclotomic_poly(ord_);
    size_t d = phi.size() - 1;
    for (size_t i = c_.size(); i-- > d;) {
        if (qkz::is_zero(c_[i])) continue;
        Q c = c_[i];
        for (size_t j = 0; j <= d; ++j) c_[i - d + j] -= c * phi[j];
    }
    c_.resize(d, Q(0));
}

void Cyc::lift(int ord)
{
    if (ord == 0 || ord == ord_) return;
    if (ord_ != 0) throw AlgebraError("mixing cyclotomic orders");
    ord_ = ord;
    c_.resize(degree_of(ord), Q(0));
}

bool Cyc::is_zero() const
{
    for (auto& x : c_)
        if (!qkz::is_zero(x)) return false;
    return true;
}

bool Cyc::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (!qkz::is_zero(c_[i])) return false;
    return true;
}

Q Cyc::rational() const
{
    if (!is_rational()) throw AlgebraError("not a rational element");
    return c_[0];
}

Cyc Cyc::operator-() const
{
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o)
{
    lift(o.ord_);
    if (o.ord_ == 0) {
        c_[0] += o.c_[0];
        return *this;
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o)
{
    return *this += -o;
}

Cyc& Cyc::operator*=(const Cyc& o)
{
    if (o.ord_ == 0) {
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (ord_ == 0) {
        Q s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        return *this;
    }
    lift(o.ord_);
    std::vector<Q> r(c_.size() + o.c_.size() - 1, Q(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (qkz::is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    reduce();
    return *this;
}

Cyc Cyc::inv() const
{
    if (is_zero()) throw AlgebraError("division by zero in cyclotomic field");
    if (ord_ == 0) return Cyc(Q(1) / c_[0]);
    size_t d = c_.size();
    // column i of M holds zeta^i * this
    std::vector<std::vector<Q>> m(d, std::vector<Q>(d + 1, Q(0)));
    Cyc col = *this;
    Cyc z = zeta(ord_);
    for (size_t i = 0; i < d; ++i) {
        for (size_t r = 0; r < d; ++r) m[r][i] = col.c_[r];
        col *= z;
    }
    m[0][d] = 1;
    for (size_t c = 0; c < d; ++c) {
        size_t p = c;
        while (p < d && qkz::is_zero(m[p][c])) ++p;
        if (p == d) throw AlgebraError("singular multiplication matrix");
        std::swap(m[p], m[c]);
        Q piv = m[c][c];
        for (size_t k = c; k <= d; ++k) m[c][k] /= piv;
        for (size_t r = 0; r < d; ++r) {
            if (r == c || qkz::is_zero(m[r][c])) continue;
            Q f = m[r][c];
            for (size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Q> x(d);
    for (size_t r = 0; r < d; ++r) x[r] = m[r][d];
    return Cyc(ord_, std::move(x));
}

Cyc Cyc::pow(long e) const
{
    return ipow(*this, e);
}

std::complex<double> Cyc::to_complex() const
{
    if (ord_ == 0) return {c_[0].get_d(), 0.0};
    std::complex<double> s = 0;
    for (size_t i = 0; i < c_.size(); ++i)
        s += c_[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(i) / ord_);
    return s;
}

std::string Cyc::str() const
{
    if (is_rational()) return q_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (qkz::is_zero(c_[i])) continue;
        Q a = c_[i];
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (neg) os << "-";
        else if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << q_str(a);
            continue;
        }
        if (a != 1) os << q_str(a) << "*";
        os << "z" << ord_;
        if (i > 1) os << "^" << i;
    }
    os << ")";
    return os.str();
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) throw PoleHit();
    v_ /= o.v_;
    return *this;
}

}  // namespace qkz
