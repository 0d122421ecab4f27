#include "qkz/hfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qkz {

namespace {

QPoly A(int a) { return QPoly::var(var_alpha(a)); }
QPoly Hb() { return QPoly::var(var_hbar()); }
QPoly Bt() { return QPoly::var(var_beta(1)); }

std::string lstr(const Letters& e)
{
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

int inversions(const Letters& e)
{
    int c = 0;
    for (size_t a = 0; a < e.size(); ++a)
        for (size_t b = a + 1; b < e.size(); ++b)
            if (e[a] > e[b]) ++c;
    return c;
}

int perm_sign(const std::vector<int>& p)
{
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

Letters swap_at(Letters e, int p)
{
    std::swap(e[p - 1], e[p]);
    return e;
}

std::map<int, int> swap_vars(int p)
{
    return {{var_alpha(p), var_alpha(p + 1)}, {var_alpha(p + 1), var_alpha(p)}};
}

QPoly vandermonde_h(int ell)
{
    QPoly d(1);
    for (int a = 1; a <= ell; ++a)
        for (int b = a + 1; b <= ell; ++b) d *= A(a) - A(b) - Hb();
    return d;
}

}  // namespace

QRat exchange_solve(const QRat& c1, int p)
{
    QRat x(A(p) - A(p + 1));
    QRat h(Hb());
    QRat c1s = c1.rename(swap_vars(p));
    QRat r = ((x + h) * c1s - h * c1) / x;
    QRat probe = QRat(1) / x;
    if (r.pole_order(probe.den().begin()->first) > 0)
        throw InexactDivision("exchange at position " + std::to_string(p) + " leaves a pole at a_p = a_{p+1}");
    return r;
}

HTable HTable::build(int N, int m)
{
    if (N < 2 || m < 0) throw AlgebraError("build_H needs N >= 2, m >= 0");
    HTable t;
    t.N_ = N;
    t.m_ = m;
    t.ell_ = (N - 1) * m;
    for (int a = 1; a <= t.ell_; ++a) t.avar_.push_back(var_alpha(a));
    var_hbar();

    Letters seed;
    for (int s = 0; s <= N - 2; ++s)
        for (int c = 0; c < m; ++c) seed.push_back(s);
    QRat h0(1);
    for (int a = 1; a <= t.ell_; ++a)
        for (int b = a + 1; b <= t.ell_; ++b)
            if (seed[a - 1] < seed[b - 1]) h0 = h0 / QRat(A(a) - A(b) - Hb());
    t.H_[seed] = h0;

    std::map<int, std::vector<Letters>> layers;
    Letters e = seed;
    do {
        layers[inversions(e)].push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));

    for (auto& [inv, group] : layers) {
        if (inv == 0) continue;
        for (auto& eps : group) {
            bool have = false;
            for (int p = 1; p < t.ell_; ++p) {
                if (eps[p - 1] <= eps[p]) continue;
                Letters prev = swap_at(eps, p);
                QRat c2 = exchange_solve(t.H_.at(prev), p);
                if (!have) {
                    t.H_[eps] = c2;
                    have = true;
                } else if (!(c2 - t.H_[eps]).is_zero()) {
                    if (t.path_ok_) t.path_detail_ = "H_" + lstr(eps) + " differs along the path through position " + std::to_string(p);
                    t.path_ok_ = false;
                }
            }
        }
    }

    QPoly vd = vandermonde_h(t.ell_);
    for (auto& [eps, h] : t.H_) {
        QRat g = h * QRat(vd);
        if (g.is_poly()) t.G_[eps] = g.num();
    }
    return t;
}

const QRat& HTable::H(const Letters& e) const
{
    auto it = H_.find(e);
    if (it == H_.end()) throw AlgebraError("no H component " + lstr(e));
    return it->second;
}

const QPoly& HTable::G(const Letters& e) const
{
    auto it = G_.find(e);
    if (it == G_.end()) throw AlgebraError("no polynomial G component " + lstr(e));
    return it->second;
}

std::vector<Letters> HTable::letters() const
{
    std::vector<Letters> out;
    for (auto& [e, h] : H_) out.push_back(e);
    return out;
}

QPoly HTable::G_at(const Letters& e, const std::vector<QPoly>& args) const
{
    std::map<int, QPoly> b;
    for (int a = 1; a <= ell_; ++a) b[avar_[a - 1]] = args.at(a - 1);
    return G(e).subst(b);
}

QRat HTable::H_at(const Letters& e, const std::vector<QPoly>& args) const
{
    std::map<int, QPoly> b;
    for (int a = 1; a <= ell_; ++a) b[avar_[a - 1]] = args.at(a - 1);
    return H(e).subst(b);
}

QPoly HTable::G_bracket(const Letters& e, int lo, int hi, const std::vector<QPoly>& args) const
{
    if (lo > hi) return G_at(e, args);
    std::vector<int> p(hi - lo + 1);
    std::iota(p.begin(), p.end(), 0);
    QPoly sum;
    do {
        Letters f = e;
        for (size_t i = 0; i < p.size(); ++i) f[lo - 1 + i] = e[lo - 1 + p[i]];
        QPoly g = G_at(f, args);
        if (perm_sign(p) > 0) sum += g;
        else sum -= g;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

std::string HTable::dump_H() const
{
    std::ostringstream os;
    for (auto& [e, h] : H_) os << "H_" << lstr(e) << " = " << h.str() << "\n";
    return os.str();
}

std::string HTable::dump_G() const
{
    std::ostringstream os;
    for (auto& [e, g] : G_) os << "G_" << lstr(e) << " = " << g.str() << "\n";
    return os.str();
}

CheckResult verify_seed(const HTable& t)
{
    CheckResult r;
    auto letters = t.letters();
    Letters seed = letters.front();
    QRat want(1);
    for (int a = 1; a <= t.ell(); ++a)
        for (int b = 1; b <= t.ell(); ++b)
            if (seed[a - 1] < seed[b - 1]) want = want / QRat(A(a) - A(b) - Hb());
    r.expect((t.H(seed) - want).is_zero(), "seed component differs from the extremal product");
    return r;
}

CheckResult verify_rel1(const HTable& t)
{
    CheckResult r;
    QRat h(Hb());
    for (auto& eps : t.letters()) {
        for (int p = 1; p < t.ell(); ++p) {
            QRat x(A(p) - A(p + 1));
            Letters sw = swap_at(eps, p);
            QRat lhs = t.H(sw).rename(swap_vars(p));
            QRat rhs = x / (x + h) * t.H(eps) + h / (x + h) * t.H(sw);
            r.expect((lhs - rhs).is_zero(), "rel1 fails at eps=" + lstr(eps) + " p=" + std::to_string(p));
        }
    }
    return r;
}

CheckResult verify_shift(const HTable& t)
{
    CheckResult r;
    int l = t.ell(), N = t.N();
    if (l == 0) return r;
    QRat h(Hb());
    std::map<int, int> rot{{var_alpha(1), var_alpha(l)}};
    for (int a = 2; a <= l; ++a) rot[var_alpha(a)] = var_alpha(a - 1);
    QRat pref(1);
    for (int a = 1; a < l; ++a) pref = pref * QRat(A(a) - A(l) + Hb()) / QRat(A(a) - A(l) + Hb().scaled(Q(N - 1)));
    for (auto& eps : t.letters()) {
        QRat lhs = t.H(eps).subst(var_alpha(l), A(l) - Hb().scaled(Q(N)));
        Letters re{eps.back()};
        re.insert(re.end(), eps.begin(), eps.end() - 1);
        QRat rhs = pref * t.H(re).rename(rot);
        r.expect((lhs - rhs).is_zero(), "rel2 fails at eps=" + lstr(eps));
    }
    return r;
}

CheckResult verify_Hpol(const HTable& t)
{
    CheckResult r;
    QPoly vd = vandermonde_h(t.ell());
    for (auto& eps : t.letters()) {
        QRat g = t.H(eps) * QRat(vd);
        if (!g.is_poly()) {
            r.fail("G_" + lstr(eps) + " is not a polynomial");
            continue;
        }
        bool ok = true;
        for (int a = 1; a <= t.ell(); ++a) ok = ok && g.num().deg(var_alpha(a)) <= t.m() - 1;
        r.expect(ok, "G_" + lstr(eps) + " exceeds degree m-1 in some variable");
    }
    return r;
}

CheckResult verify_extcoeff(const HTable& t)
{
    CheckResult r;
    Letters emax;
    for (int s = t.N() - 2; s >= 0; --s)
        for (int c = 0; c < t.m(); ++c) emax.push_back(s);
    QRat want(1);
    for (int a = 1; a <= t.ell(); ++a)
        for (int b = 1; b <= t.ell(); ++b)
            if (emax[a - 1] < emax[b - 1]) want = want / QRat(A(a) - A(b) + Hb());
    r.expect((t.H(emax) - want).is_zero(), "extremal component H_" + lstr(emax) + " differs");
    return r;
}

std::vector<std::string> G_identity_names()
{
    return {"Grel1", "Grel2", "Grel3", "Geval1", "Geval2", "Geval3", "N3", "keyformula0", "keyformula", "lastres_minus"};
}

namespace {

std::vector<QPoly> ident_args(int l)
{
    std::vector<QPoly> v;
    for (int a = 1; a <= l; ++a) v.push_back(A(a));
    return v;
}

QPoly beta_shift(int k)
{
    return Bt() - Hb().scaled(Q(k));
}

bool rat_zero(const QRat& x) { return x.is_zero(); }

}  // namespace

CheckResult verify_G_identity(const std::string& name, const HTable& t, const HTable* lower)
{
    CheckResult r;
    int l = t.ell(), N = t.N(), m = t.m();
    QRat h(Hb());
    auto letters = t.letters();
    auto id = ident_args(l);

    if (name == "Grel1") {
        for (auto& eps : letters)
            for (int k = 1; k < l; ++k) {
                QRat x(A(k) - A(k + 1));
                Letters sw = swap_at(eps, k);
                QRat lhs(t.G(sw).rename(swap_vars(k)));
                QRat rhs = -(x / (x - h)) * QRat(t.G(eps)) - h / (x - h) * QRat(t.G(sw));
                r.expect(rat_zero(lhs - rhs), "Grel1 eps=" + lstr(eps) + " k=" + std::to_string(k));
            }
    } else if (name == "Grel2") {
        if (l == 0) return r;
        std::map<int, int> rot{{var_alpha(1), var_alpha(l)}};
        for (int a = 2; a <= l; ++a) rot[var_alpha(a)] = var_alpha(a - 1);
        Q sign = (l - 1) % 2 ? -1 : 1;
        for (auto& eps : letters) {
            QPoly lhs = t.G(eps).subst(var_alpha(l), A(l) - Hb().scaled(Q(N)));
            Letters re{eps.back()};
            re.insert(re.end(), eps.begin(), eps.end() - 1);
            QPoly rhs = t.G(re).rename(rot).scaled(sign);
            r.expect(lhs == rhs, "Grel2 eps=" + lstr(eps));
        }
    } else if (name == "Grel3") {
        Letters seed = letters.front();
        QPoly want(1);
        for (int a = 1; a <= l; ++a)
            for (int b = a + 1; b <= l; ++b)
                if (seed[a - 1] == seed[b - 1]) want *= A(a) - A(b) - Hb();
        r.expect(t.G(seed) == want, "Grel3 sorted component");
    } else if (name == "Geval1" || name == "Geval2") {
        for (auto& eps : letters)
            for (int k = 1; k < l; ++k) {
                auto args = id;
                args[k] = A(k) - Hb();
                if (name == "Geval1") {
                    QPoly lhs = t.G_at(eps, args);
                    QPoly rhs = -t.G_at(swap_at(eps, k), args);
                    r.expect(lhs == rhs, "Geval1 eps=" + lstr(eps) + " k=" + std::to_string(k));
                } else {
                    auto args2 = id;
                    args2[k - 1] = A(k) - Hb();
                    args2[k] = A(k);
                    QPoly lhs = t.G_bracket(eps, k, k + 1, args);
                    QPoly rhs = t.G_bracket(eps, k, k + 1, args2);
                    r.expect(lhs == rhs, "Geval2 eps=" + lstr(eps) + " k=" + std::to_string(k));
                }
            }
    } else if (name == "Geval3") {
        if (m < 1) return r;
        HTable own;
        if (!lower) {
            own = HTable::build(N, m - 1);
            lower = &own;
        }
        int l1 = l - N + 1;
        Q sign = ((N - 1) * (N - 2) / 2 * (m - 1)) % 2 ? -1 : 1;
        for (auto& eps : lower->letters()) {
            Letters full = eps;
            for (int s = 0; s <= N - 2; ++s) full.push_back(s);
            std::vector<QPoly> args;
            for (int a = 1; a <= l1; ++a) args.push_back(A(a));
            for (int s = 0; s <= N - 2; ++s) args.push_back(beta_shift(s));
            QPoly lhs = t.G_at(full, args);
            QPoly rhs = l1 ? lower->G(eps) : QPoly(1);
            for (int a = 1; a <= l1; ++a) rhs *= A(a) - Bt() - Hb();
            r.expect(lhs == rhs.scaled(sign), "Geval3 eps=" + lstr(eps));
        }
    } else if (name == "N3") {
        if (N != 3 || m < 1) return r;
        HTable own;
        if (!lower) {
            own = HTable::build(N, m - 1);
            lower = &own;
        }
        Letters e, e1;
        for (int c = 0; c < m - 1; ++c) e.push_back(0);
        for (int c = 0; c < m; ++c) e.push_back(1);
        e.push_back(0);
        for (int c = 0; c < m - 1; ++c) e1.push_back(0);
        for (int c = 0; c < m - 1; ++c) e1.push_back(1);
        QPoly rhs = 2 * m - 2 > 0 ? lower->G(e1) : QPoly(1);
        for (int a = 1; a <= m - 1; ++a) rhs *= A(a) - A(2 * m) - Hb().scaled(Q(2));
        for (int a = m; a <= 2 * m - 2; ++a) rhs *= A(a) - A(2 * m - 1) - Hb();
        if (m % 2) rhs = -rhs;
        r.expect(t.G(e) == rhs, "N=3 formula at m=" + std::to_string(m));
    } else if (name == "keyformula0") {
        if (l < 2) return r;
        QRat x(A(l - 1)), b(Bt());
        for (auto& eps : letters) {
            auto a1 = id, a2 = id;
            a1[l - 2] = Bt();
            a1[l - 1] = A(l - 1);
            a2[l - 2] = A(l - 1);
            a2[l - 1] = Bt();
            QRat lhs = (x - b - h) / (x - b + h) * QRat(t.G_at(eps, a1)) + QRat(t.G_at(eps, a2));
            QRat rhs = (x - b) / (x - b + h) * QRat(t.G_bracket(eps, l - 1, l, a2));
            r.expect(rat_zero(lhs - rhs), "keyformula0 eps=" + lstr(eps));
        }
    } else if (name == "keyformula") {
        QRat b(Bt());
        for (int k = 1; k <= l - 1; ++k) {
            QRat x(A(l - k));
            QRat kk(k);
            std::vector<QPoly> a1, a2;
            for (int a = 1; a <= l - k - 1; ++a) {
                a1.push_back(A(a));
                a2.push_back(A(a));
            }
            a1.push_back(Bt());
            a1.push_back(A(l - k));
            for (int s = 1; s <= k - 1; ++s) a1.push_back(beta_shift(s));
            a2.push_back(A(l - k));
            for (int s = 0; s <= k - 1; ++s) a2.push_back(beta_shift(s));
            for (auto& eps : letters) {
                QRat lhs = (x - b - h) / (x - b + h * kk) * QRat(t.G_bracket(eps, l - k + 1, l, a1)) +
                           QRat(t.G_bracket(eps, l - k + 1, l, a2)) / kk;
                QRat rhs = (x - b) / (x - b + h * kk) * QRat(t.G_bracket(eps, l - k, l, a2)) / kk;
                r.expect(rat_zero(lhs - rhs), "keyformula k=" + std::to_string(k) + " eps=" + lstr(eps));
            }
        }
    } else if (name == "lastres_minus") {
        if (l < N) return r;
        int fv = l - N + 1;
        QRat al(A(fv)), b(Bt());
        std::vector<QPoly> a1, a2;
        for (int a = 1; a <= l - N; ++a) {
            a1.push_back(A(a));
            a2.push_back(A(a));
        }
        a1.push_back(beta_shift(N - 1));
        for (int s = 1; s <= N - 2; ++s) a1.push_back(beta_shift(s));
        a1.push_back(A(fv));
        a2.push_back(A(fv));
        for (int s = 1; s <= N - 1; ++s) a2.push_back(beta_shift(s));
        for (auto& eps : letters) {
            QRat lhs = (al - b) / (al - b + h * QRat(N)) * QRat(t.G_bracket(eps, l - N + 1, l - 1, a1)) +
                       QRat(N - 1) * QRat(t.G_bracket(eps, l - N + 1, l - 1, a2));
            QRat rhs = (al - b + h * QRat(N - 1)) / (al - b) * QRat(t.G_bracket(eps, l - N + 1, l, a2));
            r.expect(rat_zero(lhs - rhs), "lastres_minus eps=" + lstr(eps));
        }
    } else {
        throw AlgebraError("unknown G identity " + name);
    }
    return r;
}

}  // namespace qkz
