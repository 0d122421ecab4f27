#pragma once

#include "qkz/check.hpp"
#include "qkz/index.hpp"
#include "qkz/ratfunc.hpp"

#include <map>
#include <vector>

namespace qkz {

using Letters = std::vector<int>;

// Components H_eps(alpha_1..alpha_l) of the sl_{N-1} level-one solution and
// the polynomials G_eps = prod_{a<b}(alpha_a - alpha_b - hbar) H_eps.
class HTable {
public:
    static HTable build(int N, int m);

    int N() const { return N_; }
    int m() const { return m_; }
    int ell() const { return ell_; }
    const std::map<Letters, QRat>& H() const { return H_; }
    const std::map<Letters, QPoly>& G() const { return G_; }
    const QRat& H(const Letters& e) const;
    const QPoly& G(const Letters& e) const;
    bool path_independent() const { return path_ok_; }
    const std::string& path_detail() const { return path_detail_; }

    // G_eps with alpha_a replaced by args[a-1].
    QPoly G_at(const Letters& e, const std::vector<QPoly>& args) const;
    // Signed sum over permutations of the letters at positions lo..hi (1-based).
    QPoly G_bracket(const Letters& e, int lo, int hi, const std::vector<QPoly>& args) const;
    QRat H_at(const Letters& e, const std::vector<QPoly>& args) const;

    // Pointwise values: alpha values and hbar.
    template <class T>
    T G_eval(const Letters& e, const std::vector<T>& alpha, const T& hbar) const
    {
        if (ell_ == 0) return T(1);
        std::vector<T> pt(size_t(VarTable::get().size()), T(0));
        for (int a = 1; a <= ell_; ++a) pt[avar_[a - 1]] = alpha[a - 1];
        pt[var_hbar()] = hbar;
        return G(e).template eval<T>(pt);
    }
    template <class T>
    T H_eval(const Letters& e, const std::vector<T>& alpha, const T& hbar) const
    {
        T d(1);
        for (int a = 0; a < ell_; ++a)
            for (int b = a + 1; b < ell_; ++b) d = d * (alpha[a] - alpha[b] - hbar);
        return G_eval(e, alpha, hbar) / d;
    }

    std::vector<Letters> letters() const;
    std::string dump_H() const;
    std::string dump_G() const;

private:
    int N_ = 2, m_ = 1, ell_ = 1;
    std::vector<int> avar_;
    std::map<Letters, QRat> H_;
    std::map<Letters, QPoly> G_;
    bool path_ok_ = true;
    std::string path_detail_;
};

// c2(args) = [(a_p - a_{p+1} + h) c1(swapped args) - h c1(args)] / (a_p - a_{p+1}).
QRat exchange_solve(const QRat& c1, int p);

CheckResult verify_rel1(const HTable& t);
CheckResult verify_shift(const HTable& t);  // (rel2)
CheckResult verify_Hpol(const HTable& t);
CheckResult verify_extcoeff(const HTable& t);
CheckResult verify_seed(const HTable& t);  // (rel3)

// Named G identities: Grel1 Grel2 Grel3 Geval1 Geval2 Geval3 N3 keyformula0
// keyformula lastres_minus.
CheckResult verify_G_identity(const std::string& name, const HTable& t, const HTable* lower = nullptr);
std::vector<std::string> G_identity_names();

}  // namespace qkz
