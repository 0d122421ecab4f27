#include "qkz/ratfunc.hpp"

#include <cctype>
#include <numeric>

namespace qkz {

static int perm_sign(const std::vector<int>& p)
{
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

template <class F>
static F skew_impl(const F& f, const std::vector<int>& vars)
{
    std::vector<int> p(vars.size());
    std::iota(p.begin(), p.end(), 0);
    F sum;
    do {
        std::map<int, int> ren;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != int(i)) ren[vars[i]] = vars[p[i]];
        F t = f.rename(ren);
        if (perm_sign(p) > 0) sum += t;
        else sum -= t;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

template <class C>
RatFunc<C> skew_symmetrize(const RatFunc<C>& f, const std::vector<int>& vars)
{
    return skew_impl(f, vars);
}

template <class C>
Poly<C> skew_symmetrize(const Poly<C>& f, const std::vector<int>& vars)
{
    return skew_impl(f, vars);
}

template QRat skew_symmetrize(const QRat&, const std::vector<int>&);
template CRat skew_symmetrize(const CRat&, const std::vector<int>&);
template QPoly skew_symmetrize(const QPoly&, const std::vector<int>&);
template CPoly skew_symmetrize(const CPoly&, const std::vector<int>&);

std::vector<Rat> sample_point(const std::set<int>& vars, std::mt19937_64& rng, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    int n = vars.empty() ? 0 : *vars.rbegin() + 1;
    std::vector<Rat> pt(std::max(n, VarTable::get().size()));
    for (int v : vars) pt[v] = Rat(d(rng));
    return pt;
}

bool equals(const QRat& f, const QRat& g, const EqConfig& cfg)
{
    if (cfg.mode == EqMode::Deterministic) return (f - g).is_zero();
    auto vs = f.vars();
    for (int v : g.vars()) vs.insert(v);
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.trials; ++t) {
        int tries = 0;
        for (;;) {
            auto pt = sample_point(vs, rng, cfg.lo, cfg.hi);
            try {
                if (f.eval(pt) != g.eval(pt)) return false;
                break;
            } catch (const PoleHit&) {
                if (++tries > 64) throw AlgebraError("sampling failed to avoid poles");
            }
        }
    }
    return true;
}

namespace {

template <class C>
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RatFunc<C> run()
    {
        auto r = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    using R = RatFunc<C>;

    [[noreturn]] void fail(const std::string& why)
    {
        throw AlgebraError("parse error at " + std::to_string(i_) + ": " + why + " in '" + s_ + "'");
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    R expr()
    {
        R r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    R term()
    {
        R r = unary();
        for (;;) {
            if (eat('*')) r *= unary();
            else if (eat('/')) r /= unary();
            else return r;
        }
    }
    R unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long integer()
    {
        skip();
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        skip();
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected integer exponent");
        long v = std::stol(s_.substr(st, i_ - st));
        if (paren && !eat(')')) fail("expected )");
        return neg ? -v : v;
    }
    R power()
    {
        int single_var = -1;
        R base = atom(single_var);
        if (!eat('^')) return base;
        long e = integer();
        if (single_var >= 0) return R(Poly<C>::var(single_var, int(e)));
        if (e >= 0) return R(base.num().pow(int(e))) / R(base.den_poly().pow(int(e)));
        return R(base.den_poly().pow(int(-e))) / R(base.num().pow(int(-e)));
    }
    R atom(int& single_var)
    {
        skip();
        if (eat('(')) {
            R r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return R(C(Q(s_.substr(st, i_ - st))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t st = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(st, i_ - st);
            if (name.size() > 1 && name[0] == 'z' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
                if constexpr (std::is_same_v<C, Cyc>) {
                    int ord = std::stoi(name.substr(1));
                    if (ord > 0 && eat('^')) return R(Cyc::zeta(ord, integer()));
                    return R(Cyc::zeta(ord));
                } else {
                    fail("root of unity in a rational-coefficient expression");
                }
            }
            single_var = var_named(name);
            return R::var(single_var);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string s_;
    size_t i_ = 0;
};

}  // namespace

QRat parse_qrat(const std::string& s) { return Parser<Q>(s).run(); }
CRat parse_crat(const std::string& s) { return Parser<Cyc>(s).run(); }

}  // namespace qkz
