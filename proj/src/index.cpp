#include "qkz/index.hpp"

#include "qkz/coeff.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace qkz {

long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Signature::Signature(int N_, int n_, std::vector<int> nu_) : N(N_), n(n_), nu(std::move(nu_))
{
    if (N < 2) throw AlgebraError("N must be at least 2");
    if (int(nu.size()) != N - 1) throw AlgebraError("signature needs N-1 entries");
    int prev = n;
    for (int v : nu) {
        if (v < 0 || v > prev) throw AlgebraError("signature violates n >= nu_1 >= ... >= 0");
        prev = v;
    }
}

Signature Signature::singlet(int N, int m)
{
    std::vector<int> nu;
    for (int j = 1; j < N; ++j) nu.push_back((N - j) * m);
    return Signature(N, N * m, nu);
}

int Signature::nu_at(int j) const
{
    if (j <= 0) return n;
    if (j >= N) return 0;
    return nu[j - 1];
}

long Signature::size() const
{
    long s = 1;
    for (int j = 1; j < N; ++j) s *= binomial(nu_at(j - 1), nu_at(j));
    return s;
}

IndexVector::IndexVector(int N, std::vector<int> J) : N_(N), J_(std::move(J))
{
    std::vector<int> nu(N - 1, 0);
    for (int x : J_) {
        if (x < 0 || x >= N) throw AlgebraError("index entry out of range");
        for (int j = 1; j <= x; ++j) ++nu[j - 1];
    }
    sig_ = Signature(N, int(J_.size()), nu);
    Nsets_.assign(N + 1, {});
    for (int j = 0; j <= N; ++j)
        for (int i = 0; i < int(J_.size()); ++i)
            if (J_[i] >= j) Nsets_[j].push_back(i + 1);
    for (int k = 1; k < N; ++k) {
        std::vector<int> mk;
        const auto& prev = Nsets_[k - 1];
        for (int x : Nsets_[k]) mk.push_back(int(std::find(prev.begin(), prev.end(), x) - prev.begin()) + 1);
        M_.push_back(mk);
    }
    for (int r = 0; r < N; ++r) {
        std::vector<int> kr;
        for (int i = 0; i < int(J_.size()); ++i)
            if (J_[i] == r) kr.push_back(i + 1);
        K_.push_back(kr);
    }
}

std::vector<int> IndexVector::bar_entries() const
{
    std::vector<int> b;
    for (int x : J_)
        if (x > 0) b.push_back(x - 1);
    return b;
}

const IndexVector& IndexVector::bar() const
{
    // cached per process; the number of distinct vectors is small
    static std::mutex mu;
    static std::vector<std::unique_ptr<IndexVector>> store;
    std::lock_guard<std::mutex> lock(mu);
    if (N_ < 3) throw AlgebraError("bar needs N >= 3");
    auto b = bar_entries();
    for (auto& p : store)
        if (p->N_ == N_ - 1 && p->J_ == b) return *p;
    store.push_back(std::make_unique<IndexVector>(N_ - 1, b));
    return *store.back();
}

IndexVector IndexVector::plus_e(int a) const
{
    auto J = J_;
    ++J.at(a - 1);
    return IndexVector(N_, J);
}

IndexVector IndexVector::minus_e(int a) const
{
    auto J = J_;
    --J.at(a - 1);
    return IndexVector(N_, J);
}

IndexVector IndexVector::swapped(int i) const
{
    auto J = J_;
    std::swap(J.at(i - 1), J.at(i));
    return IndexVector(N_, J);
}

std::string IndexVector::str() const
{
    std::string s;
    for (size_t i = 0; i < J_.size(); ++i) s += (i ? "," : "") + std::to_string(J_[i]);
    return s;
}

IndexVector IndexVector::parse(int N, const std::string& s)
{
    std::vector<int> J;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) J.push_back(std::stoi(item));
    return IndexVector(N, J);
}

std::vector<IndexVector> enumerate(const Signature& sig)
{
    std::vector<int> base;
    for (int r = 0; r < sig.N; ++r)
        for (int c = 0; c < sig.count(r); ++c) base.push_back(r);
    std::vector<IndexVector> out;
    do {
        out.emplace_back(sig.N, base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

IndexVector eps_min(const Signature& sig)
{
    std::vector<int> e;
    for (int r = 0; r < sig.N; ++r)
        for (int c = 0; c < sig.count(r); ++c) e.push_back(r);
    return IndexVector(sig.N, e);
}

IndexVector eps_max(const Signature& sig)
{
    std::vector<int> e;
    for (int r = sig.N - 1; r >= 0; --r)
        for (int c = 0; c < sig.count(r); ++c) e.push_back(r);
    return IndexVector(sig.N, e);
}

bool dominated(const IndexVector& a, const IndexVector& b)
{
    long sa = 0, sb = 0;
    for (int i = 1; i <= a.n(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

}  // namespace qkz
