#pragma once

#include <string>
#include <vector>

namespace qkz {

struct Signature {
    int N = 2;
    int n = 0;
    std::vector<int> nu;  // nu_1 .. nu_{N-1}

    Signature() = default;
    Signature(int N, int n, std::vector<int> nu);
    static Signature singlet(int N, int m);

    int nu_at(int j) const;  // nu_0 = n, nu_N = 0
    int count(int letter) const { return nu_at(letter) - nu_at(letter + 1); }
    long size() const;
    bool operator==(const Signature& o) const { return N == o.N && n == o.n && nu == o.nu; }
};

// J in Z_nu with derived data. Positions and set elements are 1-based.
class IndexVector {
public:
    IndexVector(int N, std::vector<int> J);

    int N() const { return N_; }
    int n() const { return int(J_.size()); }
    int operator[](int i) const { return J_.at(i - 1); }
    const std::vector<int>& entries() const { return J_; }
    const Signature& signature() const { return sig_; }

    const std::vector<int>& Nset(int j) const { return Nsets_.at(j); }  // j = 0..N
    int r(int j, int m) const { return Nsets_.at(j).at(m - 1); }
    const std::vector<int>& M(int k) const { return M_.at(k - 1); }  // k = 1..N-1
    const std::vector<int>& K(int r) const { return K_.at(r); }  // r = 0..N-1
    // Letter-lowered vector of nonzero entries, as an sl_{N-1} index.
    const IndexVector& bar() const;
    std::vector<int> bar_entries() const;

    IndexVector plus_e(int a) const;   // J + e_a
    IndexVector minus_e(int a) const;  // J - e_a
    IndexVector swapped(int i) const;  // exchange entries i, i+1

    std::string str() const;
    static IndexVector parse(int N, const std::string& s);

    friend bool operator==(const IndexVector& a, const IndexVector& b) { return a.N_ == b.N_ && a.J_ == b.J_; }
    friend bool operator<(const IndexVector& a, const IndexVector& b) { return a.J_ < b.J_; }

private:
    int N_;
    std::vector<int> J_;
    Signature sig_;
    std::vector<std::vector<int>> Nsets_, M_, K_;
};

std::vector<IndexVector> enumerate(const Signature& sig);
IndexVector eps_min(const Signature& sig);
IndexVector eps_max(const Signature& sig);
// Partial-sum order: a <= b iff every prefix sum of a is <= that of b.
bool dominated(const IndexVector& a, const IndexVector& b);
long binomial(int n, int k);

}  // namespace qkz
