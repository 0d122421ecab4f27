#include "doctest.h"

#include "qkz/coeff.hpp"
#include "qkz/index.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace qkz;

TEST_CASE("enumerate examples")
{
    auto z = enumerate(Signature(2, 2, {1}));
    REQUIRE(z.size() == 2);
    CHECK(z[0].entries() == std::vector<int>{0, 1});
    CHECK(z[1].entries() == std::vector<int>{1, 0});
    CHECK(enumerate(Signature(3, 3, {2, 1})).size() == 6);
    IndexVector J(3, {1, 2, 0, 1, 0, 2});
    CHECK(J.signature() == Signature(3, 6, {4, 2}));
    CHECK_THROWS_AS(Signature(3, 3, {1, 2}), AlgebraError);
}

TEST_CASE("derived sets of the worked example")
{
    IndexVector J(3, {1, 2, 0, 1, 0, 2});
    CHECK(J.Nset(1) == std::vector<int>{1, 2, 4, 6});
    CHECK(J.Nset(2) == std::vector<int>{2, 6});
    CHECK(J.M(1) == std::vector<int>{1, 2, 4, 6});
    CHECK(J.M(2) == std::vector<int>{2, 4});
    CHECK(J.bar_entries() == std::vector<int>{0, 1, 0, 1});
    CHECK(J.K(0) == std::vector<int>{3, 5});
    CHECK(J.K(1) == std::vector<int>{1, 4});
    CHECK(J.K(2) == std::vector<int>{2, 6});
    CHECK(J.str() == "1,2,0,1,0,2");
    CHECK(IndexVector::parse(3, J.str()) == J);
}

TEST_CASE("extremes and dominance")
{
    Signature s2(2, 2, {1});
    CHECK(eps_min(s2).entries() == std::vector<int>{0, 1});
    CHECK(eps_max(s2).entries() == std::vector<int>{1, 0});
    Signature s3(3, 3, {2, 1});
    CHECK(eps_min(s3).entries() == std::vector<int>{0, 1, 2});
    for (auto& J : enumerate(s3)) {
        CHECK(dominated(eps_min(s3), J));
        CHECK(dominated(J, eps_max(s3)));
    }
}

TEST_CASE("properties over all signatures with n <= 8")
{
    for (int N = 2; N <= 4; ++N) {
        for (int n = 0; n <= 8; ++n) {
            std::vector<int> nu(N - 1, 0);
            // walk all non-increasing nu bounded by n
            std::function<void(int, int)> rec = [&](int j, int bound) {
                if (j == N - 1) {
                    Signature sig(N, n, nu);
                    auto z = enumerate(sig);
                    CHECK(long(z.size()) == sig.size());
                    std::set<std::vector<int>> seen;
                    for (size_t i = 0; i < z.size(); ++i) {
                        auto& J = z[i];
                        seen.insert(J.entries());
                        if (i) CHECK(z[i - 1] < J);
                        std::vector<int> all;
                        for (int r = 0; r < N; ++r)
                            for (int x : J.K(r)) all.push_back(x);
                        std::sort(all.begin(), all.end());
                        CHECK(int(all.size()) == n);
                        for (int x = 1; x <= n; ++x) CHECK(all[x - 1] == x);
                        for (int k = 1; k < N; ++k) CHECK(int(J.M(k).size()) == sig.nu_at(k));
                        if (N >= 3) {
                            std::vector<int> want(sig.nu.begin() + 1, sig.nu.end());
                            CHECK(J.bar().signature().nu == want);
                        }
                    }
                    CHECK(seen.size() == z.size());
                    return;
                }
                for (int v = 0; v <= bound; ++v) {
                    nu[j] = v;
                    rec(j + 1, v);
                }
            };
            rec(0, n);
        }
    }
}
