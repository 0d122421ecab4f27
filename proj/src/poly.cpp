#include "qkz/poly.hpp"

namespace qkz {

Mono mono_mul(const Mono& a, const Mono& b)
{
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e) r.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

int mono_deg(const Mono& m, int v)
{
    for (auto& [w, e] : m)
        if (w == v) return e;
    return 0;
}

int mono_total(const Mono& m)
{
    int d = 0;
    for (auto& [w, e] : m) d += e;
    return d;
}

bool mono_lex_greater(const Mono& a, const Mono& b)
{
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int va = i < a.size() ? a[i].first : -1;
        int vb = j < b.size() ? b[j].first : -1;
        if (va == vb) {
            if (a[i].second != b[j].second) return a[i].second > b[j].second;
            ++i;
            ++j;
            continue;
        }
        if (vb < 0 || (va >= 0 && va < vb)) return a[i].second > 0;
        return b[j].second < 0;
    }
    return false;
}

std::string mono_str(const Mono& m)
{
    std::vector<std::pair<std::string, int>> parts;
    for (auto& [v, e] : m) parts.emplace_back(VarTable::get().name(v), e);
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (auto& [n, e] : parts) {
        if (!s.empty()) s += "*";
        s += n;
        if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return s;
}

bool coeff_less(const Cyc& a, const Cyc& b)
{
    if (a.ord() != b.ord()) return a.ord() < b.ord();
    return a.coeffs() < b.coeffs();
}

}  // namespace qkz
