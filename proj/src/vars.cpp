#include "qkz/vars.hpp"

#include "qkz/coeff.hpp"

#include <mutex>
#include <unordered_map>

namespace qkz {

struct VarTable::Impl {
    mutable std::mutex mu;
    std::vector<std::string> names;
    std::vector<bool> laurent;
    std::unordered_map<std::string, int> ids;
};

VarTable& VarTable::get()
{
    static VarTable t;
    return t;
}

VarTable::Impl& VarTable::impl() const
{
    static Impl i;
    return i;
}

int VarTable::id(const std::string& name, bool laurent)
{
    auto& m = impl();
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.ids.find(name);
    if (it != m.ids.end()) {
        if (m.laurent[it->second] != laurent) throw AlgebraError("variable " + name + " re-registered with other Laurent flag");
        return it->second;
    }
    int v = int(m.names.size());
    m.names.push_back(name);
    m.laurent.push_back(laurent);
    m.ids.emplace(name, v);
    return v;
}

int VarTable::find(const std::string& name) const
{
    auto& m = impl();
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.ids.find(name);
    return it == m.ids.end() ? -1 : it->second;
}

std::string VarTable::name(int v) const
{
    auto& m = impl();
    std::lock_guard<std::mutex> lock(m.mu);
    return m.names.at(v);
}

bool VarTable::laurent(int v) const
{
    auto& m = impl();
    std::lock_guard<std::mutex> lock(m.mu);
    return m.laurent.at(v);
}

int VarTable::size() const
{
    auto& m = impl();
    std::lock_guard<std::mutex> lock(m.mu);
    return int(m.names.size());
}

int var_alpha(int a) { return VarTable::get().id("a" + std::to_string(a)); }
int var_beta(int j) { return VarTable::get().id("b" + std::to_string(j)); }
int var_hbar() { return VarTable::get().id("h"); }
int var_gamma(int k, int j) { return VarTable::get().id("g" + std::to_string(k) + "_" + std::to_string(j)); }
int var_A(int a) { return VarTable::get().id("A" + std::to_string(a), true); }
int var_B(int j) { return VarTable::get().id("B" + std::to_string(j), true); }
int var_x() { return VarTable::get().id("x"); }
int var_y(int j) { return VarTable::get().id("y" + std::to_string(j)); }

int var_named(const std::string& name)
{
    bool laurent = !name.empty() && (name[0] == 'A' || name[0] == 'B');
    return VarTable::get().id(name, laurent);
}

}  // namespace qkz
