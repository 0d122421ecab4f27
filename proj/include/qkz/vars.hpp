#pragma once

#include <string>
#include <vector>

namespace qkz {

// Process-wide registry of named indeterminates. Ids are dense and stable for
// the life of the process.
class VarTable {
public:
    static VarTable& get();

    int id(const std::string& name, bool laurent = false);
    int find(const std::string& name) const;  // -1 if absent
    std::string name(int v) const;
    bool laurent(int v) const;
    int size() const;

private:
    VarTable() = default;
    struct Impl;
    Impl& impl() const;
};

// Standard names: a<i> alpha, b<j> beta, h hbar, g<k>_<j> gamma, A<i>, B<j>
// exponentiated variables (Laurent), x and y<j> auxiliaries.
int var_alpha(int a);
int var_beta(int j);
int var_hbar();
int var_gamma(int k, int j);
int var_A(int a);
int var_B(int j);
int var_x();
int var_y(int j);
int var_named(const std::string& name);

}  // namespace qkz
