#pragma once

#include <string>

namespace qkz {

// Outcome of one named identity check over a family of subcases.
struct CheckResult {
    bool pass = true;
    long cases = 0;
    std::string detail;

    void ok() { ++cases; }
    void fail(const std::string& what)
    {
        ++cases;
        if (pass) detail = what;
        pass = false;
    }
    void expect(bool cond, const std::string& what)
    {
        if (cond) ok();
        else fail(what);
    }
    void merge(const CheckResult& o)
    {
        cases += o.cases;
        if (!o.pass && pass) {
            pass = false;
            detail = o.detail;
        }
    }
};

}  // namespace qkz
