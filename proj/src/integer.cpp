#include "affmon/integer.hpp"

#include <algorithm>
#include <cassert>

namespace affmon {

Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

Vec primitive(Vec v) {
    Int g = content(v);
    if (g > 1) {
        for (Int& x : v) x = exact_div(x, g);
    }
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec negate(Vec v) {
    for (Int& x : v) x = -x;
    return v;
}

Vec scale(const Int& c, Vec v) {
    for (Int& x : v) x *= c;
    return v;
}

Int dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int vec_sum(const Vec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool dominates(const Vec& b, const Vec& a) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i]) return false;
    return true;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

} // namespace affmon
