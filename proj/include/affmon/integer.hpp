#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace affmon {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

// gcd of all entries, 0 for the zero vector
Int content(const Vec& v);

// divide by the content so the gcd of entries is 1; zero vector unchanged
Vec primitive(Vec v);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(Vec v);
Vec scale(const Int& c, Vec v);
Int dot(const Vec& a, const Vec& b);
Int vec_sum(const Vec& v);

// strict lexicographic order; the tiebreak used everywhere determinism matters
bool lex_less(const Vec& a, const Vec& b);

// a <= b componentwise
bool dominates(const Vec& b, const Vec& a);

std::string to_string(const Vec& v);

} // namespace affmon
