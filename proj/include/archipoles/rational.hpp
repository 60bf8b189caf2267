#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace archipoles {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Exponent vectors, facet normals and fan rays all live in small integer
// ranges; they are stored as int64 and promoted to Int/Rat inside the exact
// linear algebra.
using IVec = std::vector<long long>;
using RVec = std::vector<Rat>;

inline Int ivec_dot(const IVec& a, const IVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Int(a[i]) * Int(b[i]);
    return s;
}

inline Rat rvec_dot(const RVec& a, const IVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rat(b[i]);
    return s;
}

inline long long coord_sum(const IVec& a)
{
    long long s = 0;
    for (long long x : a)
        s += x;
    return s;
}

inline bool is_zero(const IVec& a)
{
    for (long long x : a)
        if (x != 0)
            return false;
    return true;
}

// gcd of the absolute values, 0 if all entries vanish.
long long ivec_gcd(const IVec& a);

// Divide by the gcd of the entries; identity on the zero vector.
IVec make_primitive(IVec a);

// Renders "p/q", or just "p" for integers.  parse_rational accepts both
// forms; this is the exact representation used in all JSON reports.
std::string rat_to_string(const Rat& r);
Rat parse_rational(const std::string& s);

// True iff r is a nonnegative integer.
bool is_natural(const Rat& r);

double rat_to_double(const Rat& r);

}  // namespace archipoles
