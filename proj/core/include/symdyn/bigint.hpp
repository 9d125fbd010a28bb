#ifndef SYMDYN_BIGINT_HPP
#define SYMDYN_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace symdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Natural log of a positive big integer, safe for values far beyond double range.
inline double log_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 512) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 512;
    BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

/// Natural log of a positive rational.
inline double log_big(const BigRat& x) {
    return log_big(BigInt(boost::multiprecision::numerator(x))) -
           log_big(BigInt(boost::multiprecision::denominator(x)));
}

} // namespace symdyn

#endif
