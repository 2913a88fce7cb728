#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ccount {

using BigInt = mpz_class;

/// Exact rational. mpq_class keeps values canonical (reduced, den > 0),
/// which is exactly the ExactProb contract; no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline BigInt pow2(unsigned n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

/// "num/den" with the canonical (reduced) representation.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Decimal approximation with `places` digits, round half away from zero.
/// Used only at the text boundary; the rational stays authoritative.
std::string to_decimal_string(const Rational& r, int places = 6);

} // namespace ccount
