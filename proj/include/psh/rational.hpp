#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psh {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_q(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or "p" when the denominator is 1
inline std::string to_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Integer floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_q(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large: " + z.get_str());
    return z.get_si();
}

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + to_str(q));
    return to_long(Integer(q.get_num()));
}

// C(m+2, 2) as a polynomial in m: dimension of degree-m forms when m >= 0
inline Rational binom2(const Rational& m) { return (m + 1) * (m + 2) / 2; }

inline long forms_dim(long m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

}  // namespace psh
