#pragma once

#include <gmpxx.h>

#include <string>

namespace altseq {

// Exact arithmetic lives on GMP. BigRat is always canonical (lowest terms,
// positive denominator); mpq_class maintains that through all arithmetic.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k) with the usual convention: 0 whenever k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow_rat(const BigRat& base, unsigned long e) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r; // powers of a canonical fraction stay canonical
}

inline int sign(const BigRat& q) { return sgn(q); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Rationals print as "p/q", integers without the slash.
inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const BigRat& q) { return q.get_d(); }

} // namespace altseq
