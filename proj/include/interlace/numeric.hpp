#ifndef INTERLACE_NUMERIC_HPP
#define INTERLACE_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace interlace {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational (coprime, positive denominator).
inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for possibly negative e (base must be nonzero when e < 0).
inline Rat pow_rat(const Rat& base, long e) {
    Rat r;
    if (e >= 0) {
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

/// Largest s with s*s <= n (n >= 0).
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sign_of(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// 2^-bits as an exact rational.
inline Rat dyadic_eps(unsigned long bits) {
    Rat r;
    mpq_set_ui(r.get_mpq_t(), 1, 1);
    mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()), bits);
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace interlace

#endif
