#ifndef GSM_BIGINT_HPP
#define GSM_BIGINT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gsm/errors.hpp"

namespace gsm {

using BigInt = mpz_class;

/** p^k for k >= 0. */
inline BigInt pow_int(long p, long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k));
    return r;
}

/** Largest k with p^k | n; requires n != 0. Also divides n by p^k in place. */
inline long remove_factor(BigInt& n, long p) {
    BigInt pz(p);
    return static_cast<long>(
        mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

/** p-adic valuation of n; requires n != 0. */
inline long valuation_int(const BigInt& n, long p) {
    BigInt tmp = n;
    return remove_factor(tmp, p);
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    BigInt pz(p);
    return mpz_probab_prime_p(pz.get_mpz_t(), 40) != 0;
}

/** Representative of x mod m in (-m/2, m/2]; requires m > 0. */
inline BigInt symmetric_rep(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

/** Parse a decimal integer, rejecting anything else. */
inline BigInt parse_decimal(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidInput("bare sign is not an integer: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw InvalidInput("not a decimal integer: " + s);
    return BigInt(s);
}

} // namespace gsm

#endif
