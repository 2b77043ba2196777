#ifndef GSM_PADIC_HPP
#define GSM_PADIC_HPP

#include <string>

#include "gsm/bigint.hpp"
#include "gsm/errors.hpp"
#include "gsm/valuation.hpp"

namespace gsm {

/// Default working precision, in significant base-p digits.
inline constexpr long kDefaultPrecision = 120;

/**
 * Element of Q_p known to a bounded number of significant base-p digits.
 *
 * Representation: x = unit * p^val with p coprime to unit, where unit is
 * known modulo p^prec (prec significant digits); equivalently x is known
 * modulo p^(val+prec). A value that vanishes to precision is stored with
 * unit = 0 and prec = 0; its val field is then a certified lower bound on
 * the true valuation.
 *
 * All operations propagate precision conservatively: a result never claims
 * more digits than its inputs support.
 */
class PadicNumber {
public:
    /** num/den in Q_p with the given precision. den must be nonzero. */
    static PadicNumber from_rational(const BigInt& num, const BigInt& den,
                                     long p, long prec = kDefaultPrecision);
    static PadicNumber from_integer(const BigInt& n, long p,
                                    long prec = kDefaultPrecision);
    /** Zero to precision: valuation at least `bound`. */
    static PadicNumber zero(long p, long bound);
    /** unit * p^val with unit a p-unit known to prec digits. */
    static PadicNumber from_unit_val(const BigInt& unit, long val, long p,
                                     long prec);

    long prime() const { return p_; }
    /// Number of known significant digits (0 for a value zero to precision).
    long precision() const { return prec_; }
    /// The value is known modulo p^known_exp().
    long known_exp() const { return val_ + prec_; }
    bool is_zero() const { return prec_ == 0; }
    /// Exact valuation, or the at-least bound for a value zero to precision.
    Valuation valuation() const {
        return is_zero() ? Valuation::at_least(val_) : Valuation::exact(val_);
    }
    /// Unit part in [0, p^prec); 0 for a value zero to precision.
    const BigInt& unit() const { return unit_; }

    PadicNumber add(const PadicNumber& o) const;
    PadicNumber sub(const PadicNumber& o) const;
    PadicNumber mul(const PadicNumber& o) const;
    PadicNumber neg() const;
    /** Raises DivisionByZero when *this is zero to precision. */
    PadicNumber inv() const;
    PadicNumber div(const PadicNumber& o) const { return mul(o.inv()); }
    /** Exact scale by an integer (no precision loss). */
    PadicNumber mul_integer(const BigInt& m) const;
    /** Exact scale by p^k (k may be negative). */
    PadicNumber shift(long k) const;
    PadicNumber pow_ui(unsigned long k) const;

    /**
     * Canonical representative in [0, p^known_exp()); requires val >= 0
     * (raises NotIntegral otherwise). Zero-to-precision values yield 0.
     */
    BigInt integer_rep() const;
    /** Centered representative in (-p^known_exp()/2, p^known_exp()/2]. */
    BigInt symmetric_integer_rep() const;

    /** True when (a - b) vanishes to the shared precision. */
    static bool agree(const PadicNumber& a, const PadicNumber& b);

    std::string str() const;

private:
    PadicNumber(long p, long val, long prec, BigInt unit)
        : p_(p), val_(val), prec_(prec), unit_(std::move(unit)) {}

    /** Build from "value = r * p^scale, r known mod p^digits". */
    static PadicNumber canonical(const BigInt& r, long scale, long digits,
                                 long p);
    void check_same_prime(const PadicNumber& o) const;

    long p_;
    long val_;
    long prec_;
    BigInt unit_;
};

inline std::ostream& operator<<(std::ostream& os, const PadicNumber& x) {
    return os << x.str();
}

} // namespace gsm

#endif
