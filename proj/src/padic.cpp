#include "gsm/padic.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

namespace {

void check_prime(long p) {
    if (!is_prime(p))
        throw InvalidPrime("not a prime: " + std::to_string(p));
}

void check_precision(long prec) {
    if (prec < 1)
        throw InvalidInput("precision must be >= 1, got " +
                           std::to_string(prec));
}

} // namespace

PadicNumber PadicNumber::canonical(const BigInt& r, long scale, long digits,
                                   long p) {
    // digits counts base-p digits of r that are trustworthy.
    if (digits <= 0) return zero(p, scale + std::max<long>(digits, 0));
    BigInt m = pow_int(p, digits);
    BigInt u = r % m;
    if (u < 0) u += m;
    if (u == 0) return zero(p, scale + digits);
    long v = remove_factor(u, p);
    long prec = digits - v;
    u %= pow_int(p, prec);
    return PadicNumber(p, scale + v, prec, std::move(u));
}

PadicNumber PadicNumber::zero(long p, long bound) {
    check_prime(p);
    return PadicNumber(p, bound, 0, BigInt(0));
}

PadicNumber PadicNumber::from_integer(const BigInt& n, long p, long prec) {
    check_prime(p);
    check_precision(prec);
    if (n == 0) return zero(p, prec);
    BigInt u = n;
    long v = remove_factor(u, p);
    u %= pow_int(p, prec);
    if (u < 0) u += pow_int(p, prec);
    return PadicNumber(p, v, prec, std::move(u));
}

PadicNumber PadicNumber::from_rational(const BigInt& num, const BigInt& den,
                                       long p, long prec) {
    check_prime(p);
    check_precision(prec);
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (num == 0) return zero(p, prec);
    BigInt n = num, d = den;
    long vn = remove_factor(n, p);
    long vd = remove_factor(d, p);
    BigInt m = pow_int(p, prec);
    BigInt dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("unit inversion failed unexpectedly");
    BigInt u = (n * dinv) % m;
    if (u < 0) u += m;
    return PadicNumber(p, vn - vd, prec, std::move(u));
}

PadicNumber PadicNumber::from_unit_val(const BigInt& unit, long val, long p,
                                       long prec) {
    check_prime(p);
    check_precision(prec);
    BigInt m = pow_int(p, prec);
    BigInt u = unit % m;
    if (u < 0) u += m;
    // Canonicalize: the value is u * p^val known modulo p^(val+prec), so any
    // p-power inside u moves into the valuation and costs precision.
    if (u == 0) return zero(p, val + prec);
    long shift = remove_factor(u, p);
    if (shift >= prec) return zero(p, val + prec);
    return PadicNumber(p, val + shift, prec - shift, std::move(u));
}

void PadicNumber::check_same_prime(const PadicNumber& o) const {
    if (p_ != o.p_)
        throw InvalidInput("mixed primes: " + std::to_string(p_) + " vs " +
                           std::to_string(o.p_));
}

PadicNumber PadicNumber::add(const PadicNumber& o) const {
    check_same_prime(o);
    if (is_zero() && o.is_zero())
        return zero(p_, std::min(val_, o.val_));
    // Work at the common scale; everything is integral relative to it.
    long s = std::min(val_, o.val_);
    long digits = std::min(known_exp(), o.known_exp()) - s;
    if (digits <= 0) return zero(p_, s + std::max<long>(digits, 0));
    BigInt m = pow_int(p_, digits);
    BigInt r = 0;
    if (!is_zero()) r += unit_ * pow_int(p_, val_ - s);
    if (!o.is_zero()) r += o.unit_ * pow_int(p_, o.val_ - s);
    r %= m;
    return canonical(r, s, digits, p_);
}

PadicNumber PadicNumber::neg() const {
    if (is_zero()) return *this;
    BigInt m = pow_int(p_, prec_);
    return PadicNumber(p_, val_, prec_, m - unit_);
}

PadicNumber PadicNumber::sub(const PadicNumber& o) const {
    return add(o.neg());
}

PadicNumber PadicNumber::mul(const PadicNumber& o) const {
    check_same_prime(o);
    if (is_zero() || o.is_zero()) return zero(p_, val_ + o.val_);
    long prec = std::min(prec_, o.prec_);
    BigInt u = (unit_ * o.unit_) % pow_int(p_, prec);
    return PadicNumber(p_, val_ + o.val_, prec, std::move(u));
}

PadicNumber PadicNumber::inv() const {
    if (is_zero())
        throw PrecisionExhausted("inverting a value that is zero to precision");
    BigInt m = pow_int(p_, prec_);
    BigInt u;
    if (mpz_invert(u.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("unit inversion failed unexpectedly");
    return PadicNumber(p_, -val_, prec_, std::move(u));
}

PadicNumber PadicNumber::mul_integer(const BigInt& m) const {
    if (m == 0) {
        // Exact zero multiplier: result vanishes to the full known window.
        return zero(p_, known_exp());
    }
    BigInt u = m;
    long v = remove_factor(u, p_);
    if (is_zero()) return zero(p_, val_ + v);
    BigInt mm = pow_int(p_, prec_);
    u = (u * unit_) % mm;
    if (u < 0) u += mm;
    return PadicNumber(p_, val_ + v, prec_, std::move(u));
}

PadicNumber PadicNumber::shift(long k) const {
    return PadicNumber(p_, val_ + k, prec_, unit_);
}

PadicNumber PadicNumber::pow_ui(unsigned long k) const {
    PadicNumber r = from_integer(1, p_, is_zero() ? kDefaultPrecision : prec_);
    PadicNumber b = *this;
    while (k > 0) {
        if (k & 1) r = r.mul(b);
        b = b.mul(b);
        k >>= 1;
    }
    return r;
}

BigInt PadicNumber::integer_rep() const {
    if (is_zero()) return BigInt(0);
    if (val_ < 0)
        throw NotIntegral("integer representative of negative valuation");
    return unit_ * pow_int(p_, val_);
}

BigInt PadicNumber::symmetric_integer_rep() const {
    if (is_zero()) return BigInt(0);
    return symmetric_rep(integer_rep(), pow_int(p_, known_exp()));
}

bool PadicNumber::agree(const PadicNumber& a, const PadicNumber& b) {
    return a.sub(b).is_zero();
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^"
       << known_exp() << ")";
    return os.str();
}

} // namespace gsm
