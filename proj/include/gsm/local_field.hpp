#ifndef GSM_LOCAL_FIELD_HPP
#define GSM_LOCAL_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/errors.hpp"
#include "gsm/padic.hpp"
#include "gsm/residue_field.hpp"
#include "gsm/valuation.hpp"

namespace gsm {

class FieldElement;

/**
 * A finite extension K of Q_p presented by a monic integer polynomial g of
 * degree n, assumed irreducible over Q_p (caller-asserted; a multi-slope
 * Newton polygon is rejected as a definite reducibility witness). Elements
 * live in the power basis of the defining root alpha; coordinates are
 * PadicNumber values and may have negative valuation even for integral
 * elements, since Z_p[alpha] need not be the maximal order.
 *
 * Construction derives the ramification index e and residue degree f from
 * the Newton polygon of g when possible, or accepts them declared via
 * Config. Either way the same checks run: f must divide the valuation of
 * the constant term, the slope denominator must divide e, a uniformizer of
 * the form alpha^a * p^b must exist, and for f > 1 an inertial generator
 * (a root of the residue field modulus in K) must be found and refined.
 */
class LocalField {
public:
    struct Config {
        long e = 0;                        // 0 = derive from the polygon
        long f = 0;                        // 0 = derive from the polygon
        std::vector<long> residue_modulus; // constant-first over GF(p); empty = default
    };

    struct UniformizerForm {
        long a = 0; // pi = alpha^a * p^b
        long b = 0;
    };

    LocalField() = default;

    static LocalField construct(long p, const std::vector<BigInt>& defining,
                                long base_prec, const Config& cfg);
    static LocalField construct(long p, const std::vector<BigInt>& defining,
                                long base_prec = kDefaultPrecision);

    bool valid() const { return static_cast<bool>(d_); }
    long p() const;
    long degree() const;
    long e() const;
    long f() const;
    long alpha_valuation() const; // nu of the defining root
    long base_precision() const;  // p-adic digits carried per coordinate
    long pi_precision() const;    // e * base_precision, in pi-digits
    const std::vector<BigInt>& defining_poly() const;
    const ResidueField& residue_field() const;
    UniformizerForm uniformizer_form() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(const BigInt& v) const;
    FieldElement from_rational(const BigInt& num, const BigInt& den) const;
    FieldElement from_padic(const PadicNumber& v) const;
    FieldElement from_coords(std::vector<PadicNumber> coords) const;
    FieldElement gen() const; // the defining root alpha
    FieldElement uniformizer() const;
    FieldElement uniformizer_pow(long k) const; // any sign
    FieldElement inertial_gen() const;

    // Normalized valuation with nu(pi) = 1. Primary route decomposes the
    // element over the basis {gamma^j pi^l}; independent norm route kept
    // below for cross-checking.
    Valuation nu(const FieldElement& x) const;
    Valuation nu_via_norm(const FieldElement& x) const;

    // Image in the residue field; requires nu(x) >= 0, else NotIntegral.
    // The result c is certified by nu(x - lift(c)) >= 1.
    ResidueElement residue(const FieldElement& x) const;
    // Exact integral representative of a residue class, as a polynomial in
    // the inertial generator with coefficient digits in [0, p).
    FieldElement lift(const ResidueElement& c) const;

    bool same_field(const LocalField& other) const;

    struct Data;

private:
    explicit LocalField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default;

    const LocalField& field() const { return field_; }
    const std::vector<PadicNumber>& coords() const { return coords_; }

    bool is_zero() const; // zero to working precision
    Valuation val() const { return field_.nu(*this); }

    FieldElement add(const FieldElement& o) const;
    FieldElement sub(const FieldElement& o) const;
    FieldElement neg() const;
    FieldElement mul(const FieldElement& o) const;
    FieldElement mul_integer(const BigInt& m) const;
    FieldElement mul_padic(const PadicNumber& c) const;
    FieldElement shift_p(long k) const; // multiply by p^k, exact
    FieldElement inv() const;
    FieldElement div(const FieldElement& o) const;
    FieldElement pow_ui(unsigned long k) const;

    // Equality to working precision: the difference vanishes to precision.
    bool agrees_with(const FieldElement& o) const;

    std::string str() const;

private:
    friend class LocalField;
    FieldElement(LocalField f, std::vector<PadicNumber> c)
        : field_(std::move(f)), coords_(std::move(c)) {}
    LocalField field_;
    std::vector<PadicNumber> coords_;
};

} // namespace gsm

#endif
