#ifndef GSM_RESIDUE_FIELD_HPP
#define GSM_RESIDUE_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/errors.hpp"

namespace gsm {

/**
 * Dense polynomials over GF(p), coefficients constant-term-first in [0, p).
 * Shared by the residue field construction and the Newton polygon code.
 */
namespace gfp {

using Poly = std::vector<long>;

Poly trim(Poly a);
long degree(const Poly& a); // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b, long p);
Poly mul(const Poly& a, const Poly& b, long p);
Poly mod(Poly a, const Poly& m, long p);
Poly gcd(Poly a, Poly b, long p);
/** x^(p^k) mod m, by iterated Frobenius. */
Poly frobenius_power(const Poly& m, long p, long k);
bool irreducible(const Poly& m, long p);
/** Smallest degree of an irreducible factor of nonconstant m. */
long smallest_factor_degree(const Poly& m, long p);
bool squarefree(const Poly& m, long p);

} // namespace gfp

class ResidueElement;

/**
 * The residue field k = GF(p^f), realized as GF(p)[y]/(modulus).
 *
 * Elements are enumerated in a fixed order: index i corresponds to the
 * coefficient vector of i written base p, constant term fastest. The default
 * modulus is the first monic irreducible of degree f in that same order;
 * callers may supply a different one (verified irreducible at construction).
 */
class ResidueField {
public:
    ResidueField() = default; // empty handle; make() produces usable fields

    /** Guard: p^f <= 2^16 so exhaustive enumeration stays cheap. */
    static ResidueField make(long p, long f);
    static ResidueField make(long p, long f, const std::vector<long>& modulus);

    long p() const;
    long f() const;
    long order() const; // p^f
    const std::vector<long>& modulus() const;

    ResidueElement zero() const;
    ResidueElement one() const;
    ResidueElement from_coeffs(std::vector<long> coeffs) const;
    ResidueElement from_index(long index) const;
    /// The class of the generator variable y.
    ResidueElement gen() const;
    /** All p^f elements in enumeration order. */
    std::vector<ResidueElement> enumerate() const;

    bool same_field(const ResidueField& o) const { return data_ == o.data_; }

    struct Data;

private:
    explicit ResidueField(std::shared_ptr<const Data> d)
        : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
    friend class ResidueElement;
};

class ResidueElement {
public:
    ResidueElement(ResidueField field, std::vector<long> coeffs);

    const ResidueField& field() const { return field_; }
    const std::vector<long>& coeffs() const { return coeffs_; }
    /** Position in the field's enumeration order. */
    long index() const;
    bool is_zero() const;

    ResidueElement add(const ResidueElement& o) const;
    ResidueElement sub(const ResidueElement& o) const;
    ResidueElement mul(const ResidueElement& o) const;
    ResidueElement neg() const;
    /** Raises DivisionByZero on zero. */
    ResidueElement inv() const;
    ResidueElement pow(long k) const;

    bool operator==(const ResidueElement& o) const;
    bool operator!=(const ResidueElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    ResidueField field_;
    std::vector<long> coeffs_; // size f, entries in [0, p)
};

/// Univariate polynomial over k, constant-term-first.
using ResiduePoly = std::vector<ResidueElement>;

long degree(const ResiduePoly& a);
ResidueElement eval(const ResiduePoly& a, const ResidueElement& x);
/**
 * All roots of a nonzero polynomial over k, by exhaustive search, in
 * enumeration order. Raises InvalidInput on the zero polynomial.
 */
std::vector<ResidueElement> roots_in_k(const ResiduePoly& a,
                                       const ResidueField& k);

} // namespace gsm

#endif
