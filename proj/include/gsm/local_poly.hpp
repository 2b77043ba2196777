#ifndef GSM_LOCAL_POLY_HPP
#define GSM_LOCAL_POLY_HPP

#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/errors.hpp"
#include "gsm/local_field.hpp"
#include "gsm/residue_field.hpp"

namespace gsm {

/**
 * Dense univariate polynomial over a local field K, constant term first.
 * Trailing coefficients that are zero to working precision are trimmed at
 * construction, so degree() reflects what the arithmetic can actually see.
 */
class PolyOverK {
public:
    PolyOverK() = default;
    PolyOverK(LocalField K, std::vector<FieldElement> coeffs);
    static PolyOverK from_integers(const LocalField& K,
                                   const std::vector<BigInt>& coeffs);

    const LocalField& field() const { return field_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(long i) const; // zero beyond the stored degree
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    FieldElement evaluate(const FieldElement& x) const;
    PolyOverK derivative() const;

    // Minimum nu over coefficients that are not zero to precision. Raises
    // PrecisionExhausted when every coefficient is zero to precision, when a
    // zero-to-precision coefficient's bound undercuts that minimum, or when
    // the minimum sits too close to working precision to be trusted.
    long content_valuation() const;

    // phi / (p^floor(c/e) * pi^(c mod e)) with c = content_valuation();
    // the result has content 0.
    PolyOverK normalized() const;

    // Coefficient-wise residue; requires content 0 (NotNormalized otherwise).
    // Leading coefficients with positive valuation drop out of the image.
    ResiduePoly reduce_mod_pi() const;

    // Exact composition x -> scale*x + shift.
    PolyOverK substitute(const FieldElement& shift,
                         const FieldElement& scale) const;

    std::string str() const;

private:
    LocalField field_;
    std::vector<FieldElement> coeffs_;
};

/** Residue image of a bivariate polynomial: entries in k, x-major. */
class BivariateResidue {
public:
    BivariateResidue(ResidueField k,
                     std::vector<std::vector<ResidueElement>> rows);

    const ResidueField& field() const { return k_; }
    long deg_x() const;
    long deg_t() const;
    ResidueElement coeff(long i, long j) const;

    // The reduction as a univariate polynomial in x; requires deg_t <= 0.
    ResiduePoly as_univariate_x() const;

    std::string str() const;

private:
    ResidueField k_;
    std::vector<std::vector<ResidueElement>> rows_;
};

/**
 * Bivariate polynomial over K: rows_[i][j] is the coefficient of x^i t^j.
 * Rows may have different t-lengths. The zero polynomial has no rows.
 */
class BivariatePoly {
public:
    BivariatePoly() = default;
    BivariatePoly(LocalField K, std::vector<std::vector<FieldElement>> rows);

    const LocalField& field() const { return field_; }
    long deg_x() const { return static_cast<long>(rows_.size()) - 1; }
    long deg_t() const;
    FieldElement coeff(long i, long j) const; // zero beyond stored entries
    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }

    long content_valuation() const;
    BivariatePoly normalized() const;
    BivariateResidue reduce_mod_pi() const;

    // Exact composition x -> scale*x + shift, t untouched.
    BivariatePoly substitute_x(const FieldElement& shift,
                               const FieldElement& scale) const;
    // Exact composition t -> lift_digit + pi_F * t, x untouched.
    BivariatePoly substitute_t(const FieldElement& lift_digit,
                               const FieldElement& pi_F) const;

    PolyOverK evaluate_t(const FieldElement& t) const;

    std::string str() const;

private:
    LocalField field_;
    std::vector<std::vector<FieldElement>> rows_;
};

} // namespace gsm

#endif
