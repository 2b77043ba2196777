#include "gsm/local_poly.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

namespace {

// Euclidean division of a content valuation by the ramification index:
// c = q*e + r with r in [0, e).
void split_content(long c, long e, long& q, long& r) {
    q = c / e;
    r = c % e;
    if (r < 0) {
        r += e;
        q -= 1;
    }
}

// Content over an arbitrary coefficient range with the precision guards
// shared by the univariate and bivariate cases.
template <class Iter>
long content_over(const LocalField& K, Iter begin, Iter end) {
    bool any_exact = false;
    long mn = 0;
    long zero_bound = LONG_MAX;
    for (Iter it = begin; it != end; ++it) {
        Valuation v = K.nu(*it);
        if (v.is_exact()) {
            if (!any_exact || v.value() < mn) mn = v.value();
            any_exact = true;
        } else {
            zero_bound = std::min(zero_bound, v.bound());
        }
    }
    if (!any_exact)
        throw PrecisionExhausted("content: every coefficient is zero to precision");
    if (zero_bound < mn)
        throw PrecisionExhausted("content: a zero-to-precision coefficient could "
                                 "undercut the minimum");
    const long pi_prec = K.pi_precision();
    const long margin = std::max(4 * K.e(), pi_prec / 8);
    if (mn > pi_prec - margin)
        throw PrecisionExhausted("content valuation sits too close to working "
                                 "precision to be trusted");
    return mn;
}

FieldElement divide_out(const LocalField& K, const FieldElement& x, long q, long r) {
    FieldElement y = x.shift_p(-q);
    if (r != 0) y = y.mul(K.uniformizer_pow(-r));
    return y;
}

std::vector<FieldElement> trim_zero_tail(std::vector<FieldElement> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

} // namespace

PolyOverK::PolyOverK(LocalField K, std::vector<FieldElement> coeffs)
    : field_(std::move(K)), coeffs_(trim_zero_tail(std::move(coeffs))) {
    if (!field_.valid()) throw InvalidInput("polynomial needs a constructed field");
    for (const auto& c : coeffs_)
        if (!c.field().same_field(field_))
            throw InvalidInput("coefficient from a different field");
}

PolyOverK PolyOverK::from_integers(const LocalField& K,
                                   const std::vector<BigInt>& coeffs) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(K.from_integer(c));
    return PolyOverK(K, std::move(cs));
}

FieldElement PolyOverK::coeff(long i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement PolyOverK::evaluate(const FieldElement& x) const {
    if (coeffs_.empty()) return field_.zero();
    FieldElement acc = coeffs_.back();
    for (long i = degree() - 1; i >= 0; --i)
        acc = acc.mul(x).add(coeffs_[static_cast<size_t>(i)]);
    return acc;
}

PolyOverK PolyOverK::derivative() const {
    std::vector<FieldElement> out;
    for (long i = 1; i <= degree(); ++i)
        out.push_back(coeffs_[static_cast<size_t>(i)].mul_integer(i));
    return PolyOverK(field_, std::move(out));
}

long PolyOverK::content_valuation() const {
    return content_over(field_, coeffs_.begin(), coeffs_.end());
}

PolyOverK PolyOverK::normalized() const {
    long c = content_valuation();
    if (c == 0) return *this;
    long q = 0, r = 0;
    split_content(c, field_.e(), q, r);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(divide_out(field_, x, q, r));
    return PolyOverK(field_, std::move(out));
}

ResiduePoly PolyOverK::reduce_mod_pi() const {
    if (content_valuation() != 0)
        throw NotNormalized("reduction requires unit content");
    ResiduePoly out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(field_.residue(c));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

PolyOverK PolyOverK::substitute(const FieldElement& shift,
                                const FieldElement& scale) const {
    if (coeffs_.empty()) return *this;
    // Horner composition: acc <- acc*(scale*x + shift) + c_i.
    std::vector<FieldElement> acc{coeffs_.back()};
    for (long i = degree() - 1; i >= 0; --i) {
        std::vector<FieldElement> next(acc.size() + 1, field_.zero());
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k] = next[k].add(acc[k].mul(shift));
            next[k + 1] = next[k + 1].add(acc[k].mul(scale));
        }
        next[0] = next[0].add(coeffs_[static_cast<size_t>(i)]);
        acc = std::move(next);
    }
    return PolyOverK(field_, std::move(acc));
}

std::string PolyOverK::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (long i = 0; i <= degree(); ++i) {
        if (i) os << " + ";
        os << "(" << coeffs_[static_cast<size_t>(i)].str() << ")";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

BivariateResidue::BivariateResidue(ResidueField k,
                                   std::vector<std::vector<ResidueElement>> rows)
    : k_(std::move(k)), rows_(std::move(rows)) {
    for (auto& row : rows_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

long BivariateResidue::deg_x() const { return static_cast<long>(rows_.size()) - 1; }

long BivariateResidue::deg_t() const {
    long d = -1;
    for (const auto& row : rows_)
        d = std::max(d, static_cast<long>(row.size()) - 1);
    return d;
}

ResidueElement BivariateResidue::coeff(long i, long j) const {
    if (i < 0 || i >= static_cast<long>(rows_.size())) return k_.zero();
    const auto& row = rows_[static_cast<size_t>(i)];
    if (j < 0 || j >= static_cast<long>(row.size())) return k_.zero();
    return row[static_cast<size_t>(j)];
}

ResiduePoly BivariateResidue::as_univariate_x() const {
    if (deg_t() > 0)
        throw InvalidInput("reduction still involves the parameter");
    ResiduePoly out;
    for (const auto& row : rows_)
        out.push_back(row.empty() ? k_.zero() : row[0]);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::string BivariateResidue::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = deg_x(); i >= 0; --i)
        for (long j = static_cast<long>(rows_[static_cast<size_t>(i)].size()) - 1;
             j >= 0; --j) {
            const ResidueElement& c = rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (i == 1) os << "*x";
            if (i > 1) os << "*x^" << i;
            if (j == 1) os << "*t";
            if (j > 1) os << "*t^" << j;
        }
    if (first) os << "0";
    return os.str();
}

BivariatePoly::BivariatePoly(LocalField K,
                             std::vector<std::vector<FieldElement>> rows)
    : field_(std::move(K)), rows_(std::move(rows)) {
    if (!field_.valid()) throw InvalidInput("polynomial needs a constructed field");
    for (auto& row : rows_) {
        for (const auto& c : row)
            if (!c.field().same_field(field_))
                throw InvalidInput("coefficient from a different field");
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    }
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

long BivariatePoly::deg_t() const {
    long d = -1;
    for (const auto& row : rows_)
        d = std::max(d, static_cast<long>(row.size()) - 1);
    return d;
}

FieldElement BivariatePoly::coeff(long i, long j) const {
    if (i < 0 || i >= static_cast<long>(rows_.size())) return field_.zero();
    const auto& row = rows_[static_cast<size_t>(i)];
    if (j < 0 || j >= static_cast<long>(row.size())) return field_.zero();
    return row[static_cast<size_t>(j)];
}

long BivariatePoly::content_valuation() const {
    std::vector<FieldElement> flat;
    for (const auto& row : rows_)
        for (const auto& c : row) flat.push_back(c);
    return content_over(field_, flat.begin(), flat.end());
}

BivariatePoly BivariatePoly::normalized() const {
    long c = content_valuation();
    if (c == 0) return *this;
    long q = 0, r = 0;
    split_content(c, field_.e(), q, r);
    std::vector<std::vector<FieldElement>> out(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        out[i].reserve(rows_[i].size());
        for (const auto& x : rows_[i]) out[i].push_back(divide_out(field_, x, q, r));
    }
    return BivariatePoly(field_, std::move(out));
}

BivariateResidue BivariatePoly::reduce_mod_pi() const {
    if (content_valuation() != 0)
        throw NotNormalized("reduction requires unit content");
    std::vector<std::vector<ResidueElement>> out(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        out[i].reserve(rows_[i].size());
        for (const auto& c : rows_[i]) out[i].push_back(field_.residue(c));
    }
    return BivariateResidue(field_.residue_field(), std::move(out));
}

BivariatePoly BivariatePoly::substitute_x(const FieldElement& shift,
                                          const FieldElement& scale) const {
    if (rows_.empty()) return *this;
    using Row = std::vector<FieldElement>;
    auto row_scaled = [&](const Row& row, const FieldElement& c) {
        Row out;
        out.reserve(row.size());
        for (const auto& a : row) out.push_back(a.mul(c));
        return out;
    };
    auto row_accum = [&](Row& into, const Row& add) {
        if (into.size() < add.size())
            into.resize(add.size(), field_.zero());
        for (size_t j = 0; j < add.size(); ++j) into[j] = into[j].add(add[j]);
    };
    // Horner over x with rows (polynomials in t) as coefficients.
    std::vector<Row> acc{rows_.back()};
    for (long i = deg_x() - 1; i >= 0; --i) {
        std::vector<Row> next(acc.size() + 1);
        for (size_t k = 0; k < acc.size(); ++k) {
            row_accum(next[k], row_scaled(acc[k], shift));
            row_accum(next[k + 1], row_scaled(acc[k], scale));
        }
        row_accum(next[0], rows_[static_cast<size_t>(i)]);
        acc = std::move(next);
    }
    return BivariatePoly(field_, std::move(acc));
}

BivariatePoly BivariatePoly::substitute_t(const FieldElement& lift_digit,
                                          const FieldElement& pi_F) const {
    std::vector<std::vector<FieldElement>> out(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) continue;
        // Horner in t per row: acc <- acc*(pi_F*t + lift_digit) + a_{i,j}.
        std::vector<FieldElement> acc{row.back()};
        for (long j = static_cast<long>(row.size()) - 2; j >= 0; --j) {
            std::vector<FieldElement> next(acc.size() + 1, field_.zero());
            for (size_t k = 0; k < acc.size(); ++k) {
                next[k] = next[k].add(acc[k].mul(lift_digit));
                next[k + 1] = next[k + 1].add(acc[k].mul(pi_F));
            }
            next[0] = next[0].add(row[static_cast<size_t>(j)]);
            acc = std::move(next);
        }
        out[i] = std::move(acc);
    }
    return BivariatePoly(field_, std::move(out));
}

PolyOverK BivariatePoly::evaluate_t(const FieldElement& t) const {
    std::vector<FieldElement> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        if (row.empty()) {
            out.push_back(field_.zero());
            continue;
        }
        FieldElement acc = row.back();
        for (long j = static_cast<long>(row.size()) - 2; j >= 0; --j)
            acc = acc.mul(t).add(row[static_cast<size_t>(j)]);
        out.push_back(acc);
    }
    return PolyOverK(field_, std::move(out));
}

std::string BivariatePoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = deg_x(); i >= 0; --i) {
        const auto& row = rows_[static_cast<size_t>(i)];
        for (long j = static_cast<long>(row.size()) - 1; j >= 0; --j) {
            const FieldElement& c = row[static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (i == 1) os << "*x";
            if (i > 1) os << "*x^" << i;
            if (j == 1) os << "*t";
            if (j > 1) os << "*t^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace gsm
