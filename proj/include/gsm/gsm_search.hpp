#ifndef GSM_GSM_SEARCH_HPP
#define GSM_GSM_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/errors.hpp"
#include "gsm/local_field.hpp"
#include "gsm/local_poly.hpp"

namespace gsm {

/**
 * One monomial of a parametric coefficient: coefficient * prod t_k^e_k,
 * with one exponent per parameter of the family.
 */
struct ParamTerm {
    std::vector<long> exponents;
    BigInt coefficient;
};

/**
 * A parametric family P(t_1, ..., t_r, x): each x-coefficient is an
 * integer-coefficient polynomial in the parameters. The last parameter is
 * the one the digit search solves for.
 */
struct GenericPolynomial {
    std::string name;
    std::string group;
    long arity = 0;
    std::vector<std::vector<ParamTerm>> coeffs; // constant term first in x

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Built-in families ("D5", "C3"). InvalidInput for unknown names.
const GenericPolynomial& builtin_generic(const std::string& name);
std::vector<std::string> builtin_generic_names();

// Template evaluated coefficient-wise in K; params length must equal arity.
// Leading coefficient zero to precision raises DegenerateSpecialization.
PolyOverK specialize(const GenericPolynomial& g, const LocalField& K,
                     const std::vector<FieldElement>& params);

// The same evaluation over the integers, for global candidates.
std::vector<BigInt> specialize_integer(const GenericPolynomial& g,
                                       const std::vector<BigInt>& params);

// All but the last parameter fixed to integers; the free one stays as t.
BivariatePoly specialize_bivariate(const GenericPolynomial& g,
                                   const LocalField& K,
                                   const std::vector<BigInt>& fixed);

struct SearchJob {
    LocalField K;
    // Defining polynomial of the subfield the free parameter lives in;
    // degree 1 (e.g. x) means Q_p itself.
    std::vector<BigInt> F_poly{BigInt(0), BigInt(1)};
    GenericPolynomial generic;
    std::vector<BigInt> fixed_params;
    long digit_bound = 6;
    long iteration_cap = 0; // per branch; 0 means max(8, 4 * digit_bound)
    long frontier_cap = 10000;
    bool keep_trace = true;
};

struct TraceStep {
    // "initial", "substitute-t", "normalize" or "substitute-x"
    std::string action;
    std::vector<long> digit_indices; // committed t-digits when the step ran
    BivariatePoly poly;
};

struct SearchBranch {
    std::string status; // "root-found", "dead" or "bound-hit"
    std::vector<long> digit_indices;
    std::string digits;
    // root-found only:
    std::optional<FieldElement> t_star;     // sum of lifted digits in K
    std::optional<BigInt> global_parameter; // when the subfield is Q_p
    std::vector<BigInt> specialized;        // integer coefficients, ditto
    long verified_roots = 0;
};

struct SearchResult {
    std::vector<SearchBranch> branches; // in deterministic traversal order
    std::vector<TraceStep> trace;
    long root_found = 0;
    long dead = 0;
    long bound_hit = 0;
};

/** The live frontier outgrew its cap; carries everything settled so far. */
class FrontierExplosion : public Error {
public:
    FrontierExplosion(const std::string& what, SearchResult partial)
        : Error(what), partial_(std::move(partial)) {}
    const SearchResult& partial() const { return partial_; }

private:
    SearchResult partial_;
};

SearchResult search(const SearchJob& job);

// The integer with the committed digits in base p. Only meaningful when the
// digits were taken over Q_p itself; UnsupportedReconstruction otherwise.
BigInt reconstruct_global(const std::vector<long>& digit_indices, long p,
                          bool trivial_subfield);

// Does the candidate polynomial define K over Q_p? Both polynomials must be
// monic of K's degree and irreducible over Q_p (caller-asserted); then the
// candidate defines K exactly when it has a root in K.
bool check_gsm_local(const LocalField& K, const std::vector<BigInt>& candidate);
bool check_gsm_local(long p, const std::vector<BigInt>& local_poly,
                     const std::vector<BigInt>& candidate, long prec,
                     const LocalField::Config& cfg);
bool check_gsm_local(long p, const std::vector<BigInt>& local_poly,
                     const std::vector<BigInt>& candidate,
                     long prec = kDefaultPrecision);

} // namespace gsm

#endif
