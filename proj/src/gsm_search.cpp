#include "gsm/gsm_search.hpp"

#include <deque>
#include <utility>

#include "gsm/panayi.hpp"

namespace gsm {

namespace {

BigInt bigint_pow(const BigInt& base, long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::vector<GenericPolynomial> make_builtins() {
    std::vector<GenericPolynomial> v;

    // x^5 + (t-3)x^4 + (s-t+3)x^3 + (t^2-t-2s-1)x^2 + sx + t, params (s, t)
    GenericPolynomial d5;
    d5.name = "D5";
    d5.group = "D5";
    d5.arity = 2;
    d5.coeffs = {
        {{{0, 1}, 1}},
        {{{1, 0}, 1}},
        {{{0, 2}, 1}, {{0, 1}, -1}, {{1, 0}, -2}, {{0, 0}, -1}},
        {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 3}},
        {{{0, 1}, 1}, {{0, 0}, -3}},
        {{{0, 0}, 1}},
    };
    v.push_back(std::move(d5));

    // x^3 - tx^2 + (t-3)x + 1, param t
    GenericPolynomial c3;
    c3.name = "C3";
    c3.group = "C3";
    c3.arity = 1;
    c3.coeffs = {
        {{{0}, 1}},
        {{{1}, 1}, {{0}, -3}},
        {{{1}, -1}},
        {{{0}, 1}},
    };
    v.push_back(std::move(c3));

    return v;
}

const std::vector<GenericPolynomial>& builtins() {
    static const std::vector<GenericPolynomial> v = make_builtins();
    return v;
}

std::string render_digits(const ResidueField& k,
                          const std::vector<long>& indices) {
    std::string s = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += k.from_index(indices[i]).str();
    }
    s += "}";
    return s;
}

} // namespace

const GenericPolynomial& builtin_generic(const std::string& name) {
    for (const auto& g : builtins())
        if (g.name == name) return g;
    throw InvalidInput("unknown generic polynomial: " + name);
}

std::vector<std::string> builtin_generic_names() {
    std::vector<std::string> names;
    for (const auto& g : builtins()) names.push_back(g.name);
    return names;
}

PolyOverK specialize(const GenericPolynomial& g, const LocalField& K,
                     const std::vector<FieldElement>& params) {
    if (static_cast<long>(params.size()) != g.arity)
        throw InvalidInput("parameter count does not match the family arity");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(g.coeffs.size());
    for (const auto& terms : g.coeffs) {
        FieldElement acc = K.zero();
        for (const auto& term : terms) {
            FieldElement m = K.from_integer(term.coefficient);
            for (long k = 0; k < g.arity; ++k) {
                long e = term.exponents[static_cast<size_t>(k)];
                if (e > 0)
                    m = m.mul(params[static_cast<size_t>(k)].pow_ui(
                        static_cast<unsigned long>(e)));
            }
            acc = acc.add(m);
        }
        coeffs.push_back(std::move(acc));
    }
    if (coeffs.empty() || coeffs.back().is_zero())
        throw DegenerateSpecialization(
            "leading coefficient vanished at these parameter values");
    return PolyOverK(K, std::move(coeffs));
}

std::vector<BigInt> specialize_integer(const GenericPolynomial& g,
                                       const std::vector<BigInt>& params) {
    if (static_cast<long>(params.size()) != g.arity)
        throw InvalidInput("parameter count does not match the family arity");
    std::vector<BigInt> coeffs;
    coeffs.reserve(g.coeffs.size());
    for (const auto& terms : g.coeffs) {
        BigInt acc = 0;
        for (const auto& term : terms) {
            BigInt m = term.coefficient;
            for (long k = 0; k < g.arity; ++k) {
                long e = term.exponents[static_cast<size_t>(k)];
                if (e > 0) m *= bigint_pow(params[static_cast<size_t>(k)], e);
            }
            acc += m;
        }
        coeffs.push_back(std::move(acc));
    }
    if (coeffs.empty() || coeffs.back() == 0)
        throw DegenerateSpecialization(
            "leading coefficient vanished at these parameter values");
    return coeffs;
}

BivariatePoly specialize_bivariate(const GenericPolynomial& g,
                                   const LocalField& K,
                                   const std::vector<BigInt>& fixed) {
    if (static_cast<long>(fixed.size()) != g.arity - 1)
        throw InvalidInput("exactly one parameter must stay free");
    std::vector<std::vector<BigInt>> grid(g.coeffs.size());
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        for (const auto& term : g.coeffs[i]) {
            long j = term.exponents[static_cast<size_t>(g.arity - 1)];
            BigInt m = term.coefficient;
            for (long k = 0; k + 1 < g.arity; ++k) {
                long e = term.exponents[static_cast<size_t>(k)];
                if (e > 0) m *= bigint_pow(fixed[static_cast<size_t>(k)], e);
            }
            auto& row = grid[i];
            if (static_cast<long>(row.size()) <= j)
                row.resize(static_cast<size_t>(j) + 1, BigInt(0));
            row[static_cast<size_t>(j)] += m;
        }
    }
    bool leading_zero = true;
    if (!grid.empty())
        for (const BigInt& c : grid.back())
            if (c != 0) leading_zero = false;
    if (leading_zero)
        throw DegenerateSpecialization(
            "leading coefficient vanished at these parameter values");
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(grid.size());
    for (const auto& row : grid) {
        std::vector<FieldElement> out;
        out.reserve(row.size());
        for (const BigInt& c : row) out.push_back(K.from_integer(c));
        rows.push_back(std::move(out));
    }
    return BivariatePoly(K, std::move(rows));
}

BigInt reconstruct_global(const std::vector<long>& digit_indices, long p,
                          bool trivial_subfield) {
    if (!trivial_subfield)
        throw UnsupportedReconstruction(
            "global reconstruction needs the parameter subfield to be Q_p; "
            "use the digit string instead");
    BigInt t = 0;
    BigInt pw = 1;
    for (long idx : digit_indices) {
        t += idx * pw;
        pw *= p;
    }
    return t;
}

SearchResult search(const SearchJob& job) {
    const LocalField& K = job.K;
    if (!K.valid()) throw InvalidInput("search needs a constructed field");
    if (static_cast<long>(job.fixed_params.size()) != job.generic.arity - 1)
        throw InvalidInput("exactly one parameter must stay free");
    if (job.digit_bound < 0) throw InvalidInput("digit bound must be >= 0");
    if (job.F_poly.size() < 2)
        throw InvalidInput("subfield polynomial must have degree >= 1");
    const long p = K.p();
    const ResidueField& k = K.residue_field();

    // The free parameter ranges over the ring of integers of the subfield F:
    // its digits come from F's residue field, embedded in k as the fixed
    // points of x -> x^(p^f_F), and consecutive digits are spaced by pi_F.
    const bool trivial_F = job.F_poly.size() == 2;
    FieldElement pi_F = K.from_integer(p);
    long f_F = 1;
    if (!trivial_F) {
        LocalField F =
            LocalField::construct(p, job.F_poly, K.base_precision());
        FieldElement alpha_F;
        try {
            alpha_F = embed_subfield(K, job.F_poly);
        } catch (const NoRootInField&) {
            throw EmbeddingFailed(
                "the parameter subfield does not embed in the target field");
        }
        LocalField::UniformizerForm uf = F.uniformizer_form();
        pi_F = alpha_F.pow_ui(static_cast<unsigned long>(uf.a)).shift_p(uf.b);
        f_F = F.f();
    }
    long q_F = 1;
    for (long i = 0; i < f_F; ++i) q_F *= p;
    std::vector<ResidueElement> digit_set;
    for (const ResidueElement& c : k.enumerate())
        if (c.pow(q_F) == c) digit_set.push_back(c);
    if (static_cast<long>(digit_set.size()) != q_F)
        throw EmbeddingFailed(
            "the subfield residue field does not embed in the target's");

    const long iter_cap = job.iteration_cap > 0
                              ? job.iteration_cap
                              : std::max<long>(8, 4 * job.digit_bound);
    const FieldElement pi_K = K.uniformizer();

    struct Node {
        BivariatePoly phi;
        std::vector<long> digits;
        long iters;
    };

    SearchResult result;
    auto settle = [&](SearchBranch&& b) {
        if (b.status == "root-found") {
            for (const SearchBranch& seen : result.branches)
                if (seen.status == "root-found" &&
                    seen.digit_indices == b.digit_indices)
                    return; // same parameter digits via another x-path
            result.root_found++;
        } else if (b.status == "dead") {
            result.dead++;
        } else {
            result.bound_hit++;
        }
        result.branches.push_back(std::move(b));
    };

    BivariatePoly phi0 = specialize_bivariate(job.generic, K, job.fixed_params);
    if (phi0.content_valuation() != 0) phi0 = phi0.normalized();
    if (job.keep_trace) result.trace.push_back({"initial", {}, phi0});

    std::deque<Node> frontier;
    frontier.push_back(Node{std::move(phi0), {}, 0});

    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();

        SearchBranch base;
        base.digit_indices = node.digits;
        base.digits = render_digits(k, node.digits);

        if (node.iters >= iter_cap) {
            base.status = "bound-hit";
            settle(std::move(base));
            continue;
        }

        long content = node.phi.content_valuation();
        BivariatePoly phin =
            content != 0 ? node.phi.normalized() : node.phi;
        BivariateResidue red = phin.reduce_mod_pi();

        if (red.deg_t() >= 1) {
            // The reduction still depends on t, so the next digit of the
            // parameter decides how the branch continues: fork over every
            // digit, substituting into the unnormalized polynomial.
            if (static_cast<long>(node.digits.size()) >= job.digit_bound) {
                base.status = "bound-hit";
                settle(std::move(base));
                continue;
            }
            for (const ResidueElement& beta : digit_set) {
                Node child;
                child.phi = node.phi.substitute_t(K.lift(beta), pi_F);
                child.digits = node.digits;
                child.digits.push_back(beta.index());
                child.iters = node.iters + 1;
                if (job.keep_trace)
                    result.trace.push_back(
                        {"substitute-t", child.digits, child.phi});
                frontier.push_back(std::move(child));
                if (static_cast<long>(frontier.size()) > job.frontier_cap)
                    throw FrontierExplosion("search frontier outgrew its cap",
                                            std::move(result));
            }
            continue;
        }

        if (content != 0 && job.keep_trace)
            result.trace.push_back({"normalize", node.digits, phin});

        ResiduePoly u = red.as_univariate_x();
        long d = degree(u);
        if (d < 0)
            throw Error("normalized polynomial reduced to zero; content "
                        "bookkeeping failed");
        if (d == 0) {
            base.status = "dead";
            settle(std::move(base));
            continue;
        }
        if (d == 1) {
            // Linear in x and free of t: every continuation of the committed
            // digits yields a root, so the minimal one (all further digits
            // zero) is the reported parameter.
            base.status = "root-found";
            FieldElement t_star = K.zero();
            FieldElement pw = K.one();
            for (long idx : node.digits) {
                t_star = t_star.add(pw.mul(K.lift(k.from_index(idx))));
                pw = pw.mul(pi_F);
            }
            base.t_star = t_star;
            std::vector<FieldElement> params;
            for (const BigInt& b : job.fixed_params)
                params.push_back(K.from_integer(b));
            params.push_back(t_star);
            long verified = 0;
            try {
                verified = count_roots(specialize(job.generic, K, params), K)
                               .count;
            } catch (const InvalidInput&) {
                verified = 0; // not squarefree to precision: unverifiable
            }
            base.verified_roots = verified;
            if (trivial_F) {
                BigInt t_global = reconstruct_global(node.digits, p, true);
                base.global_parameter = t_global;
                std::vector<BigInt> full = job.fixed_params;
                full.push_back(t_global);
                base.specialized = specialize_integer(job.generic, full);
            }
            if (verified < 1) base.status = "dead";
            settle(std::move(base));
            continue;
        }

        std::vector<ResidueElement> roots = roots_in_k(u, k);
        if (roots.empty()) {
            base.status = "dead";
            settle(std::move(base));
            continue;
        }
        for (const ResidueElement& beta : roots) {
            Node child;
            child.phi = phin.substitute_x(K.lift(beta), pi_K);
            child.digits = node.digits;
            child.iters = node.iters + 1;
            if (job.keep_trace)
                result.trace.push_back(
                    {"substitute-x", child.digits, child.phi});
            frontier.push_back(std::move(child));
            if (static_cast<long>(frontier.size()) > job.frontier_cap)
                throw FrontierExplosion("search frontier outgrew its cap",
                                        std::move(result));
        }
    }

    return result;
}

bool check_gsm_local(const LocalField& K,
                     const std::vector<BigInt>& candidate) {
    if (candidate.size() < 2 || candidate.back() != 1)
        throw InvalidInput("candidate must be monic of degree >= 1");
    if (static_cast<long>(candidate.size()) - 1 != K.degree())
        throw InvalidInput("candidate degree must match the field degree");
    return count_roots(PolyOverK::from_integers(K, candidate), K).count >= 1;
}

bool check_gsm_local(long p, const std::vector<BigInt>& local_poly,
                     const std::vector<BigInt>& candidate, long prec,
                     const LocalField::Config& cfg) {
    LocalField K = LocalField::construct(p, local_poly, prec, cfg);
    return check_gsm_local(K, candidate);
}

bool check_gsm_local(long p, const std::vector<BigInt>& local_poly,
                     const std::vector<BigInt>& candidate, long prec) {
    return check_gsm_local(p, local_poly, candidate, prec,
                           LocalField::Config{});
}

} // namespace gsm
