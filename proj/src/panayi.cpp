#include "gsm/panayi.hpp"

#include <climits>
#include <deque>
#include <sstream>

#include "plinalg.hpp"

namespace gsm {

namespace {

struct FieldOps {
    Valuation val(const FieldElement& x) const { return x.val(); }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        return a.sub(b);
    }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        return a.mul(b);
    }
    FieldElement div(const FieldElement& a, const FieldElement& b) const {
        return a.div(b);
    }
    FieldElement neg(const FieldElement& a) const { return a.neg(); }
    bool is_zero(const FieldElement& a) const { return a.is_zero(); }
};

using FElim = plinalg::Eliminator<FieldElement, FieldOps>;

// Sylvester resultant over K; both arguments must be nonzero.
FieldElement resultant(const PolyOverK& a, const PolyOverK& b) {
    const LocalField& K = a.field();
    const long n = a.degree();
    const long m = b.degree();
    if (n < 0 || m < 0) throw InvalidInput("resultant of a zero polynomial");
    if (n == 0) return a.coeff(0).pow_ui(static_cast<unsigned long>(m));
    if (m == 0) return b.coeff(0).pow_ui(static_cast<unsigned long>(n));
    const long size = n + m;
    std::vector<std::vector<FieldElement>> s(
        static_cast<size_t>(size),
        std::vector<FieldElement>(static_cast<size_t>(size), K.zero()));
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j)
            s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = a.coeff(n - j);
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j)
            s[static_cast<size_t>(m + r)][static_cast<size_t>(r + j)] = b.coeff(m - j);
    return FElim::det(std::move(s), FieldOps{});
}

// Newton sharpening from a certified approximation; stops at the first
// residual that is zero to working precision or at a stall.
FieldElement refine_root(const PolyOverK& phi, const PolyOverK& dphi,
                         FieldElement x) {
    long prev = LONG_MIN;
    for (int it = 0; it < 200; ++it) {
        FieldElement fx = phi.evaluate(x);
        Valuation v = fx.val();
        if (!v.is_exact()) break;
        if (v.value() <= prev) break;
        prev = v.value();
        FieldElement dfx = dphi.evaluate(x);
        Valuation dv = dfx.val();
        if (!dv.is_exact() || 2 * dv.value() >= v.value()) break;
        x = x.sub(fx.div(dfx));
    }
    return x;
}

std::string render_digits(const LocalField& K, const std::vector<long>& idx) {
    std::ostringstream os;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << K.residue_field().from_index(idx[i]).str();
    }
    return os.str();
}

struct Branch {
    PolyOverK phi;                // normalized
    std::vector<long> digits;     // residue indices chosen so far
    FieldElement delta;           // sum lift(digit) * pi^position
    long depth = 0;
};

} // namespace

RootReport count_roots(const PolyOverK& phi, const LocalField& K, long max_depth) {
    if (!K.valid() || !phi.field().same_field(K))
        throw InvalidInput("polynomial and field do not match");
    if (phi.is_zero()) throw InvalidInput("root counting needs a nonzero polynomial");
    RootReport report;
    if (phi.degree() == 0) return report;

    PolyOverK dphi = phi.derivative();
    FieldElement res = resultant(phi, dphi);
    Valuation rv = res.val();
    if (!rv.is_exact())
        throw InvalidInput("polynomial is not squarefree to working precision; "
                           "root counting would not terminate");
    if (max_depth < 0) max_depth = 2 * std::max(rv.value(), 0L) + 4;

    const FieldElement pi = K.uniformizer();
    std::deque<Branch> frontier;
    frontier.push_back(Branch{phi.normalized(), {}, K.zero(), 0});

    while (!frontier.empty()) {
        Branch br = std::move(frontier.front());
        frontier.pop_front();

        ResiduePoly red = br.phi.reduce_mod_pi();
        long d = degree(red);
        if (d < 0)
            throw Error("normalized polynomial reduced to zero; content "
                        "bookkeeping failed");
        if (d == 0) continue; // unit constant: no root beyond this prefix
        if (d == 1) {
            // One root lives behind this digit string; its next digit is the
            // root of the linear reduction.
            ResidueElement beta = red[0].neg().mul(red[1].inv());
            std::vector<long> digits = br.digits;
            digits.push_back(beta.index());
            FieldElement approx =
                br.delta.add(K.uniformizer_pow(br.depth).mul(K.lift(beta)));
            // Behind this prefix exactly one root remains, so every further
            // reduction stays linear and its root is a forced digit. Walk
            // digits until the residual clears the Hensel margin (or is
            // already zero to precision), so Newton below converges fully.
            PolyOverK tail = br.phi;
            ResidueElement next = beta;
            long depth2 = br.depth;
            for (long guard = 0; guard < 4 * K.base_precision(); ++guard) {
                Valuation v = phi.evaluate(approx).val();
                if (!v.is_exact()) break;
                Valuation dv = dphi.evaluate(approx).val();
                if (dv.is_exact() && v.value() > 2 * dv.value()) break;
                bool advanced = false;
                try {
                    tail = tail.substitute(K.lift(next), pi).normalized();
                    ResiduePoly deeper = tail.reduce_mod_pi();
                    if (degree(deeper) == 1) {
                        next = deeper[0].neg().mul(deeper[1].inv());
                        ++depth2;
                        approx = approx.add(
                            K.uniformizer_pow(depth2).mul(K.lift(next)));
                        advanced = true;
                    }
                } catch (const PrecisionExhausted&) {
                }
                if (!advanced) break;
            }
            FieldElement value = refine_root(phi, dphi, approx);
            Valuation resid = phi.evaluate(value).val();
            RootApproximation out;
            out.digit_indices = std::move(digits);
            out.digits = render_digits(K, out.digit_indices);
            out.value = value;
            out.residual_valuation = resid.is_exact() ? resid.value() : resid.bound();
            report.approximations.push_back(std::move(out));
            continue;
        }
        std::vector<ResidueElement> roots = roots_in_k(red, K.residue_field());
        if (roots.empty()) continue;
        if (br.depth + 1 > max_depth)
            throw DepthExceeded("root counting passed the depth bound; the input "
                                "may need more precision");
        for (const ResidueElement& beta : roots) {
            FieldElement bhat = K.lift(beta);
            Branch child;
            child.phi = br.phi.substitute(bhat, pi).normalized();
            child.digits = br.digits;
            child.digits.push_back(beta.index());
            child.delta = br.delta.add(K.uniformizer_pow(br.depth).mul(bhat));
            child.depth = br.depth + 1;
            frontier.push_back(std::move(child));
        }
    }

    report.count = static_cast<long>(report.approximations.size());
    return report;
}

FieldElement embed_subfield(const LocalField& K,
                            const std::vector<BigInt>& subfield_poly) {
    PolyOverK phi = PolyOverK::from_integers(K, subfield_poly);
    if (phi.degree() < 1)
        throw InvalidInput("subfield polynomial must have degree at least 1");
    RootReport r = count_roots(phi, K);
    if (r.count == 0)
        throw NoRootInField("the subfield does not embed: its defining "
                            "polynomial has no root in K");
    return r.approximations.front().value;
}

} // namespace gsm
