#ifndef GSM_TESTS_ORACLE_HPP
#define GSM_TESTS_ORACLE_HPP

#include <climits>
#include <deque>
#include <vector>

#include "gsm/errors.hpp"
#include "gsm/local_field.hpp"
#include "gsm/local_poly.hpp"

namespace gsm::testing {

// Brute-force root counter used as an independent check: enumerate residue
// classes of O_K modulo pi^m for growing m, certify a class by the Hensel
// criterion nu(phi(d)) > 2 nu(phi'(d)), kill it when nu(phi(d)) is exactly
// below the class depth (no extension can vanish deeper), and refine the
// certified representatives to deduplicate. Assumes integral coefficients.
inline long oracle_count(const PolyOverK& phi, const LocalField& K,
                         long modulus_depth) {
    struct Cand {
        FieldElement delta;
        long depth;
    };
    PolyOverK dphi = phi.derivative();

    auto sharpen = [&](FieldElement x) {
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
    };

    std::vector<FieldElement> certified;
    std::deque<Cand> frontier;
    frontier.push_back(Cand{K.zero(), 0});
    while (!frontier.empty()) {
        Cand c = std::move(frontier.front());
        frontier.pop_front();
        Valuation vf = phi.evaluate(c.delta).val();
        Valuation vd = dphi.evaluate(c.delta).val();
        long vf_floor = vf.is_exact() ? vf.value() : vf.bound();
        // Retiring the class is only sound when the Hensel uniqueness ball
        // delta + pi^(vd+1) O covers the whole class delta + pi^depth O,
        // i.e. depth > vd; otherwise a second root can share the class.
        if (vd.is_exact() && vf_floor > 2 * vd.value() &&
            c.depth > vd.value()) {
            certified.push_back(sharpen(c.delta));
            continue;
        }
        if (vf.is_exact() && vf.value() < c.depth) continue;
        if (c.depth >= modulus_depth)
            throw Inconclusive("oracle: candidates remain uncertified at the "
                               "modulus depth");
        for (const ResidueElement& digit : K.residue_field().enumerate()) {
            Cand child;
            child.delta =
                c.delta.add(K.uniformizer_pow(c.depth).mul(K.lift(digit)));
            child.depth = c.depth + 1;
            frontier.push_back(std::move(child));
        }
    }

    long count = 0;
    std::vector<FieldElement> distinct;
    for (const auto& r : certified) {
        bool dup = false;
        for (const auto& seen : distinct)
            if (r.agrees_with(seen)) {
                dup = true;
                break;
            }
        if (!dup) {
            distinct.push_back(r);
            ++count;
        }
    }
    return count;
}

} // namespace gsm::testing

#endif
