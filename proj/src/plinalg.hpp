#ifndef GSM_PLINALG_HPP
#define GSM_PLINALG_HPP

#include <vector>

#include "gsm/errors.hpp"
#include "gsm/valuation.hpp"

namespace gsm {
namespace plinalg {

/**
 * Gaussian elimination with min-valuation pivoting over an ultrametric
 * coefficient domain. Ops must provide:
 *   Valuation val(const T&);      // exact or at-least bound
 *   T sub(const T&, const T&);
 *   T mul(const T&, const T&);
 *   T div(const T&, const T&);    // by a unit-content pivot
 *   T neg(const T&);
 *   bool is_zero(const T&);       // zero to precision
 * Picking the minimum-valuation entry as pivot keeps every elimination
 * factor integral, so tracked precision bounds stay sound.
 */
template <class T, class Ops>
struct Eliminator {
    // Returns the determinant with conservative precision tracking. When a
    // remaining block is entirely zero to precision, the result is the
    // accumulated product times one minimal-bound zero entry per remaining
    // row: a sound lower bound on the determinant's valuation.
    static T det(std::vector<std::vector<T>> a, const Ops& ops) {
        const long n = static_cast<long>(a.size());
        if (n == 0) throw InvalidInput("determinant of empty matrix");
        bool negate = false;
        long k = 0;
        T prod = a[0][0]; // placeholder; overwritten below
        bool have_prod = false;
        for (; k < n; ++k) {
            long pr = -1, pc = -1;
            long best = 0;
            for (long r = k; r < n; ++r)
                for (long c = k; c < n; ++c) {
                    Valuation v = ops.val(a[r][c]);
                    if (!v.is_exact()) continue;
                    if (pr < 0 || v.value() < best) {
                        best = v.value();
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) break; // remaining block zero to precision
            if (pr != k) {
                std::swap(a[pr], a[k]);
                negate = !negate;
            }
            if (pc != k) {
                for (long r = 0; r < n; ++r) std::swap(a[r][pc], a[r][k]);
                negate = !negate;
            }
            for (long r = k + 1; r < n; ++r) {
                if (ops.is_zero(a[r][k])) continue;
                T factor = ops.div(a[r][k], a[k][k]);
                for (long c = k; c < n; ++c)
                    a[r][c] = ops.sub(a[r][c], ops.mul(factor, a[k][c]));
            }
            prod = have_prod ? ops.mul(prod, a[k][k]) : a[k][k];
            have_prod = true;
        }
        if (k < n) {
            // Fold one minimal-bound zero per unfinished row into the product.
            for (long r = k; r < n; ++r) {
                long bc = k;
                for (long c = k + 1; c < n; ++c)
                    if (ops.val(a[r][c]).bound() < ops.val(a[r][bc]).bound())
                        bc = c;
                prod = have_prod ? ops.mul(prod, a[r][bc]) : a[r][bc];
                have_prod = true;
            }
        }
        return negate ? ops.neg(prod) : prod;
    }

    // Solves A x = b; raises PrecisionExhausted when no usable pivot exists.
    static std::vector<T> solve(std::vector<std::vector<T>> a,
                                std::vector<T> b, const Ops& ops) {
        const long n = static_cast<long>(a.size());
        std::vector<long> colperm(n);
        for (long i = 0; i < n; ++i) colperm[i] = i;
        for (long k = 0; k < n; ++k) {
            long pr = -1, pc = -1;
            long best = 0;
            for (long r = k; r < n; ++r)
                for (long c = k; c < n; ++c) {
                    Valuation v = ops.val(a[r][c]);
                    if (!v.is_exact()) continue;
                    if (pr < 0 || v.value() < best) {
                        best = v.value();
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0)
                throw PrecisionExhausted(
                    "linear solve: matrix is singular to working precision");
            if (pr != k) {
                std::swap(a[pr], a[k]);
                std::swap(b[pr], b[k]);
            }
            if (pc != k) {
                for (long r = 0; r < n; ++r) std::swap(a[r][pc], a[r][k]);
                std::swap(colperm[pc], colperm[k]);
            }
            for (long r = k + 1; r < n; ++r) {
                if (ops.is_zero(a[r][k])) continue;
                T factor = ops.div(a[r][k], a[k][k]);
                for (long c = k; c < n; ++c)
                    a[r][c] = ops.sub(a[r][c], ops.mul(factor, a[k][c]));
                b[r] = ops.sub(b[r], ops.mul(factor, b[k]));
            }
        }
        std::vector<T> x(b);
        for (long k = n - 1; k >= 0; --k) {
            T acc = b[k];
            for (long c = k + 1; c < n; ++c)
                acc = ops.sub(acc, ops.mul(a[k][c], x[c]));
            x[k] = ops.div(acc, a[k][k]);
        }
        std::vector<T> out(x);
        for (long i = 0; i < n; ++i) out[colperm[i]] = x[i];
        return out;
    }
};

} // namespace plinalg
} // namespace gsm

#endif
