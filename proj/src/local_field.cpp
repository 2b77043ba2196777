#include "gsm/local_field.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "plinalg.hpp"

namespace gsm {

struct LocalField::Data {
    long p = 0, n = 0, e = 1, f = 1;
    long v_alpha = 0;
    long base_prec = 0, pi_prec = 0;
    std::vector<BigInt> defining;
    ResidueField k;
    UniformizerForm uform;
    std::vector<PadicNumber> pi_coords;
    std::vector<PadicNumber> pi_inv_coords;
    std::vector<PadicNumber> gamma_coords;
    std::vector<std::vector<PadicNumber>> gamma_pows; // gamma^j, j < f
    std::vector<std::vector<PadicNumber>> pi_pows;    // pi^l, l < e
    std::vector<std::vector<PadicNumber>> basis_inv;  // maps power coords to (pi-power, gamma-power) coords
    std::vector<std::vector<PadicNumber>> lift_table; // exact lifts, indexed like the residue field
    bool power_basis = false; // pi = alpha and f = 1, so the two bases coincide
    mutable std::mutex pow_mu;
    mutable std::vector<std::vector<PadicNumber>> pow_pos; // pi^(i+1)
    mutable std::vector<std::vector<PadicNumber>> pow_neg; // pi^-(i+1)
};

namespace {

using Coords = std::vector<PadicNumber>;

struct PadicOps {
    Valuation val(const PadicNumber& x) const { return x.valuation(); }
    PadicNumber sub(const PadicNumber& a, const PadicNumber& b) const { return a.sub(b); }
    PadicNumber mul(const PadicNumber& a, const PadicNumber& b) const { return a.mul(b); }
    PadicNumber div(const PadicNumber& a, const PadicNumber& b) const { return a.div(b); }
    PadicNumber neg(const PadicNumber& a) const { return a.neg(); }
    bool is_zero(const PadicNumber& a) const { return a.is_zero(); }
};

using PElim = plinalg::Eliminator<PadicNumber, PadicOps>;

long cdiv(long a, long b) {
    long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

long modinv_long(long x, long m) {
    long a = ((x % m) + m) % m, b = m;
    long u = 1, v = 0;
    while (b != 0) {
        long q = a / b;
        a -= q * b; std::swap(a, b);
        u -= q * v; std::swap(u, v);
    }
    if (a != 1) throw Error("modinv_long: arguments not coprime");
    return ((u % m) + m) % m;
}

Coords make_zero(const LocalField::Data& d) {
    return Coords(static_cast<size_t>(d.n), PadicNumber::zero(d.p, d.base_prec));
}

Coords from_int_raw(const LocalField::Data& d, const BigInt& v) {
    Coords c = make_zero(d);
    c[0] = PadicNumber::from_integer(v, d.p, d.base_prec);
    return c;
}

Coords vadd(const Coords& a, const Coords& b) {
    Coords r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i].add(b[i]);
    return r;
}

Coords vsub(const Coords& a, const Coords& b) {
    Coords r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i].sub(b[i]);
    return r;
}

Coords vneg(const Coords& a) {
    Coords r(a);
    for (auto& x : r) x = x.neg();
    return r;
}

Coords vmul_int(const Coords& a, const BigInt& m) {
    Coords r(a);
    for (auto& x : r) x = x.mul_integer(m);
    return r;
}

Coords vmul_padic(const Coords& a, const PadicNumber& c) {
    Coords r(a);
    for (auto& x : r) x = x.mul(c);
    return r;
}

Coords vshift(const Coords& a, long k) {
    Coords r(a);
    for (auto& x : r) x = x.shift(k);
    return r;
}

bool vzero(const Coords& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

// Polynomial product reduced modulo the monic integer defining polynomial.
Coords vmul(const LocalField::Data& d, const Coords& a, const Coords& b) {
    const long n = d.n;
    std::vector<PadicNumber> t(static_cast<size_t>(2 * n - 1),
                               PadicNumber::zero(d.p, d.base_prec));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            t[static_cast<size_t>(i + j)] =
                t[static_cast<size_t>(i + j)].add(a[static_cast<size_t>(i)].mul(b[static_cast<size_t>(j)]));
    for (long k = 2 * n - 2; k >= n; --k) {
        const PadicNumber c = t[static_cast<size_t>(k)];
        for (long i = 0; i < n; ++i)
            t[static_cast<size_t>(k - n + i)] =
                t[static_cast<size_t>(k - n + i)].sub(c.mul_integer(d.defining[static_cast<size_t>(i)]));
    }
    t.erase(t.begin() + n, t.end());
    return t;
}

// Multiplication by the defining root alpha.
Coords vmul_alpha(const LocalField::Data& d, const Coords& a) {
    const long n = d.n;
    Coords r = make_zero(d);
    for (long i = 1; i < n; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(i - 1)];
    const PadicNumber& top = a[static_cast<size_t>(n - 1)];
    for (long i = 0; i < n; ++i)
        r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)].sub(top.mul_integer(d.defining[static_cast<size_t>(i)]));
    return r;
}

// Matrix of multiplication by x in the power basis; entry [r][c] is the
// r-th coordinate of x * alpha^c.
std::vector<std::vector<PadicNumber>> mult_matrix(const LocalField::Data& d, const Coords& x) {
    const long n = d.n;
    std::vector<Coords> cols(static_cast<size_t>(n));
    cols[0] = x;
    for (long j = 1; j < n; ++j) cols[static_cast<size_t>(j)] = vmul_alpha(d, cols[static_cast<size_t>(j - 1)]);
    std::vector<std::vector<PadicNumber>> m(static_cast<size_t>(n));
    for (long r = 0; r < n; ++r) {
        m[static_cast<size_t>(r)].reserve(static_cast<size_t>(n));
        for (long c = 0; c < n; ++c) m[static_cast<size_t>(r)].push_back(cols[static_cast<size_t>(c)][static_cast<size_t>(r)]);
    }
    return m;
}

Coords vinv(const LocalField::Data& d, const Coords& x) {
    auto m = mult_matrix(d, x);
    Coords rhs = from_int_raw(d, 1);
    return PElim::solve(std::move(m), std::move(rhs), PadicOps{});
}

Coords vdiv(const LocalField::Data& d, const Coords& a, const Coords& b) {
    return vmul(d, a, vinv(d, b));
}

Coords vpow(const LocalField::Data& d, Coords base, unsigned long k) {
    Coords acc = from_int_raw(d, 1);
    while (k) {
        if (k & 1UL) acc = vmul(d, acc, base);
        k >>= 1UL;
        if (k) base = vmul(d, base, base);
    }
    return acc;
}

Coords eval_int_poly(const LocalField::Data& d, const std::vector<BigInt>& poly, const Coords& x) {
    Coords acc = make_zero(d);
    for (size_t i = poly.size(); i-- > 0;) {
        acc = vmul(d, acc, x);
        acc[0] = acc[0].add(PadicNumber::from_integer(poly[i], d.p, d.base_prec));
    }
    return acc;
}

Valuation nu_norm_raw(const LocalField::Data& d, const Coords& x) {
    PadicNumber det = PElim::det(mult_matrix(d, x), PadicOps{});
    Valuation v = det.valuation();
    if (v.is_exact()) {
        long w = v.value();
        if (w % d.f != 0)
            throw Error("norm valuation not divisible by the residue degree");
        return Valuation::exact(w / d.f);
    }
    return Valuation::at_least(cdiv(v.bound(), d.f));
}

// Coordinates of x over the basis {gamma^j pi^l}; index l*f + j.
Coords basis_coords(const LocalField::Data& d, const Coords& x) {
    if (d.power_basis) return x;
    const long n = d.n;
    Coords out(static_cast<size_t>(n), PadicNumber::zero(d.p, d.base_prec));
    for (long r = 0; r < n; ++r) {
        PadicNumber acc = PadicNumber::zero(d.p, 2 * d.base_prec);
        for (long c = 0; c < n; ++c)
            acc = acc.add(d.basis_inv[static_cast<size_t>(r)][static_cast<size_t>(c)].mul(x[static_cast<size_t>(c)]));
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

// Valuation from the basis decomposition. For fixed pi-power l the gamma
// coordinates cannot cancel (their residues are linearly independent), and
// terms with distinct l differ mod e, so the minimum over entries is exact
// whenever the entries involved are exact.
Valuation nu_basis(const LocalField::Data& d, const Coords& x) {
    Coords bc = basis_coords(d, x);
    bool have_exact = false;
    long min_exact = 0;
    long min_bound = LONG_MAX;
    for (long r = 0; r < d.n; ++r) {
        long l = r / d.f;
        Valuation v = bc[static_cast<size_t>(r)].valuation();
        if (v.is_exact()) {
            long t = d.e * v.value() + l;
            if (!have_exact || t < min_exact) min_exact = t;
            have_exact = true;
        } else {
            min_bound = std::min(min_bound, d.e * v.bound() + l);
        }
    }
    if (!have_exact) return Valuation::at_least(min_bound);
    if (min_exact <= min_bound) return Valuation::exact(min_exact);
    // A zero-to-precision entry could hide a smaller term; try the norm
    // route, otherwise settle for a sound lower bound.
    Valuation vn = nu_norm_raw(d, x);
    if (vn.is_exact()) return vn;
    return Valuation::at_least(std::min(min_bound, vn.bound()));
}

} // namespace

LocalField LocalField::construct(long p, const std::vector<BigInt>& defining,
                                 long base_prec) {
    return construct(p, defining, base_prec, Config{});
}

LocalField LocalField::construct(long p, const std::vector<BigInt>& defining,
                                 long base_prec, const Config& cfg) {
    if (!is_prime(p)) throw InvalidPrime("p must be a prime");
    if (base_prec < 2) throw InvalidInput("working precision must be at least 2 digits");
    if (defining.size() < 2) throw InvalidInput("defining polynomial must have degree at least 1");
    if (defining.back() != 1) throw InvalidInput("defining polynomial must be monic");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->n = static_cast<long>(defining.size()) - 1;
    d->defining = defining;
    d->base_prec = base_prec;
    const long n = d->n;

    // Newton polygon of the defining polynomial: a single lower slope is
    // required, running from (0, v0) to (n, 0).
    long v0 = 0, e0 = 1, h = 0;
    std::vector<long> residual{1};
    if (n > 1) {
        if (defining[0] == 0)
            throw InvalidInput("constant term vanishes; the polynomial is divisible by x");
        BigInt a0 = defining[0];
        v0 = remove_factor(a0, p);
        for (long i = 1; i < n; ++i) {
            if (defining[static_cast<size_t>(i)] == 0) continue;
            BigInt ai = defining[static_cast<size_t>(i)];
            long vi = remove_factor(ai, p);
            if (n * vi < v0 * (n - i))
                throw InvalidInput("Newton polygon has more than one slope; "
                                   "the polynomial is reducible over Q_p");
        }
        long g = std::gcd(n, v0);
        e0 = n / g;
        h = v0 / g;
        residual.assign(static_cast<size_t>(g) + 1, 0);
        for (long j = 0; j <= g; ++j) {
            const BigInt& aj = defining[static_cast<size_t>(j * e0)];
            if (aj == 0) continue;
            BigInt q;
            BigInt pw = pow_int(p, v0 - j * h);
            mpz_divexact(q.get_mpz_t(), aj.get_mpz_t(), pw.get_mpz_t());
            residual[static_cast<size_t>(j)] =
                static_cast<long>(mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p)));
        }
    } else if (defining[0] != 0) {
        BigInt a0 = defining[0];
        v0 = remove_factor(a0, p);
    }

    long f = cfg.f;
    if (f == 0) {
        if (n == 1) {
            f = 1;
        } else {
            if (!gfp::squarefree(residual, p))
                throw InvalidInput("Newton polygon residual polynomial is not squarefree; "
                                   "declare e and f explicitly");
            f = gfp::smallest_factor_degree(residual, p);
        }
    }
    if (f <= 0 || n % f != 0)
        throw InvalidInput("residue degree must divide the field degree");
    long e = n / f;
    if (cfg.e != 0 && cfg.e != e)
        throw InvalidInput("declared e and f are inconsistent with the field degree");
    if (e % e0 != 0)
        throw InvalidInput("Newton polygon slope denominator does not divide "
                           "the ramification index");
    if (n > 1 && v0 % f != 0)
        throw InvalidInput("constant-term valuation is not a multiple of the residue "
                           "degree; the defining root would have non-integral valuation");
    d->e = e;
    d->f = f;
    d->v_alpha = (n == 1) ? v0 : v0 / f;
    d->pi_prec = e * base_prec;

    // Uniformizer of the form alpha^a * p^b: needs gcd(nu(alpha), e) = 1.
    long a = 0, b = 1;
    if (e > 1) {
        long va_mod = ((d->v_alpha % e) + e) % e;
        if (std::gcd(va_mod, e) != 1)
            throw UniformizerNotFound("no uniformizer of the form alpha^a * p^b exists "
                                      "for this presentation");
        a = modinv_long(va_mod, e);
        b = (1 - a * d->v_alpha) / e;
    }
    d->uform = UniformizerForm{a, b};
    Coords pi = make_zero(*d);
    pi[static_cast<size_t>(a)] = PadicNumber::from_integer(1, p, base_prec).shift(b);
    d->pi_coords = pi;
    d->power_basis = (f == 1 && a == 1 && b == 0);

    d->k = cfg.residue_modulus.empty()
               ? ResidueField::make(p, f)
               : ResidueField::make(p, f, cfg.residue_modulus);

    // Inertial generator: a root in K of the residue field modulus, found
    // from the exhausted candidate set sum c_j u^j with u = alpha^e0 / p^h
    // (a unit whose residue is a root of the polygon residual), then
    // sharpened by Newton iteration.
    if (f == 1) {
        d->gamma_coords = from_int_raw(*d, 1);
    } else {
        Coords u = make_zero(*d);
        u[static_cast<size_t>(e0)] = PadicNumber::from_integer(1, p, base_prec).shift(-h);
        std::vector<Coords> upow(static_cast<size_t>(f));
        upow[0] = from_int_raw(*d, 1);
        for (long j = 1; j < f; ++j) upow[static_cast<size_t>(j)] = vmul(*d, upow[static_cast<size_t>(j - 1)], u);

        const std::vector<long>& kmod = d->k.modulus();
        std::vector<BigInt> mint(kmod.begin(), kmod.end());
        std::vector<BigInt> mderiv;
        for (size_t i = 1; i < mint.size(); ++i) mderiv.push_back(BigInt(static_cast<long>(i)) * mint[i]);

        const long order = d->k.order();
        bool found = false;
        for (long idx = 1; idx < order && !found; ++idx) {
            long t = idx;
            Coords cand = make_zero(*d);
            for (long j = 0; j < f; ++j) {
                long dig = t % p;
                t /= p;
                if (dig != 0) cand = vadd(cand, vmul_int(upow[static_cast<size_t>(j)], dig));
            }
            if (!nu_norm_raw(*d, eval_int_poly(*d, mint, cand)).ge(1)) continue;
            Valuation vd = nu_norm_raw(*d, eval_int_poly(*d, mderiv, cand));
            if (!(vd.is_exact() && vd.value() == 0)) continue;
            // Newton sharpening, quadratic since nu(m'(cand)) = 0. The residual
            // cannot pass working precision, so accept as soon as it is zero to
            // precision; a stalled exact residual means the candidate is not a
            // simple root after all.
            Coords gq = cand;
            bool refined = false;
            long prev = 0;
            for (int it = 0; it < 200; ++it) {
                Coords mv = eval_int_poly(*d, mint, gq);
                Valuation v = nu_norm_raw(*d, mv);
                if (!v.is_exact()) { refined = true; break; }
                if (it > 0 && v.value() <= prev) break;
                prev = v.value();
                Coords md = eval_int_poly(*d, mderiv, gq);
                gq = vsub(gq, vdiv(*d, mv, md));
            }
            if (!refined) continue;
            d->gamma_coords = gq;
            found = true;
        }
        if (!found)
            throw InvalidInput("no inertial generator found; the declared structure may be "
                               "wrong or the field is outside the covered cases");
    }

    d->gamma_pows.assign(static_cast<size_t>(f), Coords{});
    d->gamma_pows[0] = from_int_raw(*d, 1);
    for (long j = 1; j < f; ++j)
        d->gamma_pows[static_cast<size_t>(j)] = vmul(*d, d->gamma_pows[static_cast<size_t>(j - 1)], d->gamma_coords);
    d->pi_pows.assign(static_cast<size_t>(e), Coords{});
    d->pi_pows[0] = from_int_raw(*d, 1);
    for (long l = 1; l < e; ++l)
        d->pi_pows[static_cast<size_t>(l)] = vmul(*d, d->pi_pows[static_cast<size_t>(l - 1)], d->pi_coords);
    d->pi_inv_coords = vinv(*d, d->pi_coords);

    // Inverse of the basis-change matrix whose columns are gamma^j pi^l.
    {
        std::vector<std::vector<PadicNumber>> bmat(static_cast<size_t>(n));
        std::vector<Coords> cols(static_cast<size_t>(n));
        for (long l = 0; l < e; ++l)
            for (long j = 0; j < f; ++j)
                cols[static_cast<size_t>(l * f + j)] =
                    vmul(*d, d->gamma_pows[static_cast<size_t>(j)], d->pi_pows[static_cast<size_t>(l)]);
        for (long r = 0; r < n; ++r) {
            bmat[static_cast<size_t>(r)].reserve(static_cast<size_t>(n));
            for (long c = 0; c < n; ++c) bmat[static_cast<size_t>(r)].push_back(cols[static_cast<size_t>(c)][static_cast<size_t>(r)]);
        }
        d->basis_inv.assign(static_cast<size_t>(n),
                            std::vector<PadicNumber>(static_cast<size_t>(n), PadicNumber::zero(p, base_prec)));
        for (long i = 0; i < n; ++i) {
            Coords rhs = make_zero(*d);
            rhs[static_cast<size_t>(i)] = PadicNumber::from_integer(1, p, base_prec);
            Coords col = PElim::solve(bmat, rhs, PadicOps{});
            for (long r = 0; r < n; ++r) d->basis_inv[static_cast<size_t>(r)][static_cast<size_t>(i)] = col[static_cast<size_t>(r)];
        }
    }

    // Exact lifts of every residue class as integer combinations of
    // inertial generator powers, indexed like the residue field.
    {
        const long order = d->k.order();
        d->lift_table.assign(static_cast<size_t>(order), Coords{});
        for (long idx = 0; idx < order; ++idx) {
            long t = idx;
            Coords acc = make_zero(*d);
            for (long j = 0; j < f; ++j) {
                long dig = t % p;
                t /= p;
                if (dig != 0) acc = vadd(acc, vmul_int(d->gamma_pows[static_cast<size_t>(j)], dig));
            }
            d->lift_table[static_cast<size_t>(idx)] = acc;
        }
    }

    return LocalField(std::move(d));
}

namespace {
const LocalField::Data& need(const std::shared_ptr<const LocalField::Data>& d) {
    if (!d) throw Error("operation on an empty field handle");
    return *d;
}
} // namespace

long LocalField::p() const { return need(d_).p; }
long LocalField::degree() const { return need(d_).n; }
long LocalField::e() const { return need(d_).e; }
long LocalField::f() const { return need(d_).f; }
long LocalField::alpha_valuation() const { return need(d_).v_alpha; }
long LocalField::base_precision() const { return need(d_).base_prec; }
long LocalField::pi_precision() const { return need(d_).pi_prec; }
const std::vector<BigInt>& LocalField::defining_poly() const { return need(d_).defining; }
const ResidueField& LocalField::residue_field() const { return need(d_).k; }
LocalField::UniformizerForm LocalField::uniformizer_form() const { return need(d_).uform; }

bool LocalField::same_field(const LocalField& other) const { return d_ == other.d_; }

FieldElement LocalField::zero() const { return FieldElement(*this, make_zero(need(d_))); }
FieldElement LocalField::one() const { return FieldElement(*this, from_int_raw(need(d_), 1)); }

FieldElement LocalField::from_integer(const BigInt& v) const {
    return FieldElement(*this, from_int_raw(need(d_), v));
}

FieldElement LocalField::from_rational(const BigInt& num, const BigInt& den) const {
    const Data& d = need(d_);
    Coords c = make_zero(d);
    c[0] = PadicNumber::from_rational(num, den, d.p, d.base_prec);
    return FieldElement(*this, std::move(c));
}

FieldElement LocalField::from_padic(const PadicNumber& v) const {
    const Data& d = need(d_);
    if (v.prime() != d.p) throw InvalidInput("prime mismatch");
    Coords c = make_zero(d);
    c[0] = v;
    return FieldElement(*this, std::move(c));
}

FieldElement LocalField::from_coords(std::vector<PadicNumber> coords) const {
    const Data& d = need(d_);
    if (static_cast<long>(coords.size()) > d.n)
        throw InvalidInput("too many coordinates for the field degree");
    for (const auto& c : coords)
        if (c.prime() != d.p) throw InvalidInput("prime mismatch");
    while (static_cast<long>(coords.size()) < d.n)
        coords.push_back(PadicNumber::zero(d.p, d.base_prec));
    return FieldElement(*this, std::move(coords));
}

FieldElement LocalField::gen() const {
    const Data& d = need(d_);
    if (d.n == 1) return from_integer(-d.defining[0]);
    Coords c = make_zero(d);
    c[1] = PadicNumber::from_integer(1, d.p, d.base_prec);
    return FieldElement(*this, std::move(c));
}

FieldElement LocalField::uniformizer() const { return FieldElement(*this, need(d_).pi_coords); }

FieldElement LocalField::uniformizer_pow(long k) const {
    const Data& d = need(d_);
    if (k == 0) return one();
    std::lock_guard<std::mutex> lock(d.pow_mu);
    auto& table = (k > 0) ? d.pow_pos : d.pow_neg;
    const Coords& step = (k > 0) ? d.pi_coords : d.pi_inv_coords;
    size_t kk = static_cast<size_t>(k > 0 ? k : -k);
    if (table.empty()) table.push_back(step);
    while (table.size() < kk) table.push_back(vmul(d, table.back(), step));
    return FieldElement(*this, table[kk - 1]);
}

FieldElement LocalField::inertial_gen() const { return FieldElement(*this, need(d_).gamma_coords); }

Valuation LocalField::nu(const FieldElement& x) const {
    const Data& d = need(d_);
    if (!same_field(x.field())) throw InvalidInput("element from a different field");
    return nu_basis(d, x.coords());
}

Valuation LocalField::nu_via_norm(const FieldElement& x) const {
    const Data& d = need(d_);
    if (!same_field(x.field())) throw InvalidInput("element from a different field");
    return nu_norm_raw(d, x.coords());
}

ResidueElement LocalField::residue(const FieldElement& x) const {
    const Data& d = need(d_);
    if (!same_field(x.field())) throw InvalidInput("element from a different field");
    Valuation vx = nu_basis(d, x.coords());
    if (vx.is_exact() && vx.value() < 0)
        throw NotIntegral("residue of a non-integral element");
    if (!vx.is_exact() && vx.bound() < 0)
        throw PrecisionExhausted("cannot certify integrality at working precision");

    Coords bc = basis_coords(d, x.coords());
    std::vector<long> digits(static_cast<size_t>(d.f), 0);
    for (long j = 0; j < d.f; ++j) {
        Valuation v = bc[static_cast<size_t>(j)].valuation();
        if (v.is_exact() && v.value() < 0)
            throw Error("basis decomposition inconsistent with integrality");
        if (v.is_exact() && v.value() == 0)
            digits[static_cast<size_t>(j)] = static_cast<long>(
                mpz_fdiv_ui(bc[static_cast<size_t>(j)].unit().get_mpz_t(), static_cast<unsigned long>(d.p)));
    }
    ResidueElement c = d.k.from_coeffs(digits);
    if (nu_basis(d, vsub(x.coords(), d.lift_table[static_cast<size_t>(c.index())])).ge(1))
        return c;
    // Certification failed; fall back to scanning every residue class.
    for (long idx = 0; idx < d.k.order(); ++idx) {
        if (nu_basis(d, vsub(x.coords(), d.lift_table[static_cast<size_t>(idx)])).ge(1))
            return d.k.from_index(idx);
    }
    throw PrecisionExhausted("no residue class certified at working precision");
}

FieldElement LocalField::lift(const ResidueElement& c) const {
    const Data& d = need(d_);
    if (!d.k.same_field(c.field()))
        throw InvalidInput("residue element from a different residue field");
    return FieldElement(*this, d.lift_table[static_cast<size_t>(c.index())]);
}

bool FieldElement::is_zero() const {
    if (!field_.valid()) throw Error("operation on an empty element");
    return vzero(coords_);
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field().valid() || !b.field().valid())
        throw Error("operation on an empty element");
    if (!a.field().same_field(b.field()))
        throw InvalidInput("elements from different fields");
}
} // namespace

FieldElement FieldElement::add(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, vadd(coords_, o.coords_));
}

FieldElement FieldElement::sub(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, vsub(coords_, o.coords_));
}

FieldElement FieldElement::neg() const {
    if (!field_.valid()) throw Error("operation on an empty element");
    return FieldElement(field_, vneg(coords_));
}

FieldElement FieldElement::mul(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, vmul(*field_.d_, coords_, o.coords_));
}

FieldElement FieldElement::mul_integer(const BigInt& m) const {
    if (!field_.valid()) throw Error("operation on an empty element");
    return FieldElement(field_, vmul_int(coords_, m));
}

FieldElement FieldElement::mul_padic(const PadicNumber& c) const {
    if (!field_.valid()) throw Error("operation on an empty element");
    if (c.prime() != field_.p()) throw InvalidInput("prime mismatch");
    return FieldElement(field_, vmul_padic(coords_, c));
}

FieldElement FieldElement::shift_p(long k) const {
    if (!field_.valid()) throw Error("operation on an empty element");
    return FieldElement(field_, vshift(coords_, k));
}

FieldElement FieldElement::inv() const {
    if (!field_.valid()) throw Error("operation on an empty element");
    if (is_zero()) throw DivisionByZero("inverse of zero");
    try {
        return FieldElement(field_, vinv(*field_.d_, coords_));
    } catch (const PrecisionExhausted&) {
        throw ZeroDivisorDetected("element is not invertible to working precision; it may "
                                  "share a factor with the defining polynomial");
    }
}

FieldElement FieldElement::div(const FieldElement& o) const {
    check_same(*this, o);
    return mul(o.inv());
}

FieldElement FieldElement::pow_ui(unsigned long k) const {
    if (!field_.valid()) throw Error("operation on an empty element");
    return FieldElement(field_, vpow(*field_.d_, coords_, k));
}

bool FieldElement::agrees_with(const FieldElement& o) const {
    check_same(*this, o);
    return vzero(vsub(coords_, o.coords_));
}

std::string FieldElement::str() const {
    if (!field_.valid()) return "(empty)";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace gsm
