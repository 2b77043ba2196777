#include "gsm/residue_field.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

namespace gfp {

namespace {
long norm_mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}
long inv_mod(long a, long p) {
    // Fermat; p prime, a nonzero mod p.
    long r = 1, b = norm_mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}
} // namespace

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long degree(const Poly& a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s % p;
    }
    return trim(r);
}

Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return trim(r);
}

Poly mod(Poly a, const Poly& m, long p) {
    a = trim(std::move(a));
    Poly mm = trim(m);
    long dm = degree(mm);
    if (dm < 0) throw InvalidInput("reduction modulo zero polynomial");
    long lc_inv = inv_mod(mm[dm], p);
    while (degree(a) >= dm) {
        long da = degree(a);
        long c = (a[da] * lc_inv) % p;
        for (long i = 0; i <= dm; ++i) {
            long k = da - dm + i;
            a[k] = norm_mod(a[k] - c * mm[i], p);
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly gcd(Poly a, Poly b, long p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        // Monic normalization keeps results canonical.
        long s = inv_mod(a.back(), p);
        for (auto& c : a) c = (c * s) % p;
    }
    return a;
}

namespace {
Poly pow_mod(Poly base, long e, const Poly& m, long p) {
    Poly r = {1};
    base = mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = mod(mul(r, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}
} // namespace

Poly frobenius_power(const Poly& m, long p, long k) {
    Poly x = mod(Poly{0, 1}, m, p);
    for (long i = 0; i < k; ++i) x = pow_mod(x, p, m, p);
    return x;
}

bool irreducible(const Poly& m, long p) {
    long d = degree(m);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin: x^(p^d) == x mod m, and gcd(x^(p^(d/q)) - x, m) = 1 for
    // every prime q | d.
    Poly xq = frobenius_power(m, p, d);
    if (trim(add(xq, Poly{0, p - 1}, p)) != Poly{})
        return false;
    long rest = d;
    for (long q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        Poly diff = add(frobenius_power(m, p, d / q), Poly{0, p - 1}, p);
        if (degree(gcd(diff, m, p)) != 0) return false;
    }
    if (rest > 1) {
        Poly diff = add(frobenius_power(m, p, d / rest), Poly{0, p - 1}, p);
        if (degree(gcd(diff, m, p)) != 0) return false;
    }
    return true;
}

long smallest_factor_degree(const Poly& m, long p) {
    long d = degree(m);
    if (d <= 0) throw InvalidInput("factor degree of a constant");
    for (long k = 1; k <= d; ++k) {
        // gcd with x^(p^k) - x collects the factors of degree dividing k;
        // the first hit is the smallest factor degree.
        Poly diff = add(frobenius_power(m, p, k), Poly{0, p - 1}, p);
        if (degree(gcd(diff, m, p)) > 0) return k;
    }
    throw Error("irreducible factor search failed");
}

bool squarefree(const Poly& m, long p) {
    long d = degree(m);
    if (d <= 0) throw InvalidInput("squarefree test on a constant");
    Poly deriv;
    for (long i = 1; i <= d; ++i)
        deriv.push_back((static_cast<long>(i % p) * m[static_cast<size_t>(i)]) % p);
    deriv = trim(std::move(deriv));
    // Derivative zero means m is a p-th power, hence not squarefree.
    if (degree(deriv) < 0) return false;
    return degree(gcd(m, deriv, p)) <= 0;
}

} // namespace gfp

struct ResidueField::Data {
    long p;
    long f;
    long order;
    std::vector<long> modulus; // monic, size f+1
};

namespace {

constexpr long kEnumerationCap = 1L << 16;

std::vector<long> default_modulus(long p, long f) {
    // First monic irreducible of degree f in enumeration order.
    long count = 1;
    for (long i = 0; i < f; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<long> m(f + 1, 0);
        long rest = idx;
        for (long i = 0; i < f; ++i) {
            m[i] = rest % p;
            rest /= p;
        }
        m[f] = 1;
        if (gfp::irreducible(m, p)) return m;
    }
    throw Error("no irreducible modulus found");
}

} // namespace

ResidueField ResidueField::make(long p, long f) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (f < 1) throw InvalidInput("residue degree must be >= 1");
    return make(p, f, default_modulus(p, f));
}

ResidueField ResidueField::make(long p, long f,
                                const std::vector<long>& modulus) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (f < 1) throw InvalidInput("residue degree must be >= 1");
    long order = 1;
    for (long i = 0; i < f; ++i) {
        order *= p;
        if (order > kEnumerationCap)
            throw FieldTooLarge("residue field order exceeds 2^16");
    }
    std::vector<long> m(modulus);
    for (auto& c : m) {
        c %= p;
        if (c < 0) c += p;
    }
    if (gfp::degree(m) != f || m[f] != 1)
        throw InvalidInput("residue modulus must be monic of degree f");
    if (!gfp::irreducible(m, p))
        throw InvalidInput("residue modulus is reducible");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->f = f;
    d->order = order;
    d->modulus = std::move(m);
    return ResidueField(std::move(d));
}

long ResidueField::p() const { return data_->p; }
long ResidueField::f() const { return data_->f; }
long ResidueField::order() const { return data_->order; }
const std::vector<long>& ResidueField::modulus() const {
    return data_->modulus;
}

ResidueElement ResidueField::zero() const {
    return ResidueElement(*this, std::vector<long>(data_->f, 0));
}

ResidueElement ResidueField::one() const {
    std::vector<long> c(data_->f, 0);
    c[0] = 1;
    return ResidueElement(*this, std::move(c));
}

ResidueElement ResidueField::from_coeffs(std::vector<long> coeffs) const {
    return ResidueElement(*this, std::move(coeffs));
}

ResidueElement ResidueField::from_index(long index) const {
    if (index < 0 || index >= data_->order)
        throw InvalidInput("element index out of range");
    std::vector<long> c(data_->f, 0);
    for (long i = 0; i < data_->f; ++i) {
        c[i] = index % data_->p;
        index /= data_->p;
    }
    return ResidueElement(*this, std::move(c));
}

ResidueElement ResidueField::gen() const {
    if (data_->f == 1) {
        // y is congruent to -modulus[0] modulo the degree-1 modulus.
        long c = (data_->p - data_->modulus[0]) % data_->p;
        return ResidueElement(*this, {c});
    }
    std::vector<long> c(data_->f, 0);
    c[1] = 1;
    return ResidueElement(*this, std::move(c));
}

std::vector<ResidueElement> ResidueField::enumerate() const {
    std::vector<ResidueElement> all;
    all.reserve(data_->order);
    for (long i = 0; i < data_->order; ++i) all.push_back(from_index(i));
    return all;
}

ResidueElement::ResidueElement(ResidueField field, std::vector<long> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    long p = field_.p(), f = field_.f();
    for (auto& c : coeffs_) {
        c %= p;
        if (c < 0) c += p;
    }
    if (static_cast<long>(coeffs_.size()) > f) {
        gfp::Poly r = gfp::mod(coeffs_, field_.modulus(), p);
        coeffs_ = std::move(r);
    }
    coeffs_.resize(f, 0);
}

long ResidueElement::index() const {
    long idx = 0;
    for (long i = field_.f() - 1; i >= 0; --i)
        idx = idx * field_.p() + coeffs_[i];
    return idx;
}

bool ResidueElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](long c) { return c == 0; });
}

ResidueElement ResidueElement::add(const ResidueElement& o) const {
    if (!field_.same_field(o.field_))
        throw InvalidInput("mixed residue fields");
    std::vector<long> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (c[i] + o.coeffs_[i]) % field_.p();
    return ResidueElement(field_, std::move(c));
}

ResidueElement ResidueElement::neg() const {
    std::vector<long> c(coeffs_);
    for (auto& x : c) x = (field_.p() - x) % field_.p();
    return ResidueElement(field_, std::move(c));
}

ResidueElement ResidueElement::sub(const ResidueElement& o) const {
    return add(o.neg());
}

ResidueElement ResidueElement::mul(const ResidueElement& o) const {
    if (!field_.same_field(o.field_))
        throw InvalidInput("mixed residue fields");
    gfp::Poly prod = gfp::mul(coeffs_, o.coeffs_, field_.p());
    prod = gfp::mod(std::move(prod), field_.modulus(), field_.p());
    return ResidueElement(field_, std::move(prod));
}

ResidueElement ResidueElement::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    ResidueElement r = field_.one();
    ResidueElement b = *this;
    while (k > 0) {
        if (k & 1) r = r.mul(b);
        b = b.mul(b);
        k >>= 1;
    }
    return r;
}

ResidueElement ResidueElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverting zero residue");
    return pow(field_.order() - 2);
}

bool ResidueElement::operator==(const ResidueElement& o) const {
    return field_.same_field(o.field_) && coeffs_ == o.coeffs_;
}

std::string ResidueElement::str() const {
    if (field_.f() == 1) return std::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (long i = field_.f() - 1; i >= 0; --i) {
        long c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

long degree(const ResiduePoly& a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

ResidueElement eval(const ResiduePoly& a, const ResidueElement& x) {
    ResidueElement acc = x.field().zero();
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        acc = acc.mul(x).add(a[i]);
    return acc;
}

std::vector<ResidueElement> roots_in_k(const ResiduePoly& a,
                                       const ResidueField& k) {
    if (degree(a) < 0) throw InvalidInput("root search on zero polynomial");
    std::vector<ResidueElement> roots;
    for (long i = 0; i < k.order(); ++i) {
        ResidueElement x = k.from_index(i);
        if (eval(a, x).is_zero()) roots.push_back(x);
    }
    return roots;
}

} // namespace gsm
