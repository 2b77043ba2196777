#ifndef GSM_VALUATION_HPP
#define GSM_VALUATION_HPP

#include <ostream>
#include <string>

namespace gsm {

/**
 * Outcome of a valuation query under bounded precision: either the exact
 * valuation, or a certified lower bound ("the element vanishes to this
 * precision; its true valuation is at least b, possibly infinite").
 */
class Valuation {
public:
    static Valuation exact(long v) { return Valuation(v, true); }
    static Valuation at_least(long b) { return Valuation(b, false); }

    bool is_exact() const { return exact_; }
    /// Exact value; only meaningful when is_exact().
    long value() const { return v_; }
    /// Lower bound; equals value() when exact.
    long bound() const { return v_; }

    /// True when the valuation is certainly >= k.
    bool ge(long k) const { return v_ >= k; }
    /// True when the valuation is certainly < k (requires exactness).
    bool lt(long k) const { return exact_ && v_ < k; }

    bool operator==(const Valuation& o) const {
        return exact_ == o.exact_ && v_ == o.v_;
    }

    std::string str() const {
        return exact_ ? std::to_string(v_)
                      : ">=" + std::to_string(v_);
    }

private:
    Valuation(long v, bool exact) : v_(v), exact_(exact) {}
    long v_;
    bool exact_;
};

inline std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << v.str();
}

} // namespace gsm

#endif
