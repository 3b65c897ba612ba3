#ifndef MULTISINE_PRECISION_HPP
#define MULTISINE_PRECISION_HPP

#include <mpfr.h>

#include <stdexcept>

namespace multisine {

/// Requested decimal accuracy plus guard digits carried while computing.
///
/// Every public operation takes a Precision and promises its result correct
/// to `digits` decimal digits; internally it works at `working_digits()`.
class Precision {
  public:
    static constexpr int default_guard = 15;
    static constexpr int min_digits = 10;

    explicit Precision(int digits, int guard = default_guard)
        : digits_(digits), guard_(guard) {
        if (digits < min_digits)
            throw std::invalid_argument("Precision: digits must be >= 10");
        if (guard < 0)
            throw std::invalid_argument("Precision: guard must be >= 0");
    }

    int digits() const { return digits_; }
    int guard() const { return guard_; }
    int working_digits() const { return digits_ + guard_; }

    /// Binary precision backing the decimal contract (log2(10) per digit,
    /// plus a small headroom).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(working_digits() * 3.3219280948873623) + 12;
    }

    /// Same requested digits with `extra` more guard digits.
    Precision with_extra_guard(int extra) const { return Precision(digits_, guard_ + extra); }

    /// `extra` more requested digits, same guard (recompute checks).
    Precision with_extra_digits(int extra) const { return Precision(digits_ + extra, guard_); }

    friend bool operator==(const Precision& a, const Precision& b) {
        return a.digits_ == b.digits_ && a.guard_ == b.guard_;
    }

  private:
    int digits_;
    int guard_;
};

}  // namespace multisine

#endif
