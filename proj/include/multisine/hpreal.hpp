#ifndef MULTISINE_HPREAL_HPP
#define MULTISINE_HPREAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

#include "multisine/errors.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// Arbitrary-precision real backed by MPFR, tagged with the Precision it was
/// computed at. Operations never let a NaN or infinity escape: a non-finite
/// result raises domain_error instead.
///
/// Mixed-precision arithmetic produces a result at the wider of the two
/// operand precisions.
class HPReal {
  public:
    HPReal() : HPReal(Precision(Precision::min_digits)) {}
    explicit HPReal(Precision p);
    HPReal(long v, Precision p);
    HPReal(std::string_view decimal, Precision p);  // throws domain_error on bad literal
    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    const Precision& precision() const { return prec_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const;  // throws domain_error unless an exact fitting integer

    /// Decimal rendering with `significant` digits, fixed-point when the
    /// exponent is moderate, scientific otherwise.
    std::string to_string(int significant) const;

    /// Value re-rounded to precision p.
    HPReal rounded_to(Precision p) const;

    // Raw handles for the numeric kernels; library-internal use.
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    /// Throws domain_error{what} unless the stored value is finite.
    const HPReal& checked(const char* what) const;

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return !(a == b); }

    bool equals_long(long v) const { return mpfr_cmp_si(v_, v) == 0; }

  private:
    mpfr_t v_;
    Precision prec_;
};

// Field operations (result at the wider operand precision; checked finite).
HPReal operator+(const HPReal& a, const HPReal& b);
HPReal operator-(const HPReal& a, const HPReal& b);
HPReal operator*(const HPReal& a, const HPReal& b);
HPReal operator/(const HPReal& a, const HPReal& b);
HPReal operator-(const HPReal& a);
HPReal operator+(const HPReal& a, long b);
HPReal operator+(long a, const HPReal& b);
HPReal operator-(const HPReal& a, long b);
HPReal operator-(long a, const HPReal& b);
HPReal operator*(const HPReal& a, long b);
HPReal operator*(long a, const HPReal& b);
HPReal operator/(const HPReal& a, long b);
HPReal operator/(long a, const HPReal& b);

HPReal abs(const HPReal& a);
HPReal exp(const HPReal& a);
HPReal log(const HPReal& a);
HPReal sqrt(const HPReal& a);
HPReal sin(const HPReal& a);
HPReal cos(const HPReal& a);
HPReal atan(const HPReal& a);
HPReal pow(const HPReal& base, const HPReal& expo);
HPReal pow(const HPReal& base, long expo);
HPReal floor(const HPReal& a);

/// Largest d >= 0 with |a-b| <= 10^-d * max(1, |a|), capped at the smaller
/// operand's working digits. Equal values return the cap.
int agree_digits(const HPReal& a, const HPReal& b);

}  // namespace multisine

#endif
