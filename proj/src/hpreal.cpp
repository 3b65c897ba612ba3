#include "multisine/hpreal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace multisine {

namespace {

Precision wider(const Precision& a, const Precision& b) {
    return a.working_digits() >= b.working_digits() ? a : b;
}

}  // namespace

HPReal::HPReal(Precision p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long v, Precision p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_si(v_, v, MPFR_RNDN);
}

HPReal::HPReal(std::string_view decimal, Precision p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    std::string s(decimal);
    if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("HPReal: malformed decimal literal `" + s + "`");
}

HPReal::HPReal(const HPReal& o) : prec_(o.prec_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept : prec_(o.prec_) {
    v_[0] = o.v_[0];
    mpfr_init2(o.v_, MPFR_PREC_MIN);  // leave the source destructible
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        prec_ = o.prec_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        prec_ = o.prec_;
    }
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

long HPReal::to_long() const {
    if (!is_integer() || !mpfr_fits_slong_p(v_, MPFR_RNDN))
        throw domain_error("HPReal: value is not an exact machine integer");
    return mpfr_get_si(v_, MPFR_RNDN);
}

const HPReal& HPReal::checked(const char* what) const {
    if (!mpfr_number_p(v_))
        throw domain_error(std::string(what) + ": non-finite result");
    return *this;
}

HPReal HPReal::rounded_to(Precision p) const {
    HPReal r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    r.checked("rounded_to");
    return r;
}

std::string HPReal::to_string(int significant) const {
    if (significant < 2) significant = 2;
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* digits = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
    if (!digits) return "?";
    std::string d(digits);
    mpfr_free_str(digits);
    bool neg = !d.empty() && d[0] == '-';
    if (neg) d.erase(0, 1);
    // strip trailing zeros but keep at least one digit
    size_t last = d.find_last_not_of('0');
    d.erase(std::min(d.size(), std::max<size_t>(last + 1, 1)));

    std::string out = neg ? "-" : "";
    if (e > 0 && e <= significant + 4 && static_cast<size_t>(e) >= d.size()) {
        out += d + std::string(static_cast<size_t>(e) - d.size(), '0');
    } else if (e > 0 && e <= significant + 4) {
        out += d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -6) {
        out += "0." + std::string(static_cast<size_t>(-e), '0') + d;
    } else {
        out += d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
    }
    return out;
}

namespace {

using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

HPReal apply1(unary_fn f, const HPReal& a, const char* what) {
    HPReal r(a.precision());
    f(r.raw(), a.raw(), MPFR_RNDN);
    r.checked(what);
    return r;
}

HPReal apply2(binary_fn f, const HPReal& a, const HPReal& b, const char* what) {
    HPReal r(wider(a.precision(), b.precision()));
    f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.checked(what);
    return r;
}

}  // namespace

HPReal operator+(const HPReal& a, const HPReal& b) { return apply2(mpfr_add, a, b, "add"); }
HPReal operator-(const HPReal& a, const HPReal& b) { return apply2(mpfr_sub, a, b, "sub"); }
HPReal operator*(const HPReal& a, const HPReal& b) { return apply2(mpfr_mul, a, b, "mul"); }

HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) throw domain_error("div: division by zero");
    return apply2(mpfr_div, a, b, "div");
}

HPReal operator-(const HPReal& a) {
    HPReal r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

HPReal operator+(const HPReal& a, long b) {
    HPReal r(a.precision());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r.checked("add");
}
HPReal operator+(long a, const HPReal& b) { return b + a; }
HPReal operator-(const HPReal& a, long b) { return a + (-b); }
HPReal operator*(long a, const HPReal& b) { return b * a; }
HPReal operator-(long a, const HPReal& b) {
    HPReal r(b.precision());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r.checked("sub");
}
HPReal operator*(const HPReal& a, long b) {
    HPReal r(a.precision());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r.checked("mul");
}
HPReal operator/(const HPReal& a, long b) {
    if (b == 0) throw domain_error("div: division by zero");
    HPReal r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r.checked("div");
}
HPReal operator/(long a, const HPReal& b) {
    if (b.is_zero()) throw domain_error("div: division by zero");
    HPReal r(b.precision());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r.checked("div");
}

HPReal abs(const HPReal& a) { return apply1(mpfr_abs, a, "abs"); }
HPReal exp(const HPReal& a) { return apply1(mpfr_exp, a, "exp"); }

HPReal log(const HPReal& a) {
    if (a.sign() <= 0) throw domain_error("log: argument must be positive");
    return apply1(mpfr_log, a, "log");
}

HPReal sqrt(const HPReal& a) {
    if (a.sign() < 0) throw domain_error("sqrt: argument must be non-negative");
    return apply1(mpfr_sqrt, a, "sqrt");
}

HPReal sin(const HPReal& a) { return apply1(mpfr_sin, a, "sin"); }
HPReal cos(const HPReal& a) { return apply1(mpfr_cos, a, "cos"); }
HPReal atan(const HPReal& a) { return apply1(mpfr_atan, a, "atan"); }

HPReal pow(const HPReal& base, const HPReal& expo) {
    // integer exponents keep negative bases legal
    if (expo.is_integer() && mpfr_fits_slong_p(expo.raw(), MPFR_RNDN))
        return pow(base, mpfr_get_si(expo.raw(), MPFR_RNDN));
    if (base.sign() < 0)
        throw domain_error("pow: negative base with non-integer exponent");
    if (base.is_zero() && expo.sign() < 0)
        throw domain_error("pow: zero base with negative exponent");
    return apply2(mpfr_pow, base, expo, "pow");
}

HPReal pow(const HPReal& base, long expo) {
    if (base.is_zero() && expo < 0)
        throw domain_error("pow: zero base with negative exponent");
    HPReal r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), expo, MPFR_RNDN);
    return r.checked("pow");
}

HPReal floor(const HPReal& a) {
    HPReal r(a.precision());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

int agree_digits(const HPReal& a, const HPReal& b) {
    const int cap = std::min(a.precision().working_digits(), b.precision().working_digits());
    if (a == b) return cap;
    Precision wp = wider(a.precision(), b.precision());
    HPReal diff(wp);
    mpfr_sub(diff.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
    HPReal scale(wp);
    mpfr_abs(scale.raw(), a.raw(), MPFR_RNDN);
    if (mpfr_cmp_ui(scale.raw(), 1) < 0) mpfr_set_ui(scale.raw(), 1, MPFR_RNDN);
    mpfr_div(diff.raw(), diff.raw(), scale.raw(), MPFR_RNDN);
    // d = floor(-log10(rel)); rel > 0 here
    mpfr_log10(diff.raw(), diff.raw(), MPFR_RNDN);
    mpfr_neg(diff.raw(), diff.raw(), MPFR_RNDN);
    mpfr_floor(diff.raw(), diff.raw());
    if (!mpfr_fits_slong_p(diff.raw(), MPFR_RNDN))
        return mpfr_sgn(diff.raw()) > 0 ? cap : 0;
    long d = mpfr_get_si(diff.raw(), MPFR_RNDN);
    return static_cast<int>(std::clamp(d, 0L, static_cast<long>(cap)));
}

}  // namespace multisine
