#include "multisine/constants.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "bernoulli.hpp"
#include "multisine/errors.hpp"
#include "multisine/series.hpp"

namespace multisine {

namespace {

// Cache computations are quantized to 50-digit steps so that nearby requests
// share one entry; an entry at d digits serves every request for <= d digits.
int quantized_digits(Precision p) {
    int w = p.working_digits();
    return ((w + 49) / 50) * 50;
}

Precision compute_precision(Precision p) { return Precision(quantized_digits(p), 10); }

class ValueCache {
  public:
    template <typename Fn>
    HPReal get_or_compute(const std::string& name, long arg, Precision prec, Fn&& fn) {
        const int qd = quantized_digits(prec);
        const auto key = std::make_tuple(name, arg, qd);
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second.rounded_to(prec);
        }
        HPReal v = fn(compute_precision(prec));
        {
            std::unique_lock lock(mu_);
            map_.emplace(key, v);  // duplicate concurrent computation is idempotent
        }
        return v.rounded_to(prec);
    }

  private:
    std::shared_mutex mu_;
    std::map<std::tuple<std::string, long, int>, HPReal> map_;
};

ValueCache& cache() {
    static ValueCache c;
    return c;
}

HPReal pow10(long e, Precision p) {
    HPReal r(p);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

// (a*m + c)^(-s) at precision p.
HPReal power_term(const HPReal& s, long a, long c, long m, Precision p) {
    HPReal base(a * m + c, p);
    if (s.is_integer() && mpfr_fits_slong_p(s.raw(), MPFR_RNDN)) {
        HPReal r(p);
        mpfr_pow_si(r.raw(), base.raw(), -mpfr_get_si(s.raw(), MPFR_RNDN), MPFR_RNDN);
        return r;
    }
    return exp(-(s * log(base)));
}

}  // namespace

namespace detail {

HPReal power_tail_sum(const HPReal& s, long a, long c, long M, Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    const int pw = prec.working_digits();
    const double sd = s.to_double();

    for (int attempt = 0;; ++attempt) {
        // Cutoff sized so the Euler-Maclaurin corrections can reach the
        // target before they turn divergent: a M + c >~ max(0.4 P, s/3).
        double grow = 1.0 + 0.5 * attempt;
        long Y_target = static_cast<long>(grow * (0.40 * (pw + 8) > sd / 3.0 + 4
                                                      ? 0.40 * (pw + 8)
                                                      : sd / 3.0 + 4)) +
                        1;
        long Mp = M;
        if (a * Mp + c < Y_target) Mp = (Y_target - c) / a + 1;

        HPReal direct(wp);
        for (long m = M; m < Mp; ++m) {
            HPReal t = power_term(s, a, c, m, wp);
            mpfr_add(direct.raw(), direct.raw(), t.raw(), MPFR_RNDN);
        }

        HPReal Y(a * Mp + c, wp);
        HPReal Ypow = power_term(s, a, c, Mp, wp);       // Y^-s
        HPReal lead = Ypow * Y / ((s - 1L) * a);         // Y^(1-s)/(a(s-1))
        HPReal total = direct + lead + Ypow / 2L;

        HPReal scale = abs(lead) + abs(direct);
        if (scale.is_zero()) scale = HPReal(1L, wp);
        HPReal tol = scale * pow10(-(pw + 4), wp);

        HPReal Yinv2 = 1L / (Y * Y);
        HPReal rising = s;                                // (s)_{2k-1}, k=1
        HPReal apow(a, wp);                               // a^{2k-1}
        HPReal Yfac = Ypow / Y;                           // Y^{-s-2k+1}
        HPReal prev_mag(wp);
        bool ok = false;
        for (long k = 1; k < 4000; ++k) {
            HPReal term = bernoulli_over_factorial(k, wp) * apow * rising * Yfac;
            total = total + term;
            HPReal mag = abs(term);
            if (mag <= tol) {
                ok = true;
                break;
            }
            if (k > 1 && mag >= prev_mag) break;  // corrections diverging: enlarge M
            prev_mag = mag;
            rising = rising * (s + (2 * k - 1)) * (s + 2 * k);
            apow = apow * (a * a);
            Yfac = Yfac * Yinv2;
        }
        if (ok) return total.rounded_to(prec).checked("power_tail_sum");
        if (attempt >= 4)
            throw convergence_error("power_tail_sum: Euler-Maclaurin corrections failed to settle");
    }
}

HPReal zeta_tail(const HPReal& s, long J, Precision prec) {
    return power_tail_sum(s, 1, 0, J + 1, prec);
}

HPReal eta_tail(const HPReal& s, long J, Precision prec) {
    if (s.equals_long(1)) {
        // alternating harmonic tail: log 2 minus the finite head
        Precision wp = prec.with_extra_guard(8);
        HPReal r = constant("log2", wp);
        for (long k = 1; k <= J; ++k) {
            HPReal t = HPReal(k % 2 == 1 ? 1L : -1L, wp) / k;
            r = r - t;
        }
        return r.rounded_to(prec);
    }
    long first_odd = (J % 2 == 0) ? J + 1 : J + 2;
    long first_even = (J % 2 == 0) ? J + 2 : J + 1;
    return power_tail_sum(s, 2, first_odd, 0, prec) - power_tail_sum(s, 2, first_even, 0, prec);
}

HPReal odd_tail(const HPReal& s, long Q, Precision prec) {
    return power_tail_sum(s, 2, Q + 2, 0, prec);
}

}  // namespace detail

HPReal zeta(const HPReal& s, Precision prec) {
    if (s <= HPReal(1L, prec)) throw domain_error("zeta: requires s > 1");
    if (s.is_integer() && mpfr_fits_slong_p(s.raw(), MPFR_RNDN))
        return zeta_int(s.to_long(), prec);
    return detail::power_tail_sum(s, 1, 0, 1, prec);
}

HPReal zeta_int(long s, Precision prec) {
    if (s < 2) throw domain_error("zeta: requires s > 1");
    // beyond this point the value is 1 to working precision
    if (static_cast<double>(s) * 0.30103 > prec.working_digits() + 6) return HPReal(1L, prec);
    return cache().get_or_compute("zeta", s, prec, [&](Precision cp) {
        return detail::power_tail_sum(HPReal(s, cp), 1, 0, 1, cp);
    });
}

HPReal eta(const HPReal& s, Precision prec) {
    if (s < HPReal(1L, prec)) throw domain_error("eta: requires s >= 1");
    if (s.equals_long(1)) return constant("log2", prec);
    HPReal two(2L, prec);
    return (1L - pow(two, 1L - s)) * zeta(s, prec);
}

HPReal eta_int(long s, Precision prec) {
    if (s < 1) throw domain_error("eta: requires s >= 1");
    if (s == 1) return constant("log2", prec);
    HPReal z = zeta_int(s, prec);
    HPReal two(2L, z.precision());
    return (1L - pow(two, 1L - s)) * z;
}

HPReal lambda_odd_int(long s, Precision prec) {
    if (s < 2) throw domain_error("lambda: requires s >= 2");
    HPReal z = zeta_int(s, prec);
    HPReal two(2L, z.precision());
    return (1L - pow(two, -s)) * z;
}

namespace {

// zeta'(s) for real s > 1, by the term-differentiated Euler-Maclaurin sum.
HPReal zeta_prime_em(const HPReal& s, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    const int pw = prec.working_digits();
    long Mp = static_cast<long>(0.45 * (pw + 10)) + 4;

    HPReal direct(wp);
    for (long n = 2; n < Mp; ++n) {
        HPReal nn(n, wp);
        HPReal t = power_term(s, 1, 0, n, wp) * log(nn);
        direct = direct - t;
    }

    HPReal Y(Mp, wp);
    HPReal L = log(Y);
    HPReal Ypow = power_term(s, 1, 0, Mp, wp);  // Y^-s
    HPReal sm1 = s - 1L;
    HPReal total = direct - Ypow * Y * (L / sm1 + 1L / (sm1 * sm1)) - L * Ypow / 2L;

    HPReal tol = pow10(-(pw + 4), wp);
    HPReal Yinv2 = 1L / (Y * Y);
    HPReal rising = s;
    HPReal Yfac = Ypow / Y;
    HPReal harm = 1L / s;  // sum_{i=0}^{2k-2} 1/(s+i), k=1
    HPReal prev_mag(wp);
    for (long k = 1; k < 4000; ++k) {
        HPReal term = detail::bernoulli_over_factorial(k, wp) * rising * Yfac * (harm - L);
        total = total + term;
        HPReal mag = abs(term);
        if (mag <= tol) return total.rounded_to(prec).checked("zeta_prime");
        if (k > 1 && mag >= prev_mag)
            throw convergence_error("zeta_prime: Euler-Maclaurin corrections failed to settle");
        prev_mag = mag;
        rising = rising * (s + (2 * k - 1)) * (s + 2 * k);
        Yfac = Yfac * Yinv2;
        harm = harm + 1L / (s + (2 * k - 1)) + 1L / (s + 2 * k);
    }
    throw convergence_error("zeta_prime: correction budget exhausted");
}

HPReal log_glaisher(Precision cp) {
    // log A = (gamma + log 2 pi)/12 - zeta'(2)/(2 pi^2)
    HPReal g = constant("euler_gamma", cp);
    HPReal pi_v = constant("pi", cp);
    HPReal zp2 = zeta_prime(2, cp);
    return (g + log(2L * pi_v)) / 12L - zp2 / (2L * pi_v * pi_v);
}

}  // namespace

HPReal zeta_prime(int point, Precision prec) {
    if (point == 2)
        return cache().get_or_compute("zeta_prime", 2, prec, [&](Precision cp) {
            return zeta_prime_em(HPReal(2L, cp), cp);
        });
    if (point == -1)
        return cache().get_or_compute("zeta_prime", -1, prec, [&](Precision cp) {
            return HPReal(1L, cp) / 12L - log_glaisher(cp);
        });
    throw domain_error("zeta_prime: only the points 2 and -1 are supported");
}

HPReal constant(std::string_view name, Precision prec) {
    const std::string key(name);
    auto named = [&](auto&& fn) { return cache().get_or_compute(key, 0, prec, fn); };

    if (key == "pi")
        return named([](Precision cp) {
            HPReal r(cp);
            mpfr_const_pi(r.raw(), MPFR_RNDN);
            return r;
        });
    if (key == "e")
        return named([](Precision cp) { return exp(HPReal(1L, cp)); });
    if (key == "log2")
        return named([](Precision cp) {
            HPReal r(cp);
            mpfr_const_log2(r.raw(), MPFR_RNDN);
            return r;
        });
    if (key == "euler_gamma")
        return named([](Precision cp) {
            HPReal r(cp);
            mpfr_const_euler(r.raw(), MPFR_RNDN);
            return r;
        });
    if (key == "catalan")
        return named([](Precision cp) {
            // G = sum_{k>=1} (-1)^(k+1) / (2k-1)^2, accelerated
            return sum_alternating(
                [&](long k) {
                    HPReal q(2 * k - 1, cp);
                    return 1L / (q * q);
                },
                1, cp);
        });
    if (key == "zeta3")
        return named([](Precision cp) { return zeta_int(3, cp); });
    if (key == "glaisher")
        return named([](Precision cp) { return exp(log_glaisher(cp)); });
    if (key == "zeta_prime_neg1") return zeta_prime(-1, prec);

    throw domain_error("constant: unknown name `" + key + "`");
}

}  // namespace multisine
