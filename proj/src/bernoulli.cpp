#include "bernoulli.hpp"

#include <deque>
#include <mutex>

namespace multisine::detail {

namespace {

// Exact B_m via the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0 and the
// quotients B_{2k}/(2k)! as mpq, grow-only under one mutex. Deques so that
// growth never relocates a live mpq.
class BernoulliCache {
  public:
    // out := B_{2k}/(2k)!
    void get(long k, mpq_t out) {
        std::lock_guard<std::mutex> lock(mu_);
        extend(2 * k);
        mpq_set(out, &quot_[static_cast<size_t>(k)]);
    }

  private:
    void extend(long m_needed) {
        while (static_cast<long>(b_.size()) <= m_needed) {
            const long m = static_cast<long>(b_.size());
            b_.emplace_back();
            mpq_ptr bm = &b_.back();
            mpq_init(bm);
            if (m == 0) {
                mpq_set_ui(bm, 1, 1);
            } else {
                mpq_t acc, term;
                mpq_init(acc);
                mpq_init(term);
                mpz_t binom;
                mpz_init(binom);
                for (long j = 0; j < m; ++j) {
                    mpz_bin_uiui(binom, static_cast<unsigned long>(m + 1),
                                 static_cast<unsigned long>(j));
                    mpq_set_z(term, binom);
                    mpq_mul(term, term, &b_[static_cast<size_t>(j)]);
                    mpq_add(acc, acc, term);
                }
                mpq_set_si(term, -1, static_cast<unsigned long>(m + 1));
                mpq_canonicalize(term);
                mpq_mul(bm, acc, term);
                mpq_clear(acc);
                mpq_clear(term);
                mpz_clear(binom);
            }
            if (m % 2 == 0) {
                fact_extend(m);
                quot_.emplace_back();
                mpq_ptr qm = &quot_.back();
                mpq_init(qm);
                mpq_t f;
                mpq_init(f);
                mpq_set_z(f, fact_);
                mpq_div(qm, bm, f);
                mpq_clear(f);
            }
        }
    }

    void fact_extend(long m) {
        if (fact_n_ < 0) {
            mpz_init_set_ui(fact_, 1);
            fact_n_ = 0;
        }
        while (fact_n_ < m) {
            ++fact_n_;
            mpz_mul_ui(fact_, fact_, static_cast<unsigned long>(fact_n_));
        }
    }

    std::mutex mu_;
    std::deque<__mpq_struct> b_;     // B_0, B_1, ...
    std::deque<__mpq_struct> quot_;  // B_0/0!, B_2/2!, B_4/4!, ...
    mpz_t fact_;
    long fact_n_ = -1;
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

}  // namespace

HPReal bernoulli_over_factorial(long k, Precision p) {
    mpq_t q;
    mpq_init(q);
    cache().get(k, q);
    HPReal r(p);
    mpfr_set_q(r.raw(), q, MPFR_RNDN);
    mpq_clear(q);
    return r;
}

}  // namespace multisine::detail
