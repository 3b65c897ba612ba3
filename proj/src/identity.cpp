#include "multisine/identity.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/polylog.hpp"
#include "multisine/series.hpp"

namespace multisine {

VerificationReport verify(const IdentitySpec& spec, Precision prec) {
    VerificationReport rep;
    rep.name = spec.name;
    rep.required_digits = std::min(spec.required_digits, prec.digits());
    const auto t0 = std::chrono::steady_clock::now();
    try {
        HPReal lhs1 = evaluate(*spec.lhs, prec);
        HPReal rhs1 = evaluate(*spec.rhs, prec);
        rep.lhs_value = lhs1;
        rep.rhs_value = rhs1;
        rep.matched_digits = agree_digits(lhs1, rhs1);

        // each side must reproduce itself with 20 extra digits
        Precision deeper = prec.with_extra_digits(20);
        HPReal lhs2 = evaluate(*spec.lhs, deeper);
        HPReal rhs2 = evaluate(*spec.rhs, deeper);
        if (agree_digits(lhs1, lhs2) < prec.digits())
            throw convergence_error("lhs failed its recompute self-check");
        if (agree_digits(rhs1, rhs2) < prec.digits())
            throw convergence_error("rhs failed its recompute self-check");

        rep.status = rep.matched_digits >= rep.required_digits ? Status::PASS : Status::FAIL;
    } catch (const error& e) {
        rep.status = Status::ERROR;
        rep.error_message = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::vector<VerificationReport> verify_all(std::span<const IdentitySpec> specs, Precision prec,
                                           int jobs) {
    std::vector<VerificationReport> reports(specs.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < specs.size(); ++i) reports[i] = verify(specs[i], prec);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
            reports[i] = verify(specs[i], prec);
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(specs.size()));
    pool.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

RegularizedProductValue ms_limit(Precision prec, long max_n, int order) {
    if (max_n > 10000) throw domain_error("ms_limit: max_n is capped at 10^4");
    if (order < 1 || max_n < (1L << order))
        throw domain_error("ms_limit: need 2^order <= max_n <= 10^4");
    const Precision wp = prec.with_extra_guard(8);
    const HPReal two_pi = 2L * constant("pi", wp);
    const HPReal log_two_pi = log(two_pi);

    // cumulative alternating sum W(m) = sum_{k<=m} (-1)^k k log Gamma(1+k/2)
    std::vector<long> nodes;
    for (int j = order; j >= 0; --j) nodes.push_back(max_n >> j);

    std::vector<HPReal> hs, ys;
    HPReal w_acc(wp);
    long k = 0;
    for (long n : nodes) {
        while (k < 2 * n) {
            ++k;
            HPReal t = k * log_gamma_half_integer(k, wp);
            w_acc = (k % 2 == 0) ? w_acc + t : w_acc - t;
        }
        HPReal nn(n, wp);
        HPReal L = HPReal(n * (4 * n + 1), wp) / 4L -
                   (HPReal(1L, wp) / 8L + HPReal(n * (n + 1), wp)) * log(nn) -
                   nn / 2L * log_two_pi + w_acc;
        hs.push_back(1L / nn);
        ys.push_back(L);
    }
    std::vector<HPReal> diag = detail::neville_diagonal(hs, ys);
    HPReal v = exp(diag.back());
    int achieved = agree_digits(v, exp(diag[diag.size() - 2]));
    return {v.rounded_to(prec).checked("ms_limit"), achieved,
            RegularizedProductValue::Method::accelerated_product};
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<IdentitySpec> load_identity_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open identity file: " + path.string());
    std::vector<IdentitySpec> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(lineno);

        if (line.rfind("identity", 0) != 0)
            throw error(where + ": expected `identity <name>: <lhs> == <rhs>`");
        std::string rest = trim(line.substr(8));
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw error(where + ": missing `:` after the name");
        IdentitySpec spec;
        spec.name = trim(rest.substr(0, colon));
        if (spec.name.empty()) throw error(where + ": empty identity name");
        rest = rest.substr(colon + 1);

        // optional trailing attributes: digits=<n> tags=a,b
        spec.required_digits = 50;
        while (true) {
            const auto sp = rest.find_last_of(" \t");
            if (sp == std::string::npos) break;
            std::string last = trim(rest.substr(sp + 1));
            if (last.rfind("digits=", 0) == 0) {
                spec.required_digits = std::stoi(last.substr(7));
                if (spec.required_digits < 6)
                    throw error(where + ": required digits must be >= 6");
            } else if (last.rfind("tags=", 0) == 0) {
                std::stringstream ss(last.substr(5));
                std::string tag;
                while (std::getline(ss, tag, ','))
                    if (!trim(tag).empty()) spec.tags.insert(trim(tag));
            } else {
                break;
            }
            rest = rest.substr(0, sp);
        }

        const auto eq = rest.find("==");
        if (eq == std::string::npos) throw error(where + ": missing `==`");
        spec.lhs_text = trim(rest.substr(0, eq));
        spec.rhs_text = trim(rest.substr(eq + 2));
        try {
            spec.lhs = parse(spec.lhs_text);
            spec.rhs = parse(spec.rhs_text);
        } catch (const parse_error& e) {
            throw error(where + ": " + e.what());
        }
        out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace multisine
