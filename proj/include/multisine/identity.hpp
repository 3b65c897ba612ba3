#ifndef MULTISINE_IDENTITY_HPP
#define MULTISINE_IDENTITY_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "multisine/bd_adamchik.hpp"
#include "multisine/expr.hpp"
#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// One verifiable identity: two expressions expected to match to
/// required_digits. Entries tagged "extrapolated" carry a reduced requirement
/// because their value comes from sequence extrapolation with an empirical
/// rate.
struct IdentitySpec {
    std::string name;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string lhs_text;
    std::string rhs_text;
    int required_digits = 50;  // >= 6
    std::set<std::string> tags;

    bool has_tag(const std::string& t) const { return tags.count(t) != 0; }
};

enum class Status { PASS, FAIL, ERROR };

struct VerificationReport {
    std::string name;
    std::optional<HPReal> lhs_value;
    std::optional<HPReal> rhs_value;
    int matched_digits = 0;
    int required_digits = 0;
    Status status = Status::ERROR;
    double elapsed_ms = 0.0;
    std::string error_message;
};

/// Evaluates both sides independently at prec, re-evaluates with 20 extra
/// digits, and reports:
///   PASS  iff matched_digits >= min(required_digits, prec.digits())
///   ERROR if either side throws or fails its own recompute self-check.
VerificationReport verify(const IdentitySpec& spec, Precision prec);

/// Verifies a batch, optionally on several worker threads; the report order
/// always matches the input order.
std::vector<VerificationReport> verify_all(std::span<const IdentitySpec> specs, Precision prec,
                                           int jobs = 1);

/// Every identity of the built-in collection (Hu-Kim and Kurokawa zeta(3)
/// forms, the Kachi-Tzermias limits, Melzak, the D- and E-function theorems,
/// duplication, Holcombe, the Barnes-G ratio checks, the Gamma-product
/// limit, ...). Size >= 20.
std::vector<IdentitySpec> builtin_registry();

/// Line-oriented identity file:
///   identity <name>: <lhs> == <rhs> [digits=<n>] [tags=a,b]
/// `#` starts a comment; blank lines are ignored.
std::vector<IdentitySpec> load_identity_file(const std::filesystem::path& path);

/// The Gamma-product limit
///   lim_n e^(n(4n+1)/4) n^(-1/8-n(n+1)) (2 pi)^(-n/2)
///         prod_{k=1}^{2n} Gamma(1+k/2)^(k (-1)^k)
///   = 2^(1/12) exp(5/24 - (3/2) zeta'(-1) - 7 zeta(3)/(16 pi^2)).
/// The bracket's log is computed exactly per n (factorials and rational
/// exponents), then Richardson-extrapolated; achieved digits are reported.
RegularizedProductValue ms_limit(Precision prec, long max_n = 2000, int order = 6);

/// Rows of the special-value table (`table` CLI subcommand).
struct SpecialValueRow {
    std::string name;        // e.g. "S2(1/2)"
    std::string closed_form; // expression text of the closed form
    std::string attribution; // who proved / tabulated it
};
const std::vector<SpecialValueRow>& special_value_table();

}  // namespace multisine

#endif
