#include "multisine/identity.hpp"

namespace multisine {

namespace {

IdentitySpec make_spec(std::string name, std::string lhs, std::string rhs, int digits,
                       std::set<std::string> tags = {}) {
    IdentitySpec s;
    s.name = std::move(name);
    s.lhs_text = std::move(lhs);
    s.rhs_text = std::move(rhs);
    s.lhs = parse(s.lhs_text);
    s.rhs = parse(s.rhs_text);
    s.required_digits = digits;
    s.tags = std::move(tags);
    return s;
}

}  // namespace

std::vector<IdentitySpec> builtin_registry() {
    std::vector<IdentitySpec> r;
    auto add = [&](const char* name, const char* lhs, const char* rhs, int digits = 50,
                   std::set<std::string> tags = {}) {
        r.push_back(make_spec(name, lhs, rhs, digits, std::move(tags)));
    };

    // zeta(3) through the triple cosine and triple sine
    add("hu_kim_zeta3", "zeta3",
        "(4*pi^2/21) * log(exp(4*catalan/pi) * C3(1/4)^16 / sqrt(2))");
    add("kurokawa_zeta3", "zeta3", "(8*pi^2/7) * log(2^(1/4) / S3(1/2))");

    // Borwein-Dykshoorn function D
    add("melzak", "D(2)", "pi*e/2");
    add("thm_D_ratio", "D(1/3) / D(-1/3)", "exp(1/3) * S2(1/6)^4 / S2(1/3)");
    add("kt_catalan_odd", "ktCatalanOdd()", "exp(2*catalan/pi + 1/2)");
    add("kt_catalan_even", "ktCatalanEven()", "exp(2*catalan/pi - 1/2)");
    add("kt_odd_even_bridge", "ktCatalanOdd() / ktCatalanEven()", "e");

    // Adamchik function E
    add("thm_E_s3", "E(1/5)", "exp(2/25) * S3(2/5) / S3(1/5)^8");
    add("thm_E_c3", "E(1/5)", "exp(2/25) * C3(1/5)^8 / S3(2/5)");
    add("duplication", "S3(0.6)", "S3(0.3)^4 * C3(0.3)^4");
    add("e_quarter", "E(1/4)", "exp(1/8 - 2*catalan/pi + 7*zeta3/(2*pi^2))");
    add("shifted_adamchik", "shiftedAdamchik()", "(pi/4) * exp(1/2 + 7*zeta3/pi^2)");

    // special values of the triple functions
    add("s3_half", "S3(1/2)", "2^(1/4) * exp(-7*zeta3/(8*pi^2))");
    add("c3_quarter", "C3(1/4)", "2^(1/32) * exp(21*zeta3/(64*pi^2) - catalan/(4*pi))");

    // Holcombe's product and S3'(1)
    add("holcombe", "exp(3/2) * holcombeProduct()", "pi");
    add("s3_deriv", "-2 * exp(3/2) * holcombeProduct()", "-2*pi");

    // Clausen / Barnes-G circle of relations
    add("s2_clausen_closed_form", "S2(0.2)",
        "(2*sin(pi/5))^(1/5) * exp(cl2(2*pi/5) / (2*pi))");
    add("star_relation_half", "barnesGratio(1/2)", "sqrt(pi)");
    add("star_relation_quarter", "barnesGratio(1/4)",
        "2^(1/8) * pi^(1/4) * exp(-catalan/(2*pi))");
    add("s2_antisymmetry", "S2(0.37) * S2(-0.37)", "1");
    add("cl2_catalan", "cl2(pi/2)", "catalan");
    add("ti2_catalan", "ti2(1)", "catalan");
    add("chi2_li2_relation", "chi2(1/3)", "(li2(1/3) - li2(-1/3)) / 2");
    add("li3_eta", "li3(-1)", "-(3/4) * zeta3");

    // Glaisher-Kinkelin constant and the Gamma-product limit
    add("glaisher_def", "glaisher", "exp(1/12 - zetaprime_neg1)");
    add("ms_rhs_forms", "2^(1/12) * exp(5/24 - (3/2)*zetaprime_neg1 - 7*zeta3/(16*pi^2))",
        "(2*e)^(1/12) * glaisher^(3/2) * exp(-7*zeta3/(16*pi^2))");
    add("ms_limit", "msLimit()",
        "2^(1/12) * exp(5/24 - (3/2)*zetaprime_neg1 - 7*zeta3/(16*pi^2))", 8,
        {"extrapolated"});
    add("ms_limit_glaisher_form", "msLimit()",
        "(2*e)^(1/12) * glaisher^(3/2) * exp(-7*zeta3/(16*pi^2))", 8, {"extrapolated"});

    // the alternating product with quadratic exponents
    add("kt_zeta3_product", "ktZeta3()", "exp(7*zeta3/(4*pi^2) + 1/4)", 8,
        {"extrapolated", "slow"});

    return r;
}

const std::vector<SpecialValueRow>& special_value_table() {
    static const std::vector<SpecialValueRow> rows = {
        {"S2(1/2)", "sqrt(2)", "Hoelder's F; value per Kurokawa-Koyama"},
        {"S2(1/4)", "2^(1/8) * exp(catalan/(2*pi))", "Kurokawa-Koyama"},
        {"S3(1/2)", "2^(1/4) * exp(-7*zeta3/(8*pi^2))", "Kurokawa"},
        {"C3(1/4)", "2^(1/32) * exp(21*zeta3/(64*pi^2) - catalan/(4*pi))",
         "Kurokawa-Wakayama; sign of the Catalan term per Hu-Kim"},
        {"-2*exp(3/2)*holcombeProduct()", "-2*pi", "S3'(1); Kurokawa-Wakayama"},
        {"exp(3/2) * holcombeProduct()", "pi", "Holcombe"},
        {"D(2)", "pi*e/2", "Melzak"},
        {"ktCatalanOdd()", "exp(2*catalan/pi + 1/2)", "Kachi-Tzermias"},
        {"ktCatalanEven()", "exp(2*catalan/pi - 1/2)", "Kachi-Tzermias"},
        {"E(1/4)", "exp(1/8 - 2*catalan/pi + 7*zeta3/(2*pi^2))", "Adamchik"},
        {"shiftedAdamchik()", "(pi/4) * exp(1/2 + 7*zeta3/pi^2)", "Adamchik"},
        {"barnesGratio(1/2)", "sqrt(pi)", "G(3/2)/G(1/2) = Gamma(1/2)"},
        {"barnesGratio(1/4)", "2^(1/8) * pi^(1/4) * exp(-catalan/(2*pi))",
         "G(5/4)/G(3/4); Markov's tables"},
        {"ktZeta3()", "exp(7*zeta3/(4*pi^2) + 1/4)", "Kachi-Tzermias"},
        {"msLimit()", "(2*e)^(1/12) * glaisher^(3/2) * exp(-7*zeta3/(16*pi^2))",
         "Gamma-product limit tied to the Glaisher-Kinkelin constant"},
    };
    return rows;
}

}  // namespace multisine
