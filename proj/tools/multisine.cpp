// multisine -- verify the identity collection, evaluate expressions, print
// the special-value table.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/identity.hpp"

using multisine::IdentitySpec;
using multisine::Precision;
using multisine::Status;
using multisine::VerificationReport;

namespace {

const char* status_name(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::ERROR: return "ERROR";
    }
    return "?";
}

int run_verify(bool builtin, const std::string& file, const std::string& filter, int digits,
               bool json_out, int jobs) {
    std::vector<IdentitySpec> specs;
    if (builtin || file.empty()) {
        auto b = multisine::builtin_registry();
        specs.insert(specs.end(), b.begin(), b.end());
    }
    if (!file.empty()) {
        auto f = multisine::load_identity_file(file);
        specs.insert(specs.end(), f.begin(), f.end());
    }
    if (!filter.empty()) {
        std::erase_if(specs, [&](const IdentitySpec& s) {
            return s.name.find(filter) == std::string::npos;
        });
    }

    Precision prec(digits);
    auto reports = multisine::verify_all(specs, prec, jobs);

    bool any_bad = false;
    if (json_out) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json o;
            o["name"] = r.name;
            o["status"] = status_name(r.status);
            o["matched"] = r.matched_digits;
            o["required"] = r.required_digits;
            o["ms"] = r.elapsed_ms;
            o["lhs"] = r.lhs_value ? r.lhs_value->to_string(digits) : "";
            o["rhs"] = r.rhs_value ? r.rhs_value->to_string(digits) : "";
            if (!r.error_message.empty()) o["error"] = r.error_message;
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (!json_out)
            std::printf("%-28s %-5s matched=%d required=%d ms=%.1f\n", r.name.c_str(),
                        status_name(r.status), r.matched_digits, r.required_digits, r.elapsed_ms);
        if (!json_out && r.status == Status::ERROR)
            std::printf("%-28s   %s\n", "", r.error_message.c_str());
        any_bad = any_bad || r.status != Status::PASS;
    }
    return any_bad ? 1 : 0;
}

int run_eval(const std::string& text, int digits) {
    auto e = multisine::parse(text);
    auto v = multisine::evaluate(*e, Precision(digits));
    std::cout << v.to_string(digits) << "\n";
    return 0;
}

int run_list() {
    for (const auto& s : multisine::builtin_registry()) {
        std::printf("%-28s %s == %s  [digits=%d%s]\n", s.name.c_str(), s.lhs_text.c_str(),
                    s.rhs_text.c_str(), s.required_digits,
                    s.tags.empty() ? ""
                                   : (", tags=" + [&] {
                                         std::string t;
                                         for (const auto& tag : s.tags)
                                             t += (t.empty() ? "" : ",") + tag;
                                         return t;
                                     }()).c_str());
    }
    return 0;
}

int run_table(int digits) {
    Precision prec(digits);
    for (const auto& row : multisine::special_value_table()) {
        std::string value;
        try {
            value = multisine::evaluate(*multisine::parse(row.closed_form), prec)
                        .to_string(digits);
        } catch (const multisine::error& e) {
            value = std::string("<error: ") + e.what() + ">";
        }
        std::printf("%-36s = %s\n", row.name.c_str(), value.c_str());
        std::printf("    closed form: %s\n", row.closed_form.c_str());
        std::printf("    source:      %s\n", row.attribution.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision Kurokawa multiple sine / Borwein-Dykshoorn / Adamchik "
                 "identity checker"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "verify identities");
    bool builtin = false;
    std::string file, filter;
    int digits = 50, jobs = 1;
    bool json_out = false;
    verify_cmd->add_flag("--builtin", builtin, "verify the built-in registry");
    verify_cmd->add_option("--file", file, "identity file to verify");
    verify_cmd->add_option("--filter", filter, "only identities whose name contains this");
    verify_cmd->add_option("--digits", digits, "requested decimal digits (default 50)");
    verify_cmd->add_option("--jobs", jobs, "worker threads (default 1)");
    verify_cmd->add_flag("--json", json_out, "JSON report on stdout");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    std::string expr_text;
    int eval_digits = 50;
    eval_cmd->add_option("expr", expr_text, "expression")->required();
    eval_cmd->add_option("--digits", eval_digits, "requested decimal digits (default 50)");

    auto* list_cmd = app.add_subcommand("list", "list the built-in identities");

    auto* table_cmd = app.add_subcommand("table", "print the special-value table");
    int table_digits = 30;
    table_cmd->add_option("--digits", table_digits, "requested decimal digits (default 30)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed())
            return run_verify(builtin, file, filter, digits, json_out, jobs);
        if (eval_cmd->parsed()) return run_eval(expr_text, eval_digits);
        if (list_cmd->parsed()) return run_list();
        if (table_cmd->parsed()) return run_table(table_digits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
