// tansum: exact tangent power sums, digit-sum interval statistics and the
// machinery for cross-verifying them. See README.md for the command surface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "tansum/asymptotics.hpp"
#include "tansum/compositions.hpp"
#include "tansum/digit_sums.hpp"
#include "tansum/exact_sums.hpp"
#include "tansum/polynomials.hpp"
#include "tansum/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;  // verification failure / resource refusal
constexpr int kExitUsage = 2;

struct ResultRow {
    std::string label;
    std::string value;
    std::string method;
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ResultRow> results;
};

std::string format_double(double v, int digits = 10) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

void print_record(const OutputRecord& rec, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["command"] = rec.command;
        j["params"] = nlohmann::json::object();
        for (const auto& [k, v] : rec.params) j["params"][k] = v;
        j["results"] = nlohmann::json::array();
        for (const auto& row : rec.results)
            j["results"].push_back({{"label", row.label}, {"value", row.value}, {"method", row.method}});
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "label,value,method\n";
        for (const auto& row : rec.results)
            std::cout << row.label << "," << row.value << "," << row.method << "\n";
    } else if (format == "bfile") {
        for (const auto& row : rec.results) std::cout << row.label << " " << row.value << "\n";
    } else {  // text
        std::cout << "command: " << rec.command << "\n";
        for (const auto& [k, v] : rec.params) std::cout << "  " << k << " = " << v << "\n";
        for (const auto& row : rec.results) {
            std::cout << row.label << " = " << row.value;
            if (!row.method.empty()) std::cout << "   [" << row.method << "]";
            std::cout << "\n";
        }
    }
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TANSUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0) return parsed;
        throw std::domain_error("TANSUM_BUDGET is not a positive integer: " + std::string(env));
    }
    return fallback;
}

void require_odd_n(int n, int min) {
    if (n < min || n % 2 == 0)
        throw std::domain_error("n must be odd and >= " + std::to_string(min) +
                                ", got " + std::to_string(n));
}

int run_sigma(int n, int p, const std::string& method, std::uint64_t budget,
              const std::string& format) {
    OutputRecord rec;
    rec.command = "sigma";
    rec.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"method", method}};

    if (method == "recurrence") {
        require_odd_n(n, 1);
        rec.results.push_back({"sigma", tansum::sigma(n, p).str(), "recurrence"});
        print_record(rec, format);
        return kExitOk;
    }

    require_odd_n(n, 3);
    if (p < 1) throw std::domain_error("methods other than recurrence require p >= 1");

    auto by_bruteforce = [&]() {
        const tansum::BigInt x = tansum::pow_bigint(n - 1, 2 * static_cast<unsigned>(p));
        if (x > budget)
            throw tansum::resource_error("enumeration over (n-1)^(2p) = " + x.str() +
                                         " exceeds budget " + std::to_string(budget));
        const auto stat = tansum::newman_sum(n, x.convert_to<std::uint64_t>(), budget);
        return tansum::exact_div(tansum::BigInt(n) * stat.s_value, 2, "sigma bruteforce");
    };

    if (method == "bruteforce") {
        rec.results.push_back({"sigma", by_bruteforce().str(), "digit-enumeration"});
    } else if (method == "combinatorial") {
        rec.results.push_back({"sigma", tansum::sigma_combinatorial(n, p).str(), "combinatorial"});
    } else {  // all
        const tansum::BigInt a = tansum::sigma(n, p);
        const tansum::BigInt b = by_bruteforce();
        const tansum::BigInt c = tansum::sigma_combinatorial(n, p);
        rec.results.push_back({"sigma", a.str(), "recurrence"});
        rec.results.push_back({"sigma", b.str(), "digit-enumeration"});
        rec.results.push_back({"sigma", c.str(), "combinatorial"});
        const bool agree = a == b && b == c;
        rec.results.push_back({"verdict", agree ? "AGREE" : "DISAGREE", "cross-check"});
        print_record(rec, format);
        return agree ? kExitOk : kExitVerifyFail;
    }
    print_record(rec, format);
    return kExitOk;
}

int run_table(int n, int p_max, const std::string& format) {
    require_odd_n(n, 1);
    if (p_max < 0) throw std::domain_error("p-max must be >= 0");
    OutputRecord rec;
    rec.command = "table";
    rec.params = {{"n", std::to_string(n)}, {"p_max", std::to_string(p_max)}};
    tansum::SigmaCache cache(n);
    for (int p = 0; p <= p_max; ++p)
        rec.results.push_back({std::to_string(p), cache.value(p).str(), "recurrence"});
    print_record(rec, format);
    return kExitOk;
}

int run_poly(int p, const std::string& target, const std::string& basis, const std::string& format) {
    if (p < 1) throw std::domain_error("p must be >= 1");
    OutputRecord rec;
    rec.command = "poly";
    rec.params = {{"p", std::to_string(p)}, {"target", target}, {"basis", basis}};

    const auto tgt = (target == "sigma") ? tansum::SigmaTarget::sigma : tansum::SigmaTarget::sigma_star;
    if (basis == "binomial") {
        if (tgt != tansum::SigmaTarget::sigma)
            throw std::domain_error("binomial basis is only available for target=sigma");
        const auto poly = tansum::to_binomial_basis(tansum::interpolate_sigma_poly(p, tgt));
        for (const auto& [k, c] : poly.coeffs)
            rec.results.push_back({"C(n," + std::to_string(k) + ")", c.str(), "binomial-basis"});
        rec.results.push_back({"rendered", tansum::format_binomial(poly), "binomial-basis"});
    } else {
        const auto poly = tansum::interpolate_sigma_poly(p, tgt);
        for (int k = 0; k <= poly.degree(); ++k) {
            std::ostringstream os;
            os << poly.coeff(k);
            rec.results.push_back({"coeff[" + std::to_string(k) + "]", os.str(), "interpolation"});
        }
        rec.results.push_back({"rendered", tansum::format_monomial(poly), "interpolation"});
    }
    print_record(rec, format);
    return kExitOk;
}

int run_newman(int n, std::optional<std::uint64_t> x, std::optional<int> p, bool fast,
               std::uint64_t budget, const std::string& format) {
    require_odd_n(n, 3);
    if (x.has_value() == p.has_value())
        throw std::domain_error("newman requires exactly one of --x or --p");

    OutputRecord rec;
    rec.command = "newman";
    rec.params = {{"n", std::to_string(n)}, {"fast", fast ? "true" : "false"}};
    if (x) rec.params.emplace_back("x", std::to_string(*x));
    if (p) rec.params.emplace_back("p", std::to_string(*p));

    if (fast && p) {
        rec.results.push_back({"S", tansum::newman_sum_fast(n, *p).str(), "closed-form"});
    } else if (fast && x) {
        if (n != 3) throw std::domain_error("--fast with --x needs n = 3 (period-24 recursion)");
        const auto table = tansum::derive_period24_table(10000);
        rec.results.push_back({"S", tansum::s3_fast(*x, table).str(), "period24-recursion"});
    } else {
        std::uint64_t bound;
        if (p) {
            if (*p < 1) throw std::domain_error("p must be >= 1");
            const tansum::BigInt big = tansum::pow_bigint(n - 1, 2 * static_cast<unsigned>(*p));
            if (big > budget)
                throw tansum::resource_error("(n-1)^(2p) = " + big.str() + " exceeds budget " +
                                             std::to_string(budget) +
                                             "; use --fast for the closed form");
            bound = big.convert_to<std::uint64_t>();
        } else {
            bound = *x;
        }
        const auto stat = tansum::newman_sum(n, bound, budget);
        rec.results.push_back({"S", stat.s_value.str(), "enumeration"});
        rec.results.push_back({"even_count", std::to_string(stat.even_count), "enumeration"});
        rec.results.push_back({"odd_count", std::to_string(stat.odd_count), "enumeration"});
    }
    print_record(rec, format);
    return kExitOk;
}

int run_lambda(int n_max, const std::string& format) {
    require_odd_n(n_max, 3);
    OutputRecord rec;
    rec.command = "lambda";
    rec.params = {{"n_max", std::to_string(n_max)}};
    for (int n = 3; n <= n_max; n += 2) {
        const auto r = tansum::lambda_n(n);
        const std::string key = std::to_string(n);
        rec.results.push_back({"lambda(" + key + ")", format_double(r.lambda), "definition"});
        rec.results.push_back({"lower(" + key + ")", format_double(r.lower_bound), "enclosure"});
        rec.results.push_back({"upper(" + key + ")", format_double(r.upper_bound), "enclosure"});
    }
    print_record(rec, format);
    return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t budget, const std::string& format) {
    tansum::VerifyOptions opts;
    opts.enumeration_budget = budget;
    std::vector<tansum::CheckResult> results;
    if (suite == "identities")
        results = tansum::run_identity_checks(opts);
    else if (suite == "bounds")
        results = tansum::run_bounds_checks(opts);
    else if (suite == "oracles")
        results = tansum::run_oracle_checks(opts);
    else
        results = tansum::run_all_checks(opts);

    bool all_pass = true;
    if (format == "json" || format == "csv") {
        OutputRecord rec;
        rec.command = "verify";
        rec.params = {{"suite", suite}, {"budget", std::to_string(budget)}};
        for (const auto& r : results) {
            rec.results.push_back({r.name, r.pass ? "PASS" : "FAIL", r.detail});
            all_pass = all_pass && r.pass;
        }
        print_record(rec, format);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tangent power sums and digit-sum interval statistics"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}))
        ->capture_default_str();
    std::optional<std::uint64_t> budget_flag;
    app.add_option("--budget", budget_flag,
                   "max candidates for brute-force enumeration (default: TANSUM_BUDGET or built-in)");

    auto* sigma_cmd = app.add_subcommand("sigma", "one tangent power sum value");
    sigma_cmd->fallthrough();
    int s_n = 0, s_p = 0;
    std::string s_method = "recurrence";
    sigma_cmd->add_option("--n", s_n, "odd modulus")->required();
    sigma_cmd->add_option("--p", s_p, "power index")->required();
    sigma_cmd->add_option("--method", s_method, "evaluation route")
        ->check(CLI::IsMember({"recurrence", "bruteforce", "combinatorial", "all"}))
        ->capture_default_str();

    auto* table_cmd = app.add_subcommand("table", "sigma(n, 0..p_max) sequence");
    table_cmd->fallthrough();
    int t_n = 0, t_pmax = 0;
    table_cmd->add_option("--n", t_n, "odd modulus")->required();
    table_cmd->add_option("--p-max", t_pmax, "largest power index")->required();

    auto* poly_cmd = app.add_subcommand("poly", "sigma or sigma* as a polynomial in n");
    poly_cmd->fallthrough();
    int y_p = 0;
    std::string y_target = "sigma", y_basis = "monomial";
    poly_cmd->add_option("--p", y_p, "power index")->required();
    poly_cmd->add_option("--target", y_target)->check(CLI::IsMember({"sigma", "sigma_star"}));
    poly_cmd->add_option("--basis", y_basis)->check(CLI::IsMember({"monomial", "binomial"}));

    auto* newman_cmd = app.add_subcommand("newman", "digit-sum interval sum S_n");
    newman_cmd->fallthrough();
    int w_n = 0;
    std::optional<std::uint64_t> w_x;
    std::optional<int> w_p;
    bool w_fast = false;
    newman_cmd->add_option("--n", w_n, "odd modulus")->required();
    newman_cmd->add_option("--x", w_x, "exclusive upper bound of the interval");
    newman_cmd->add_option("--p", w_p, "use the full interval x = (n-1)^(2p)");
    newman_cmd->add_flag("--fast", w_fast, "closed form / period-24 recursion instead of enumeration");

    auto* lambda_cmd = app.add_subcommand("lambda", "growth exponents lambda_n with bounds");
    lambda_cmd->fallthrough();
    int l_nmax = 0;
    lambda_cmd->add_option("--n-max", l_nmax, "largest odd n")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->fallthrough();
    std::string v_suite = "all";
    verify_cmd->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"identities", "bounds", "oracles", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (format == "bfile" && !table_cmd->parsed())
            throw std::domain_error("bfile format is only available for the table command");
        if (sigma_cmd->parsed())
            return run_sigma(s_n, s_p, s_method,
                             resolve_budget(budget_flag, tansum::kDefaultEnumerationBudget), format);
        if (table_cmd->parsed()) return run_table(t_n, t_pmax, format);
        if (poly_cmd->parsed()) return run_poly(y_p, y_target, y_basis, format);
        if (newman_cmd->parsed())
            return run_newman(w_n, w_x, w_p, w_fast,
                              resolve_budget(budget_flag, tansum::kDefaultEnumerationBudget), format);
        if (lambda_cmd->parsed()) return run_lambda(l_nmax, format);
        if (verify_cmd->parsed())
            return run_verify(v_suite, resolve_budget(budget_flag, 10'000'000), format);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tansum::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const tansum::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
