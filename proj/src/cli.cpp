#include "gammainv/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gammainv/branches.hpp"
#include "gammainv/gamma.hpp"
#include "gammainv/genus2.hpp"
#include "gammainv/pickrep.hpp"

namespace gammainv::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// JSON with every floating value printed to 17 significant digits.
void write_json(const json& j, std::ostream& out, int depth) {
    const std::string pad(2 * depth, ' ');
    const std::string inner(2 * (depth + 1), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out << ",\n";
                first = false;
                out << inner << json(it.key()).dump() << ": ";
                write_json(it.value(), out, depth + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",\n";
                out << inner;
                write_json(j[i], out, depth + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case json::value_t::number_float:
            out << format_number(j.get<double>());
            return;
        default:
            out << j.dump();
    }
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Flattens one row for CSV: complex objects {re, im} become name_re, name_im.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& cells) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "_" + it.key(), cells);
        return;
    }
    if (j.is_number_float()) {
        cells.emplace_back(prefix, format_number(j.get<double>()));
    } else if (j.is_string()) {
        cells.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_null()) {
        cells.emplace_back(prefix, "");
    } else {
        cells.emplace_back(prefix, j.dump());
    }
}

// Rows are the elements of the first array-valued field, or the object itself.
void write_csv(const json& j, std::ostream& out) {
    json rows = json::array({j});
    if (j.is_array()) rows = j;
    else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
                rows = it.value();
                break;
            }
        }
    }
    bool header = true;
    for (const json& row : rows) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(row, "", cells);
        if (header) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i].first;
            out << "\n";
            header = false;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i].second;
        out << "\n";
    }
}

QuadratureConfig quadrature_from_env() {
    QuadratureConfig cfg = representation_quadrature();
    if (const char* env = std::getenv("GAMMA_INV_QUAD_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol > 0.0))
            throw UsageError("GAMMA_INV_QUAD_TOL must be a positive number, got '" + std::string(env) + "'");
        cfg.abs_tol = tol;
    }
    return cfg;
}

BranchIndex branch_arg(int k, bool allow_principal) {
    if (k < (allow_principal ? -1 : 0) || k > kMaxBranch)
        throw UsageError("--branch " + std::to_string(k) + " out of range [" + (allow_principal ? "-1" : "0") +
                         ", " + std::to_string(kMaxBranch) + "]");
    return BranchIndex(k);
}

Complex complex_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_complex(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": cannot parse '" + text + "' as a complex number");
    }
}

ClassGFunction instance_arg(const std::string& name) {
    if (name == "barnes-g") return barnes_g_function();
    if (name == "inverse-gamma2") return inverse_gamma2_function();
    throw UsageError("--instance must be barnes-g or inverse-gamma2, got '" + name + "'");
}

json derived_json(const ClassGFunction& fn, const ClassGDerived& d) {
    return json{{"r", fn.r()},          {"a", fn.a()},       {"b", fn.b()},
                {"lambda_rule", fn.rule().describe()},       {"u", d.u},
                {"beta", d.beta},       {"f_beta", d.f_beta}, {"in_class_g", d.in_class_g}};
}

std::vector<Complex> default_probe_points(const BranchInterval& I) {
    const double w = I.width();
    return {Complex(10.0, 0.0),
            Complex(-10.0, 0.0),
            Complex(I.hi + 0.01 * w, 0.0),
            Complex(I.lo - 0.01 * w, 0.0),
            Complex(0.0, 1.0),
            Complex(I.hi, 0.5 * w),
            Complex(I.lo, -0.5 * w),
            Complex(0.3 * I.hi, 1e-3 * w),
            Complex(0.5 * I.lo, 1e-3 * w),
            Complex(0.5 * I.hi, -1e-2 * w)};
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex number");
    auto to_double = [](const std::string& part) {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    try {
        if (s.back() != 'i' && s.back() != 'j') return {to_double(s), 0.0};
        s.pop_back();
        // the imaginary part starts at the last sign that is not an exponent sign
        std::size_t split = std::string::npos;
        for (std::size_t pos = s.size(); pos-- > 0;) {
            if ((s[pos] == '+' || s[pos] == '-') && (pos == 0 || (s[pos - 1] != 'e' && s[pos - 1] != 'E'))) {
                split = pos;
                break;
            }
        }
        const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
        std::string im_part = split == std::string::npos ? s : s.substr(split);
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        return {re_part.empty() ? 0.0 : to_double(re_part), to_double(im_part)};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
    }
}

bool Report::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

Report build_report(const std::string& suite) {
    if (suite != "paper" && suite != "structural") throw UsageError("--suite must be paper or structural");
    Report report{suite, {}};
    auto add = [&](std::string name, std::optional<double> paper, double computed, double tol) {
        const bool pass = !paper || std::abs(computed - *paper) <= tol;
        report.items.push_back({std::move(name), paper, computed, tol, pass});
    };
    if (suite == "paper") {
        const ClassGDerived g = classify(barnes_g_function());
        const ClassGDerived g2 = classify(inverse_gamma2_function());
        add("beta_G", 2.568, g.beta, 1e-3);
        add("G(beta_G)", 0.945, g.f_beta, 1e-3);
        add("beta_2", 3.763, g2.beta, 1e-3);
        add("1/Gamma_2(beta_2)", 0.048, g2.f_beta, 1e-3);
    }
    for (int k = 1; k <= 4; ++k) {
        const PickParameters p = pick_parameters(BranchIndex(k));
        const std::string suffix = "_" + std::to_string(k);
        add("a" + suffix, 0.0, p.a, 1e-6);
        add("b" + suffix, -k, p.b, 1e-3);
        add("c" + suffix, 0.0, p.c, 1e-4);
    }
    for (int k = 1; k <= 2; ++k) {
        add("endpoint_exponent_left_" + std::to_string(k), 0.5, endpoint_exponent(BranchIndex(k), Endpoint::left),
            0.05);
        add("endpoint_exponent_right_" + std::to_string(k), 0.5,
            endpoint_exponent(BranchIndex(k), Endpoint::right), 0.05);
    }
    return report;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branches of the inverse Gamma function and their Pick representations", "gammainv"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    int max_k = 8;
    auto* cmd_crit = app.add_subcommand("critical-points", "Zeros x_k of psi and Gamma(x_k)");
    cmd_crit->add_option("--max-k", max_k, "Largest k")->check(CLI::Range(0, kCriticalCache));

    std::string function = "gamma";
    std::string z_text;
    auto* cmd_eval = app.add_subcommand("eval", "Evaluate a special function");
    cmd_eval->add_option("function", function, "gamma, log-gamma, psi, psi-prime, barnes-g, gamma2")
        ->check(CLI::IsMember({"gamma", "log-gamma", "psi", "psi-prime", "barnes-g", "gamma2"}));
    cmd_eval->add_option("--z", z_text, "Argument")->required();

    int branch = 0;
    std::string w_text;
    auto* cmd_inv = app.add_subcommand("invert", "Branch inverse G_k(w) (k = -1: principal)");
    cmd_inv->add_option("--branch", branch, "Branch index k")->required();
    cmd_inv->add_option("--w", w_text, "Argument")->required();

    int n_nodes = 64;
    std::string scheme = "endpoint-refined";
    std::string output_path;
    std::optional<double> single_t;
    auto* cmd_den = app.add_subcommand("density", "Density d_k on I_k");
    cmd_den->add_option("--branch", branch, "Branch index k >= 0")->required();
    cmd_den->add_option("--n", n_nodes, "Number of nodes (>= 16)");
    cmd_den->add_option("--scheme", scheme, "Node placement")->check(CLI::IsMember({"uniform", "endpoint-refined"}));
    cmd_den->add_option("--t", single_t, "Evaluate at a single point instead");
    cmd_den->add_option("--output", output_path, "Write the CSV table to this file");

    std::vector<std::string> z_list;
    double tolerance = 1e-5;
    auto* cmd_rep = app.add_subcommand("verify-representation", "Compare the integral representation with G_k");
    cmd_rep->add_option("--branch", branch, "Branch index k >= 0")->required();
    cmd_rep->add_option("--z", z_list, "Test points (default: 10 built-in points)");
    cmd_rep->add_option("--tol", tolerance, "Pass tolerance");

    std::string which = "right";
    auto* cmd_end = app.add_subcommand("endpoint", "Endpoint sum rule and density exponent");
    cmd_end->add_option("--branch", branch, "Branch index k >= 0")->required();
    cmd_end->add_option("--which", which, "Endpoint")->check(CLI::IsMember({"left", "right"}));

    auto* cmd_pick = app.add_subcommand("pick-params", "Linear coefficient, constant and point mass of G_k");
    cmd_pick->add_option("--branch", branch, "Branch index k >= 0")->required();

    std::string instance = "barnes-g";
    auto* cmd_cls = app.add_subcommand("genus2-classify", "Inflection, minimum and class membership");
    cmd_cls->add_option("--instance", instance, "barnes-g or inverse-gamma2");

    bool with_representation = false;
    auto* cmd_g2i = app.add_subcommand("genus2-invert", "Pick inverse f^{-1}(w)");
    cmd_g2i->add_option("--instance", instance, "barnes-g or inverse-gamma2");
    cmd_g2i->add_option("--w", w_text, "Argument")->required();
    cmd_g2i->add_flag("--representation", with_representation, "Also evaluate the integral representation");

    auto* cmd_sin = app.add_subcommand("sin-oracle", "Closed-form versus comb-based inverse of sin");
    cmd_sin->add_option("--z", z_text, "Argument in the upper half plane")->required();

    std::string suite = "paper";
    auto* cmd_rpt = app.add_subcommand("report", "Reproduce the reference numbers");
    cmd_rpt->add_option("--suite", suite, "paper or structural");

    std::vector<std::string> argv_storage{"gammainv"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    int status = kExitOk;
    json result;
    try {
        if (*cmd_crit) {
            result = json::array();
            for (int k = 0; k <= max_k; ++k) {
                const CriticalPoint& c = cached_critical_point(k);
                result.push_back({{"k", k}, {"x", c.x}, {"gamma_x", c.gamma_x}});
            }
        } else if (*cmd_eval) {
            const Complex z = complex_arg("--z", z_text);
            Complex value;
            if (function == "gamma") value = gamma(z);
            else if (function == "log-gamma") value = log_gamma(z);
            else if (function == "psi") value = psi(z);
            else if (function == "psi-prime") value = psi_prime(z);
            else if (function == "barnes-g") value = barnes_g(z);
            else value = gamma2(z);
            result = {{"function", function}, {"z", complex_json(z)}, {"value", complex_json(value)}};
        } else if (*cmd_inv) {
            const BranchIndex k = branch_arg(branch, true);
            const Complex w = complex_arg("--w", w_text);
            const Complex z = branch == -1 ? principal_inverse(w) : extended_inverse(k, w);
            result = {{"branch", branch}, {"w", complex_json(w)}, {"z", complex_json(z)}};
        } else if (*cmd_den) {
            const BranchIndex k = branch_arg(branch, false);
            if (single_t) {
                result = {{"branch", branch}, {"t", *single_t}, {"d", density(k, *single_t)}};
            } else {
                if (n_nodes < 16) throw UsageError("--n must be >= 16");
                const DensityTable table =
                    density_table(k, n_nodes, scheme == "uniform" ? GridScheme::uniform : GridScheme::endpoint_refined);
                if (!output_path.empty()) {
                    std::ofstream file(output_path);
                    if (!file) throw std::runtime_error("cannot open '" + output_path + "' for writing");
                    write_density_csv(table, file);
                    if (!file) throw std::runtime_error("write to '" + output_path + "' failed");
                }
                if (format == "csv") {
                    write_density_csv(table, out);
                    return kExitOk;
                }
                const BranchInterval I = branch_interval(k);
                json nodes = json::array();
                for (const DensityNode& n : table.nodes) nodes.push_back({{"t", n.t}, {"d", n.d}});
                result = {{"branch", branch}, {"scheme", scheme}, {"lo", I.lo}, {"hi", I.hi}, {"nodes", nodes}};
            }
        } else if (*cmd_rep) {
            const BranchIndex k = branch_arg(branch, false);
            const QuadratureConfig cfg = quadrature_from_env();
            std::vector<Complex> points;
            for (const std::string& text : z_list) points.push_back(complex_arg("--z", text));
            if (points.empty()) points = default_probe_points(branch_interval(k));
            json rows = json::array();
            for (const Complex z : points) {
                const Complex rep = stieltjes_eval(k, z, cfg);
                const Complex direct = extended_inverse(k, z);
                const double diff = std::abs(rep - direct);
                const bool pass = diff <= tolerance;
                if (!pass) status = kExitVerificationFailed;
                rows.push_back({{"z", complex_json(z)},
                                {"representation", complex_json(rep)},
                                {"inverse", complex_json(direct)},
                                {"abs_diff", diff},
                                {"pass", pass}});
            }
            result = {{"branch", branch}, {"tolerance", tolerance}, {"points", rows}};
        } else if (*cmd_end) {
            const BranchIndex k = branch_arg(branch, false);
            const Endpoint end = which == "left" ? Endpoint::left : Endpoint::right;
            const double value = endpoint_identity(k, end, quadrature_from_env());
            const double expected = cached_critical_point(end == Endpoint::left ? branch : branch + 1).x;
            result = {{"branch", branch},          {"which", which},
                      {"integral", value},         {"critical_point", expected},
                      {"abs_diff", std::abs(value - expected)},
                      {"exponent", endpoint_exponent(k, end)}};
        } else if (*cmd_pick) {
            const PickParameters p = pick_parameters(branch_arg(branch, false));
            result = {{"branch", branch}, {"a", p.a}, {"b", p.b}, {"c", p.c}};
        } else if (*cmd_cls) {
            const ClassGFunction fn = instance_arg(instance);
            result = derived_json(fn, classify(fn));
        } else if (*cmd_g2i) {
            const PickInverse inverse(instance_arg(instance));
            const Complex w = complex_arg("--w", w_text);
            const Complex z = inverse(w);
            result = {{"instance", instance}, {"w", complex_json(w)}, {"z", complex_json(z)}};
            if (with_representation) result["representation"] = complex_json(inverse.stieltjes_eval(w, quadrature_from_env()));
        } else if (*cmd_sin) {
            const Complex z = complex_arg("--z", z_text);
            const Complex closed = lp_sin_inverse(z);
            const Complex comb = lp_sin_inverse_comb(z);
            result = {{"z", complex_json(z)},
                      {"closed_form", complex_json(closed)},
                      {"comb", complex_json(comb)},
                      {"abs_diff", std::abs(closed - comb)}};
        } else if (*cmd_rpt) {
            const Report report = build_report(suite);
            json items = json::array();
            for (const ReportItem& item : report.items) {
                items.push_back({{"name", item.name},
                                 {"paper_value", item.paper_value ? json(*item.paper_value) : json(nullptr)},
                                 {"computed", item.computed},
                                 {"tolerance", item.tolerance},
                                 {"pass", item.pass}});
            }
            result = {{"suite", report.suite}, {"all_pass", report.all_pass()}, {"items", items}};
            if (!report.all_pass()) status = kExitVerificationFailed;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    if (format == "csv") {
        write_csv(result, out);
    } else {
        write_json(result, out, 0);
        out << "\n";
    }
    return status;
}

}  // namespace gammainv::cli
