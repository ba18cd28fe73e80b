// hypdiv: exact divisor-class computations on moduli of pointed stable
// hyperelliptic curves.
//
// Commands:
//   class    print a named divisor class in a chosen basis and format
//   verify   classify one (g, n) and optionally emit a JSON certificate
//   grid     classify a rectangle of (g, n) cells into a report file
//   oracle   cross-check the closed-form symmetrized pencil class against
//            brute-force enumeration of all pullbacks
//   age      age/seniority of a cyclic tangent-space action
//   check    independently revalidate an emitted JSON certificate
//
// Exit codes: 0 certified/ok, 1 error, 2 inconclusive (verify) or partial
// failure (grid).

#include "hypdiv/certificate_io.hpp"
#include "hypdiv/reidtai.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace hypdiv;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct RunConfig {
    std::string lambda_variant = "faithful";
    std::string format = "text";
    std::string out;
    int parallel = 1;
    int oracle_bound = 14;
};

RunConfig load_config(const std::string& path) {
    RunConfig config;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("lambda_variant")) config.lambda_variant = j.at("lambda_variant").get<std::string>();
    if (j.contains("format")) config.format = j.at("format").get<std::string>();
    if (j.contains("out")) config.out = j.at("out").get<std::string>();
    if (j.contains("parallel")) config.parallel = j.at("parallel").get<int>();
    if (j.contains("oracle_bound")) config.oracle_bound = j.at("oracle_bound").get<int>();
    return config;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

// Bound of an n-range, either absolute ("14") or relative to g ("4g+6").
struct RangeBound {
    int g_coefficient = 0;
    int offset = 0;

    int eval(int g) const { return g_coefficient * g + offset; }

    static RangeBound parse(const std::string& text) {
        RangeBound b;
        auto gpos = text.find('g');
        try {
            if (gpos == std::string::npos) {
                b.offset = std::stoi(text);
                return b;
            }
            const std::string head = text.substr(0, gpos);
            b.g_coefficient = head.empty() ? 1 : std::stoi(head);
            const std::string tail = text.substr(gpos + 1);
            b.offset = tail.empty() ? 0 : std::stoi(tail);
            return b;
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse range bound '" + text +
                                        "' (expected forms: 14, g+2, 4g+6)");
        }
    }
};

int cmd_class(const std::string& space_name, int g, std::optional<int> n, const std::string& name,
              OutputFormat format, const std::string& out_path, bool force_symmetric) {
    std::string rendered;
    auto need_n = [&]() {
        if (!n) throw std::invalid_argument("--n is required for " + space_name);
        return *n;
    };

    if (space_name == "hbar-g") {
        DivisorClass cls(Space::hyperelliptic(g));
        if (name == "K-coarse") cls = canonical_class_base(g, SpaceVariant::Coarse);
        else if (name == "K-stack") cls = canonical_class_base(g, SpaceVariant::Stack);
        else if (name == "lambda-relation") cls = lambda_relation(g);
        else if (name == "delta-irr") cls = delta_irr_decomposition(g);
        else if (name == "R") cls = ramification_divisor(g);
        else throw std::invalid_argument("unknown class name for hbar-g: " + name);
        rendered = render_class(cls, format);
    } else if (space_name == "m0-quot") {
        if (name != "K-rational-quotient")
            throw std::invalid_argument("unknown class name for m0-quot: " + name);
        rendered = render_class(canonical_class_rational_quotient(g), format);
    } else if (space_name == "mbar-gn") {
        if (name == "Wg") {
            PencilDivisor w = pencil_divisor(g);
            rendered = render_class(w.base, format);
            if (format == OutputFormat::Text) {
                rendered += "\n(nonnegative multiples of further boundary divisors omitted)";
            }
        } else if (name == "W") {
            rendered = render_class(symmetrized_pencil_average(g, need_n()), format);
            if (format == OutputFormat::Text) {
                rendered += "\n(nonnegative multiples of further boundary divisors omitted)";
            }
        } else {
            throw std::invalid_argument("unknown class name for mbar-gn: " + name);
        }
    } else if (space_name == "hbar-gn") {
        const int points = need_n();
        const bool symmetric = force_symmetric || points > 12;
        auto emit = [&](const DivisorClass& cls) {
            rendered = symmetric ? render_class(symmetrize(cls), format) : render_class(cls, format);
        };
        if (name == "K-coarse" || name == "K-stack") {
            const SpaceVariant variant =
                name == "K-coarse" ? SpaceVariant::Coarse : SpaceVariant::Stack;
            if (symmetric) {
                rendered = render_class(canonical_class_pointed_symmetric(g, points, variant), format);
            } else {
                rendered = render_class(canonical_class_pointed(g, points, variant), format);
            }
        } else if (name == "delta-irr") {
            emit(delta_irr_decomposition(g, points));
        } else if (name == "R") {
            emit(ramification_divisor(g, points));
        } else {
            throw std::invalid_argument("unknown class name for hbar-gn: " + name);
        }
    } else {
        throw std::invalid_argument("unknown space: " + space_name +
                                    " (expected hbar-g|hbar-gn|mbar-gn|m0-quot)");
    }
    write_output(out_path, rendered);
    return kExitOk;
}

int cmd_verify(int g, int n, LambdaVariant variant, OutputFormat format,
               const std::string& emit_path, const std::string& out_path) {
    KodairaCertificate cert = classify_kodaira(g, n, variant);
    if (!emit_path.empty()) write_output(emit_path, certificate_to_json(cert));
    if (format == OutputFormat::Json) {
        write_output(out_path, certificate_to_json(cert));
    } else {
        write_output(out_path, certificate_to_text(cert));
    }
    return cert.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_grid(int g_min, int g_max, const RangeBound& n_min, const RangeBound& n_max,
             LambdaVariant variant, OutputFormat format, const std::string& out_path,
             int parallel) {
    if (g_min < 2 || g_max < g_min) throw std::invalid_argument("invalid genus range");
    std::vector<std::pair<int, int>> cells;
    for (int g = g_min; g <= g_max; ++g) {
        const int lo = n_min.eval(g);
        const int hi = n_max.eval(g);
        for (int n = lo; n <= hi; ++n) cells.emplace_back(g, n);
    }
    if (cells.empty()) throw std::invalid_argument("empty grid");
    std::vector<GridCell> result = grid_verify(cells, variant, parallel);
    write_output(out_path, grid_report(result, variant, format));
    for (const auto& cell : result) {
        if (!cell.error.empty()) return kExitInconclusive;
    }
    return kExitOk;
}

int cmd_oracle(int g, int n, int bound, const std::string& out_path) {
    SymmetricDivisorClass closed = symmetrized_pencil_average(g, n);
    SymmetricDivisorClass enumerated = enumerate_pencil_average(g, n, bound);
    if (closed == enumerated) {
        write_output(out_path, "oracle agreement: closed form = enumeration over " +
                                   binomial(n, g).get_str() + " pullbacks for g = " +
                                   std::to_string(g) + ", n = " + std::to_string(n));
        return kExitOk;
    }
    std::ostringstream os;
    os << "oracle mismatch for g = " << g << ", n = " << n << "\n";
    for (const auto& [label, c] : closed.coefficients()) {
        const Rational other = enumerated.coefficient(label);
        if (other != c) {
            os << "  " << symmetric_label_name(label) << ": closed form " << to_fraction_string(c)
               << ", enumeration " << to_fraction_string(other) << "\n";
        }
    }
    for (const auto& [label, c] : enumerated.coefficients()) {
        if (sgn(closed.coefficient(label)) == 0) {
            os << "  " << symmetric_label_name(label) << ": closed form 0, enumeration "
               << to_fraction_string(c) << "\n";
        }
    }
    write_output(out_path, os.str());
    return kExitError;
}

int cmd_age(std::optional<int> order, const std::string& exponents_text, bool hyperelliptic,
            std::optional<int> g, std::optional<int> m, const std::string& out_path) {
    AutomorphismAction action;
    if (hyperelliptic) {
        if (!g || !m) throw std::invalid_argument("--hyperelliptic requires --g and --m");
        action = smooth_hyperelliptic_action(*g, *m);
    } else {
        if (!order) throw std::invalid_argument("--order is required (or use --hyperelliptic)");
        std::vector<int> exponents;
        std::stringstream ss(exponents_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            exponents.push_back(std::stoi(item));
        }
        action = AutomorphismAction::make(*order, exponents);
    }

    ActionClassification c = seniority(action);
    std::ostringstream os;
    os << "order: " << action.order << ", exponents: (";
    for (size_t i = 0; i < action.exponents.size(); ++i) {
        if (i) os << ",";
        os << action.exponents[i];
    }
    os << ")\n";
    os << "verdict: " << to_string(c.verdict) << "\n";
    os << "minimal age: " << to_fraction_string(c.minimal_age) << "\n";
    os << "age table:";
    for (int k : units_mod(action.order)) {
        os << " k=" << k << ": " << to_fraction_string(age(action, k)) << ";";
    }
    os << "\n";
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_check(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open certificate: " + in_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    KodairaCertificate cert = certificate_from_json(buffer.str());
    RecheckResult result = recheck_certificate(cert);
    std::cout << (result.ok ? "certificate ok" : "certificate INVALID: " + result.message) << "\n";
    return result.ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    // A config file provides defaults; explicit flags override them.
    RunConfig config;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                config = load_config(argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitError;
            }
        }
    }

    CLI::App app{"exact divisor-class computations on moduli of pointed hyperelliptic curves"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file with default flag values");

    // class
    auto* cls = app.add_subcommand("class", "print a named divisor class");
    std::string cls_space, cls_name;
    int cls_g = 2;
    std::optional<int> cls_n;
    std::string cls_format = config.format, cls_out = config.out;
    bool cls_symmetric = false;
    cls->add_option("--space", cls_space, "hbar-g|hbar-gn|mbar-gn|m0-quot")->required();
    cls->add_option("--g", cls_g, "genus (>= 2)")->required();
    cls->add_option("--n", cls_n, "number of marked points");
    cls->add_option("--name", cls_name,
                    "K-coarse|K-stack|lambda-relation|delta-irr|R|K-rational-quotient|Wg|W")
        ->required();
    cls->add_option("--format", cls_format, "text|json|csv|latex");
    cls->add_option("--out", cls_out, "output path (default stdout)");
    cls->add_flag("--symmetric", cls_symmetric, "force the symmetric basis on hbar-gn");

    // verify
    auto* verify = app.add_subcommand("verify", "classify one (g, n)");
    int v_g = 2, v_n = 3;
    std::string v_variant = config.lambda_variant, v_format = config.format;
    std::string v_emit, v_out = config.out;
    verify->add_option("--g", v_g, "genus (>= 2)")->required();
    verify->add_option("--n", v_n, "number of marked points (> g)")->required();
    verify->add_option("--variant", v_variant, "faithful|printed");
    verify->add_option("--format", v_format, "text|json");
    verify->add_option("--emit", v_emit, "write the JSON certificate to this path");
    verify->add_option("--out", v_out, "output path (default stdout)");

    // grid
    auto* grid = app.add_subcommand("grid", "classify a grid of (g, n) cells");
    int grid_gmin = 2, grid_gmax = 2, grid_parallel = config.parallel;
    std::string grid_nmin, grid_nmax;
    std::string grid_variant = config.lambda_variant, grid_format = config.format;
    std::string grid_out = config.out;
    grid->add_option("--g-min", grid_gmin, "smallest genus")->required();
    grid->add_option("--g-max", grid_gmax, "largest genus")->required();
    grid->add_option("--n-min", grid_nmin, "smallest n; absolute or relative to g (e.g. 4g+5)")
        ->required();
    grid->add_option("--n-max", grid_nmax, "largest n; absolute or relative to g (e.g. 4g+8)")
        ->required();
    grid->add_option("--variant", grid_variant, "faithful|printed");
    grid->add_option("--format", grid_format, "text|json|csv|latex");
    grid->add_option("--out", grid_out, "output path (default stdout)");
    grid->add_option("--parallel", grid_parallel, "worker count (output is identical for any value)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "closed form vs enumeration cross-check");
    int o_g = 2, o_n = 5, o_bound = config.oracle_bound;
    std::string o_out = config.out;
    oracle->add_option("--g", o_g, "genus (>= 2)")->required();
    oracle->add_option("--n", o_n, "number of marked points (> g)")->required();
    oracle->add_option("--max-n", o_bound, "enumeration bound");
    oracle->add_option("--out", o_out, "output path (default stdout)");

    // age
    auto* age_cmd = app.add_subcommand("age", "age/seniority of a cyclic tangent action");
    std::optional<int> a_order, a_g, a_m;
    std::string a_exponents, a_out = config.out;
    bool a_hyper = false;
    age_cmd->add_option("--order", a_order, "order of the action");
    age_cmd->add_option("--exponents", a_exponents, "comma-separated exponent list");
    age_cmd->add_flag("--hyperelliptic", a_hyper,
                      "classify the induced action for a smooth hyperelliptic curve");
    age_cmd->add_option("--g", a_g, "genus (with --hyperelliptic)");
    age_cmd->add_option("--m", a_m, "rotation order (with --hyperelliptic)");
    age_cmd->add_option("--out", a_out, "output path (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "revalidate an emitted JSON certificate");
    std::string c_in;
    check->add_option("--in", c_in, "certificate path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            return cmd_class(cls_space, cls_g, cls_n, cls_name, parse_output_format(cls_format),
                             cls_out, cls_symmetric);
        }
        if (verify->parsed()) {
            return cmd_verify(v_g, v_n, parse_lambda_variant(v_variant),
                              parse_output_format(v_format), v_emit, v_out);
        }
        if (grid->parsed()) {
            return cmd_grid(grid_gmin, grid_gmax, RangeBound::parse(grid_nmin),
                            RangeBound::parse(grid_nmax), parse_lambda_variant(grid_variant),
                            parse_output_format(grid_format), grid_out, grid_parallel);
        }
        if (oracle->parsed()) return cmd_oracle(o_g, o_n, o_bound, o_out);
        if (age_cmd->parsed()) return cmd_age(a_order, a_exponents, a_hyper, a_g, a_m, a_out);
        if (check->parsed()) return cmd_check(c_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no command\n";
    return kExitError;
}
