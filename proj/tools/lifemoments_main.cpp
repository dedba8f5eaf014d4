// Command-line front end for the moment engine.
//
// Subcommands:
//   moment    one contract, one value per requested assumption
//   table     preset benchmark grids (deferred window / whole-life)
//   plotdata  point series for interpolation, densities, and premium curves
//
// Exit codes: 0 success, 1 computation error, 2 usage/config error.

#include "lifemoments/errors.hpp"
#include "lifemoments/fractional_age.hpp"
#include "lifemoments/gompertz.hpp"
#include "lifemoments/life_table.hpp"
#include "lifemoments/products.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace {

using namespace lifemoments;

/// Configuration problems detected after flag parsing; reported on stderr
/// and mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ============================================================================
// Value formatting. Every number is printed with printf's fixed notation at
// the configured precision; the CLI never post-processes library values.
// ============================================================================

std::string format_value(double value, int precision) {
    const int length = std::snprintf(nullptr, 0, "%.*f", precision, value);
    std::string text(static_cast<std::size_t>(length), '\0');
    std::snprintf(text.data(), text.size() + 1, "%.*f", precision, value);
    return text;
}

// ============================================================================
// Flag containers.
// ============================================================================

struct InputFlags {
    std::string csv_path;
    double alpha = 0.09;
    double beta = 0.0007;
    int max_age = 140;
    double radix = 1.0;
    bool alpha_given = false;
    bool beta_given = false;
};

struct OutputFlags {
    std::string format = "csv";
    int precision = 7;
};

/// One requested output column: a fractional-age assumption on the
/// tabulated input, or the exact parametric law itself.
struct Column {
    std::string label;
    bool exact_law = false;
    Assumption assumption = Assumption::ConstantForce;
};

/// Resolved data source: a life table (loaded or discretized) and, when the
/// input was parametric, the law itself for exact-law columns.
struct DataSource {
    std::optional<LifeTable> table;
    std::optional<GompertzParams> params;
};

std::vector<Column> parse_assumption_list(const std::string& listed) {
    std::vector<Column> columns;
    std::size_t begin = 0;
    while (begin <= listed.size()) {
        std::size_t end = listed.find(',', begin);
        if (end == std::string::npos) {
            end = listed.size();
        }
        std::string token = listed.substr(begin, end - begin);
        for (char& c : token) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        if (token == "UDD") {
            columns.push_back({"UDD", false, Assumption::UDD});
        } else if (token == "C") {
            columns.push_back({"C", false, Assumption::ConstantForce});
        } else if (token == "B") {
            columns.push_back({"B", false, Assumption::Balducci});
        } else if (token == "G") {
            columns.push_back({"G", true, Assumption::ConstantForce});
        } else {
            throw UsageError("unknown assumption `" + token +
                             "`; expected a comma list drawn from UDD,C,B,G");
        }
        begin = end + 1;
    }
    return columns;
}

ProductKind parse_product(const std::string& name) {
    static const std::map<std::string, ProductKind> kinds = {
        {"term-insurance", ProductKind::TermInsurance},
        {"lifetime", ProductKind::Lifetime},
        {"increasing-continuous", ProductKind::IncreasingContinuous},
        {"increasing-annual", ProductKind::IncreasingAnnual},
        {"decreasing-annual", ProductKind::DecreasingAnnual},
        {"mthly-insurance", ProductKind::MthlyInsurance},
        {"mthly-increasing", ProductKind::MthlyIncreasing},
    };
    const auto found = kinds.find(name);
    if (found == kinds.end()) {
        throw UsageError("unknown product `" + name + "`");
    }
    return found->second;
}

DataSource resolve_input(const InputFlags& input, bool need_parametric) {
    DataSource source;
    const bool parametric = input.alpha_given || input.beta_given ||
                            (need_parametric && input.csv_path.empty());
    if (!input.csv_path.empty() && parametric) {
        throw UsageError("--input conflicts with --alpha/--beta: choose a CSV "
                         "table or a parametric law, not both");
    }
    if (!input.csv_path.empty()) {
        source.table = load_life_table_file(input.csv_path);
        return source;
    }
    if (parametric) {
        source.params = GompertzParams{input.alpha, input.beta};
        source.table = discretize(*source.params, input.max_age, input.radix);
        return source;
    }
    throw UsageError("no input: provide --input CSV or --alpha/--beta "
                     "parametric law");
}

// ============================================================================
// Grid output: an optional label column plus one column per assumption.
// ============================================================================

void emit_grid(const std::string& label_header,
               const std::vector<std::string>& labels,
               const std::vector<Column>& columns,
               const std::vector<std::vector<std::string>>& cells,
               const std::string& format) {
    const bool labeled = !labels.empty();
    if (format == "markdown") {
        std::string header = "|";
        std::string rule = "|";
        if (labeled) {
            header += " " + label_header + " |";
            rule += " --- |";
        }
        for (const Column& column : columns) {
            header += " " + column.label + " |";
            rule += " --- |";
        }
        std::printf("%s\n%s\n", header.c_str(), rule.c_str());
        for (std::size_t r = 0; r < cells.size(); ++r) {
            std::string row = "|";
            if (labeled) {
                row += " " + labels[r] + " |";
            }
            for (const std::string& cell : cells[r]) {
                row += " " + cell + " |";
            }
            std::printf("%s\n", row.c_str());
        }
        return;
    }
    if (format == "json") {
        // Assembled by hand so emitted numbers keep the configured rounding.
        std::string out = "[";
        for (std::size_t r = 0; r < cells.size(); ++r) {
            out += (r == 0) ? "\n  {" : ",\n  {";
            bool first = true;
            if (labeled) {
                out += "\"" + label_header + "\": \"" + labels[r] + "\"";
                first = false;
            }
            for (std::size_t c = 0; c < columns.size(); ++c) {
                if (!first) {
                    out += ", ";
                }
                out += "\"" + columns[c].label + "\": " + cells[r][c];
                first = false;
            }
            out += "}";
        }
        out += "\n]";
        std::printf("%s\n", out.c_str());
        return;
    }
    // CSV (default).
    std::string header;
    if (labeled) {
        header += label_header;
    }
    for (const Column& column : columns) {
        if (!header.empty()) {
            header += ",";
        }
        header += column.label;
    }
    std::printf("%s\n", header.c_str());
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string row;
        if (labeled) {
            row += labels[r];
        }
        for (const std::string& cell : cells[r]) {
            if (!row.empty()) {
                row += ",";
            }
            row += cell;
        }
        std::printf("%s\n", row.c_str());
    }
}

// ============================================================================
// Cell evaluation: the CLI only routes to the library.
//   C        -> constant-force closed form
//   UDD / B  -> quadrature oracle under that assumption
//   G        -> exact parametric law (parametric input only)
// ============================================================================

double evaluate_cell(const DataSource& source, const Column& column,
                     ProductKind kind, const ProductSpec& spec,
                     const QuadratureOptions& options, double law_tol) {
    if (column.exact_law) {
        if (!source.params) {
            throw UsageError("assumption G needs a parametric law "
                             "(--alpha/--beta); a CSV table has no exact "
                             "continuous distribution");
        }
        return gompertz_product_moment(*source.params, kind, spec, law_tol).value;
    }
    if (column.assumption == Assumption::ConstantForce) {
        return closed_form_moment(*source.table, kind, spec).value;
    }
    return oracle_product_moment(*source.table, column.assumption, kind, spec,
                                 options).value;
}

// ============================================================================
// moment subcommand.
// ============================================================================

struct MomentFlags {
    std::string product;
    int x = 0;
    int defer = 0;
    int defer_periods = 0;
    int term = 0;
    bool term_given = false;
    bool whole_life = false;
    int m = 1;
    double i = 0.0;
    int j = 1;
    bool force_terminal = false;
    std::string assumptions = "C";
    double oracle_tol = 0.0;
};

ProductSpec build_spec(const MomentFlags& flags) {
    ProductSpec spec;
    spec.x = flags.x;
    spec.l = flags.defer;
    spec.n1 = flags.defer_periods;
    if (flags.term_given) {
        spec.term = flags.term;
    }
    spec.m = flags.m;
    spec.i = flags.i;
    spec.j = flags.j;
    spec.force_terminal = flags.force_terminal;
    return spec;
}

QuadratureOptions build_quadrature_options(double oracle_tol) {
    QuadratureOptions options;
    if (oracle_tol > 0.0) {
        options.abs_tol = oracle_tol;
        options.rel_tol = oracle_tol;
    }
    return options;
}

int run_moment(const InputFlags& input, const MomentFlags& flags,
               const OutputFlags& output) {
    const std::vector<Column> columns = parse_assumption_list(flags.assumptions);
    bool wants_law = false;
    for (const Column& column : columns) {
        wants_law = wants_law || column.exact_law;
    }
    const DataSource source = resolve_input(input, wants_law);
    const ProductKind kind = parse_product(flags.product);
    const ProductSpec spec = build_spec(flags);
    const QuadratureOptions options = build_quadrature_options(flags.oracle_tol);
    const double law_tol = flags.oracle_tol > 0.0 ? flags.oracle_tol : 1e-12;

    std::vector<std::string> row;
    for (const Column& column : columns) {
        row.push_back(format_value(
            evaluate_cell(source, column, kind, spec, options, law_tol),
            output.precision));
    }
    if (columns.size() == 1 && output.format != "json") {
        std::printf("%s\n", row[0].c_str());
        return 0;
    }
    emit_grid("", {}, columns, {row}, output.format);
    return 0;
}

// ============================================================================
// table subcommand: preset grids over the standard benchmark configurations.
// ============================================================================

struct PresetRow {
    const char* label;
    ProductKind kind;
    int m;
};

constexpr PresetRow annual_rows[] = {
    {"insurance m=1", ProductKind::TermInsurance, 1},
    {"insurance m=2", ProductKind::TermInsurance, 2},
    {"lifetime m=1", ProductKind::Lifetime, 1},
    {"lifetime m=2", ProductKind::Lifetime, 2},
    {"increasing-continuous m=1", ProductKind::IncreasingContinuous, 1},
    {"increasing-continuous m=2", ProductKind::IncreasingContinuous, 2},
    {"increasing-annual m=1", ProductKind::IncreasingAnnual, 1},
    {"increasing-annual m=2", ProductKind::IncreasingAnnual, 2},
};

constexpr PresetRow mthly_rows[] = {
    {"mthly-insurance m=1", ProductKind::MthlyInsurance, 1},
    {"mthly-insurance m=2", ProductKind::MthlyInsurance, 2},
    {"mthly-increasing m=1", ProductKind::MthlyIncreasing, 1},
    {"mthly-increasing m=2", ProductKind::MthlyIncreasing, 2},
};

struct TableFlags {
    std::string preset;
    double i = 0.03;
    double oracle_tol = 0.0;
};

int run_table(const InputFlags& input, const TableFlags& flags,
              const OutputFlags& output) {
    const bool window = flags.preset == "window" ||
                        flags.preset == "window-monthly";
    const bool monthly = flags.preset == "window-monthly" ||
                         flags.preset == "whole-life-monthly";
    if (!window && flags.preset != "whole-life" &&
        flags.preset != "whole-life-monthly") {
        throw UsageError("unknown preset `" + flags.preset +
                         "`; expected window, window-monthly, whole-life or "
                         "whole-life-monthly");
    }

    DataSource source;
    ProductSpec spec;
    spec.i = flags.i;
    spec.j = monthly ? 12 : 1;
    std::vector<Column> columns;
    if (window) {
        if (input.csv_path.empty()) {
            throw UsageError("preset `" + flags.preset +
                             "` reads a tabulated window: provide --input CSV");
        }
        source = resolve_input(input, false);
        spec.x = 50;
        spec.l = 2;
        spec.term = 7;
        columns = parse_assumption_list("UDD,C,B");
    } else {
        if (!input.csv_path.empty()) {
            throw UsageError("preset `" + flags.preset +
                             "` uses the parametric law; drop --input or use "
                             "a window preset");
        }
        source = resolve_input(input, true);
        spec.x = 0;
        spec.l = 1;
        columns = parse_assumption_list("UDD,C,B,G");
    }

    const QuadratureOptions options = build_quadrature_options(flags.oracle_tol);
    const double law_tol = flags.oracle_tol > 0.0 ? flags.oracle_tol : 1e-12;

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;
    for (const PresetRow& row : monthly ? std::vector<PresetRow>(std::begin(mthly_rows), std::end(mthly_rows))
                                        : std::vector<PresetRow>(std::begin(annual_rows), std::end(annual_rows))) {
        spec.m = row.m;
        labels.emplace_back(row.label);
        std::vector<std::string> line;
        for (const Column& column : columns) {
            line.push_back(format_value(
                evaluate_cell(source, column, row.kind, spec, options, law_tol),
                output.precision));
        }
        cells.push_back(std::move(line));
    }
    emit_grid("contract", labels, columns, cells, output.format);
    return 0;
}

// ============================================================================
// plotdata subcommand: (t, value) series.
// ============================================================================

struct PlotFlags {
    std::string which;
    std::vector<double> knots = {1.0, 0.8, 0.7, 0.5, 0.2};
    double step = 0.01;
    double i = 0.03;
    double oracle_tol = 0.0;
};

int run_plotdata(const InputFlags& input, const PlotFlags& flags,
                 const OutputFlags& output) {
    if (flags.step <= 0.0) {
        throw UsageError("--step must be positive");
    }
    const int precision = output.precision;

    if (flags.which == "interp" || flags.which == "density") {
        std::vector<double> survivors = flags.knots;
        for (double& value : survivors) {
            value *= input.radix;
        }
        const LifeTable table(0, std::move(survivors));
        const double span = static_cast<double>(table.size() - 1);
        const bool include_end = flags.which == "interp";
        std::printf("t,UDD,C,B\n");
        for (int idx = 0;; ++idx) {
            const double t = idx * flags.step;
            if (t > span + 1e-12 || (!include_end && t >= span - 1e-12)) {
                break;
            }
            const double clamped = std::min(t, span);
            double values[3];
            int column = 0;
            for (const Assumption assumption :
                 {Assumption::UDD, Assumption::ConstantForce,
                  Assumption::Balducci}) {
                values[column++] =
                    flags.which == "interp"
                        ? survival_fraction(table, assumption, 0, clamped)
                        : density(table, assumption, 0, clamped);
            }
            std::printf("%s,%s,%s,%s\n", format_value(clamped, precision).c_str(),
                        format_value(values[0], precision).c_str(),
                        format_value(values[1], precision).c_str(),
                        format_value(values[2], precision).c_str());
        }
        return 0;
    }

    if (flags.which == "gompertz_s" || flags.which == "gompertz_pmf") {
        const GompertzParams params{input.alpha, input.beta};
        if (flags.which == "gompertz_s") {
            std::printf("x,s\n");
            for (int idx = 0;; ++idx) {
                const double x = idx * flags.step;
                if (x > input.max_age + 1e-12) {
                    break;
                }
                std::printf("%s,%s\n", format_value(x, precision).c_str(),
                            format_value(survival(params, x), precision).c_str());
            }
        } else {
            std::printf("k,pmf\n");
            for (int k = 0; k < input.max_age; ++k) {
                const double mass =
                    survival(params, k) - survival(params, k + 1);
                std::printf("%d,%s\n", k,
                            format_value(mass, precision).c_str());
            }
        }
        return 0;
    }

    if (flags.which == "premium_by_age") {
        if (input.csv_path.empty()) {
            throw UsageError("premium_by_age reads a tabulated life table: "
                             "provide --input CSV");
        }
        const DataSource source = resolve_input(input, false);
        const QuadratureOptions options =
            build_quadrature_options(flags.oracle_tol);
        ProductSpec spec;
        spec.l = 2;
        spec.term = 7;
        spec.m = 1;
        spec.i = flags.i;
        std::printf("x,UDD,C,B\n");
        for (int x = 18; x <= 70; ++x) {
            spec.x = x;
            const double udd =
                oracle_product_moment(*source.table, Assumption::UDD,
                                      ProductKind::TermInsurance, spec, options)
                    .value;
            const double cf =
                closed_form_moment(*source.table, ProductKind::TermInsurance,
                                   spec)
                    .value;
            const double bal =
                oracle_product_moment(*source.table, Assumption::Balducci,
                                      ProductKind::TermInsurance, spec, options)
                    .value;
            std::printf("%d,%s,%s,%s\n", x, format_value(udd, precision).c_str(),
                        format_value(cf, precision).c_str(),
                        format_value(bal, precision).c_str());
        }
        return 0;
    }

    throw UsageError("unknown series `" + flags.which +
                     "`; expected interp, density, gompertz_s, gompertz_pmf "
                     "or premium_by_age");
}

// ============================================================================
// JSON config: keys are long flag names without the leading dashes. Values
// from the file are injected as flags unless the same flag already appears
// on the command line, so explicit flags always win.
// ============================================================================

bool flag_present(const std::vector<std::string>& args,
                  const std::string& name) {
    const std::string plain = "--" + name;
    const std::string assigned = plain + "=";
    for (const std::string& arg : args) {
        if (arg == plain || arg.rfind(assigned, 0) == 0) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    std::string path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            path = args[k + 1];
        } else if (args[k].rfind("--config=", 0) == 0) {
            path = args[k].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }

    std::ifstream stream(path);
    if (!stream) {
        throw UsageError("cannot open config file `" + path + "`");
    }
    nlohmann::json config;
    try {
        stream >> config;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file `" + path + "` is not valid JSON: " +
                         e.what());
    }
    if (!config.is_object()) {
        throw UsageError("config file `" + path +
                         "` must hold a JSON object of flag values");
    }

    for (const auto& [key, value] : config.items()) {
        if (flag_present(args, key)) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back("--" + key);
            }
        } else if (value.is_string()) {
            args.push_back("--" + key);
            args.push_back(value.get<std::string>());
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& element : value) {
                if (!joined.empty()) {
                    joined += ",";
                }
                joined += element.is_string() ? element.get<std::string>()
                                              : element.dump();
            }
            args.push_back("--" + key);
            args.push_back(joined);
        } else {
            args.push_back("--" + key);
            args.push_back(value.dump());
        }
    }
    return args;
}

// ============================================================================
// Flag wiring.
// ============================================================================

void add_input_flags(CLI::App* cmd, InputFlags& input) {
    cmd->add_option("--input", input.csv_path,
                    "life-table CSV with header age,lx");
    cmd->add_option("--alpha", input.alpha,
                    "parametric law shape (per-year growth of the force)");
    cmd->add_option("--beta", input.beta,
                    "parametric law scale (force at age 0)");
    cmd->add_option("--max-age", input.max_age,
                    "last age when discretizing the parametric law")
        ->check(CLI::Range(1, 100000));
    cmd->add_option("--radix", input.radix,
                    "survivor count at the base age of a discretized table")
        ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, OutputFlags& output) {
    cmd->add_option("--format", output.format, "csv, markdown or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    cmd->add_option("--precision", output.precision,
                    "decimal places for every emitted number")
        ->check(CLI::Range(1, 15));
}

void add_config_flag(CLI::App* cmd, std::string& config_path) {
    // The value itself was consumed by the pre-parse scan; the option only
    // exists so the flag is documented and accepted.
    cmd->add_option("--config", config_path,
                    "JSON file of flag defaults; explicit flags override it");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moments of life-insurance present values over discrete "
                 "life tables"};
    app.require_subcommand(1);

    InputFlags input;
    OutputFlags output;
    MomentFlags moment_flags;
    TableFlags table_flags;
    PlotFlags plot_flags;
    std::string config_path;

    CLI::App* moment = app.add_subcommand(
        "moment", "one contract moment per requested assumption");
    add_input_flags(moment, input);
    add_output_flags(moment, output);
    add_config_flag(moment, config_path);
    moment->add_option("--product", moment_flags.product,
                       "term-insurance, lifetime, increasing-continuous, "
                       "increasing-annual, decreasing-annual, "
                       "mthly-insurance or mthly-increasing")
        ->required();
    moment->add_option("--x", moment_flags.x, "issue age");
    moment->add_option("--defer", moment_flags.defer,
                       "deferment in whole years");
    auto* defer_periods =
        moment->add_option("--defer-periods", moment_flags.defer_periods,
                           "additional deferment in 1/j sub-periods");
    auto* term_option =
        moment->add_option("--term", moment_flags.term, "coverage term in years");
    auto* whole_life =
        moment->add_flag("--whole-life", moment_flags.whole_life,
                         "cover until the terminal age (default when --term "
                         "is absent)");
    term_option->excludes(whole_life);
    moment->add_option("--m", moment_flags.m, "moment order");
    moment->add_option("--i", moment_flags.i, "annual effective interest rate");
    auto* j_option =
        moment->add_option("--j", moment_flags.j, "periods per year");
    defer_periods->needs(j_option);
    moment->add_flag("--force-terminal", moment_flags.force_terminal,
                     "treat the year after the last tabulated age as certain "
                     "death for whole-life contracts");
    moment->add_option("--assumption", moment_flags.assumptions,
                       "comma list drawn from UDD,C,B,G");
    moment->add_option("--oracle-tol", moment_flags.oracle_tol,
                       "per-year quadrature error target for UDD/B (and G)")
        ->check(CLI::PositiveNumber);

    CLI::App* table = app.add_subcommand(
        "table", "benchmark grid over all products and assumptions");
    add_input_flags(table, input);
    add_output_flags(table, output);
    add_config_flag(table, config_path);
    table->add_option("--preset", table_flags.preset,
                      "window (ages 50+, 2-year deferred 7-year contracts), "
                      "window-monthly (same with j=12), whole-life "
                      "(parametric law from age 0), whole-life-monthly")
        ->required();
    table->add_option("--i", table_flags.i, "annual effective interest rate");
    table->add_option("--oracle-tol", table_flags.oracle_tol,
                      "per-year quadrature error target for UDD/B (and G)")
        ->check(CLI::PositiveNumber);

    CLI::App* plotdata = app.add_subcommand(
        "plotdata", "point series for plots: interpolated survival, lifetime "
                    "densities, parametric curves, premiums by age");
    add_input_flags(plotdata, input);
    add_output_flags(plotdata, output);
    add_config_flag(plotdata, config_path);
    plotdata->add_option("--which", plot_flags.which,
                         "interp, density, gompertz_s, gompertz_pmf or "
                         "premium_by_age")
        ->required();
    plotdata->add_option("--knots", plot_flags.knots,
                         "comma-separated survival values at ages 0,1,2,...")
        ->delimiter(',');
    plotdata->add_option("--step", plot_flags.step, "grid step in years");
    plotdata->add_option("--i", plot_flags.i,
                         "interest rate for premium_by_age");
    plotdata->add_option("--oracle-tol", plot_flags.oracle_tol,
                         "per-year quadrature error target for UDD/B")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config_file(std::move(args));

        std::vector<const char*> pointers;
        pointers.push_back(argv[0]);
        for (const std::string& arg : args) {
            pointers.push_back(arg.c_str());
        }
        try {
            app.parse(static_cast<int>(pointers.size()), pointers.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        CLI::App* active = moment->parsed()
                               ? moment
                               : (table->parsed() ? table : plotdata);
        input.alpha_given = active->count("--alpha") > 0;
        input.beta_given = active->count("--beta") > 0;

        if (moment->parsed()) {
            moment_flags.term_given = moment->count("--term") > 0;
            return run_moment(input, moment_flags, output);
        }
        if (table->parsed()) {
            return run_table(input, table_flags, output);
        }
        return run_plotdata(input, plot_flags, output);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
