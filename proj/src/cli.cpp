#include <subexp/cli.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <subexp/asymptotics.hpp>
#include <subexp/errors.hpp>
#include <subexp/exact.hpp>
#include <subexp/khintchine.hpp>
#include <subexp/specfun.hpp>

namespace subexp::cli
{

namespace
{

constexpr std::uint64_t large_order_warning = 20000;

std::uint64_t parse_count(const std::string &text, const std::string &what)
{
    std::uint64_t value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw usage_error(fmt::format("{}: '{}' is not a nonnegative integer", what, text));
    }
    return value;
}

std::vector<std::string> split_colon(const std::string &text, const std::string &what)
{
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw usage_error(fmt::format("{}: expected start:stop:{}", what, what == "--grid" ? "step" : "factor"));
    }
    return parts;
}

Rational read_rational(const nlohmann::json &value, const std::string &where)
{
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number()) {
        return parse_rational(fmt::format("{:.17g}", value.get<double>()));
    }
    throw schema_error(fmt::format("{}: expected a number", where));
}

std::vector<Rational> read_rational_array(const nlohmann::json &value, const std::string &where)
{
    if (!value.is_array() || value.empty()) {
        throw schema_error(fmt::format("custom spectrum: '{}' must be a non-empty array", where));
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(read_rational(value[i], fmt::format("{}[{}]", where, i)));
    }
    return out;
}

std::string field(const std::optional<Real> &value, bool log10)
{
    if (!value) {
        return "";
    }
    return format_sig(log10 ? Real(*value / log(Real(10))) : *value);
}

std::string ratio_field(const std::optional<Real> &value)
{
    return value ? format_sig(*value) : "";
}

std::optional<Real> parse_field(const std::string &text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    try {
        return Real(text);
    } catch (const std::exception &) {
        throw schema_error(fmt::format("csv: '{}' is not a number", text));
    }
}

std::string decimal_text(const Real &log_value)
{
    const decimal_form d = to_decimal(log_value);
    return fmt::format("{:.11f}e{}", d.mantissa.convert_to<double>(), d.exponent10);
}

check_result close_to(std::string name, const Real &got, const Real &want, double tol)
{
    const Real scale = std::max(Real(1), Real(abs(want)));
    const Real err = abs(got - want) / scale;
    return {std::move(name), err <= Real(tol), fmt::format("got {} want {}", got.str(20), want.str(20))};
}

struct shared_options
{
    std::string model = "standard";
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> b;
    std::string spec_path;
    std::optional<unsigned> precision;
};

void add_model_options(CLI::App *sub, shared_options &opts)
{
    sub->add_option("--model", opts.model, "standard, roots, congruent or custom")
        ->check(CLI::IsMember({"standard", "roots", "congruent", "custom"}));
    sub->add_option("--a", opts.a, "modulus for the congruent model");
    sub->add_option("--b", opts.b, "residue for the congruent model");
    sub->add_option("--spec", opts.spec_path, "JSON file for the custom model");
    sub->add_option("--precision", opts.precision, "working precision in decimal digits")
        ->check(CLI::Range(16u, 1000u));
}

model_selection select(const shared_options &opts)
{
    if (opts.model == "custom") {
        if (opts.spec_path.empty()) {
            throw usage_error("--model custom needs --spec FILE");
        }
        return load_custom_model_file(opts.spec_path);
    }
    if (!opts.spec_path.empty()) {
        throw usage_error("--spec is only valid with --model custom");
    }
    if (opts.model != "congruent" && (opts.a || opts.b)) {
        throw usage_error("--a and --b are only valid with --model congruent");
    }
    return select_preset(opts.model, opts.a, opts.b);
}

const exact_series &series_for(const model_selection &selection, std::uint64_t order,
                               std::optional<exact_series> &cache, std::ostream &err)
{
    if (!selection.model) {
        throw custom_model_error(fmt::format("{}: no weights given, exact counting unavailable", selection.label));
    }
    if (order > large_order_warning) {
        fmt::print(err, "warning: N={} exceeds {}; exact counting is quadratic in N\n", order, large_order_warning);
    }
    cache = exact_coefficients(*selection.model, order);
    return *cache;
}

void print_estimate(std::ostream &out, const log_estimate &le, bool log10)
{
    const Real shown = log10 ? Real(le.log_value / log(Real(10))) : le.log_value;
    fmt::print(out, "{}: {}={} decimal={}\n", to_string(le.formula), log10 ? "log10" : "log", format_sig(shown),
               decimal_text(le.log_value));
    fmt::print(out, "  prefactor_log={} power_log={} exponent_sum={} constant_terms={}\n",
               format_sig(le.terms.prefactor_log), format_sig(le.terms.power_log),
               format_sig(le.terms.exponent_sum), format_sig(le.terms.constant_terms));
    if (!le.remainder_converged) {
        fmt::print(out, "  note: remainder series truncated before reaching tolerance\n");
    }
}

int cmd_spectrum(const shared_options &opts, bool require_eligible, std::ostream &out, std::ostream &err)
{
    const model_selection selection = select(opts);
    const spectral_data &sd = selection.spectrum;
    const spectrum_report report = validate_spectrum(sd);

    fmt::print(out, "model: {}\n", selection.label);
    for (std::size_t l = 0; l < sd.poles.size(); ++l) {
        const pole &p = sd.poles[l];
        fmt::print(out, "pole {}: rho={} h={}", l + 1, format_sig(p.rho), format_sig(p.h));
        if (p.dirichlet_residue) {
            fmt::print(out, " A={}", format_sig(*p.dirichlet_residue));
        }
        fmt::print(out, "\n");
    }
    fmt::print(out, "A0={}\n", format_sig(sd.A0));
    fmt::print(out, "h0={}\n", format_sig(sd.h0));
    if (sd.theta) {
        fmt::print(out, "theta={}\n", format_sig(*sd.theta));
    }
    for (std::size_t l = 1; l <= sd.d_neg.size(); ++l) {
        fmt::print(out, "D(-{})={}\n", l, format_sig(sd.d_minus(l)));
    }
    if (report.gap) {
        fmt::print(out, "gap={}\n", format_sig(*report.gap));
    }
    fmt::print(out, "classification={}\n", to_string(report.regime));
    for (const auto &problem : report.problems) {
        fmt::print(out, "problem: {}\n", problem);
    }
    if (require_eligible && !report.eligible()) {
        fmt::print(err, "error: {} is not eligible for the explicit formula\n", selection.label);
        return exit_model;
    }
    return exit_success;
}

int cmd_predict(const shared_options &opts, std::uint64_t n, const std::string &formula, bool log10,
                std::ostream &out)
{
    if (n == 0) {
        throw usage_error("--n must be at least 1");
    }
    const model_selection selection = select(opts);
    fmt::print(out, "model: {}\nn: {}\n", selection.label, n);
    std::vector<log_estimate> estimates;
    if (formula == "khintchine" || formula == "both") {
        estimates.push_back(log_estimate_khintchine(selection.spectrum, n));
    }
    if (formula == "explicit" || formula == "both") {
        estimates.push_back(log_estimate_explicit(selection.spectrum, n));
    }
    for (const auto &le : estimates) {
        print_estimate(out, le, log10);
    }
    if (estimates.size() == 2) {
        fmt::print(out, "difference (explicit - khintchine): {}\n",
                   format_sig(estimates[1].log_value - estimates[0].log_value));
    }
    return exit_success;
}

int cmd_exact(const shared_options &opts, std::uint64_t order, bool oracle, std::ostream &out, std::ostream &err)
{
    const model_selection selection = select(opts);
    std::optional<exact_series> cache;
    const exact_series &series = series_for(selection, order, cache, err);
    for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
        fmt::print(out, "{} {}\n", n, series.coeffs[n].str());
    }
    if (!oracle) {
        return exit_success;
    }

    exact_series reference;
    std::string oracle_name;
    if (selection.model->kind() == model_kind::standard) {
        reference = pentagonal_oracle(order);
        oracle_name = "pentagonal";
    } else {
        try {
            reference = product_dp(*selection.model, order);
        } catch (const unsupported_model_error &) {
            throw usage_error(fmt::format("--oracle: no independent oracle for {}", selection.label));
        }
        oracle_name = "product";
    }
    for (std::size_t n = 0; n <= order; ++n) {
        if (reference.coeffs[n] != series.coeffs[n]) {
            fmt::print(err, "oracle mismatch at n={}: {} vs {}\n", n, series.coeffs[n].str(),
                       reference.coeffs[n].str());
            return exit_verification;
        }
    }
    fmt::print(err, "{} oracle agrees for n <= {}\n", oracle_name, order);
    return exit_success;
}

int cmd_compare(const shared_options &opts, std::optional<std::uint64_t> order, const std::string &grid_text,
                const std::string &geom_text, bool log10, const std::string &out_path, std::ostream &out,
                std::ostream &err)
{
    std::vector<std::uint64_t> grid;
    if (!grid_text.empty()) {
        grid = parse_grid(grid_text);
    }
    if (!geom_text.empty()) {
        const auto more = parse_geom(geom_text);
        grid.insert(grid.end(), more.begin(), more.end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const model_selection selection = select(opts);
    std::uint64_t exact_order = 0;
    if (selection.model && !grid.empty()) {
        exact_order = order.value_or(grid.back());
        if (exact_order > large_order_warning) {
            fmt::print(err, "warning: N={} exceeds {}; exact counting is quadratic in N\n", exact_order,
                       large_order_warning);
        }
    }
    const auto rows = compare_rows(selection, grid, exact_order);
    if (out_path.empty()) {
        write_csv(out, rows, log10);
        return exit_success;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw usage_error(fmt::format("cannot write '{}'", out_path));
    }
    write_csv(file, rows, log10);
    return exit_success;
}

int cmd_verify(std::ostream &out)
{
    bool all_ok = true;
    for (const auto &check : verify_constants()) {
        all_ok = all_ok && check.ok;
        if (check.ok) {
            fmt::print(out, "{} OK\n", check.name);
        } else {
            fmt::print(out, "{} FAIL ({})\n", check.name, check.detail);
        }
    }
    fmt::print(out, "{}\n", all_ok ? "all checks passed" : "some checks failed");
    return all_ok ? exit_success : exit_verification;
}

int cmd_llt(const shared_options &opts, std::uint64_t n_max, std::uint64_t q_max, std::ostream &out)
{
    const model_selection selection = select(opts);
    if (!selection.model) {
        throw custom_model_error(fmt::format("{}: no weights given", selection.label));
    }
    fmt::print(out, "q,n,count,ratio\n");
    for (const auto &row : llt_condition_report(*selection.model, n_max, q_max)) {
        fmt::print(out, "{},{},{},{}\n", row.q, row.n, row.count.str(), format_sig(row.ratio));
    }
    return exit_success;
}

} // namespace

model_selection select_preset(const std::string &name, std::optional<std::uint64_t> a,
                              std::optional<std::uint64_t> b)
{
    model_selection selection;
    if (name == "standard") {
        selection.model = make_standard();
    } else if (name == "roots") {
        selection.model = make_roots();
    } else if (name == "congruent") {
        if (!a || !b) {
            throw usage_error("--model congruent needs --a and --b");
        }
        selection.model = make_congruent(*a, *b);
    } else {
        throw usage_error(fmt::format("unknown preset '{}'", name));
    }
    selection.label = selection.model->label();
    selection.spectrum = derive_spectrum(*selection.model);
    return selection;
}

model_selection load_custom_model(const nlohmann::json &document)
{
    model_selection selection;
    selection.spectrum = load_custom_spectrum(document);
    selection.custom = true;
    selection.label = document.contains("name") && document.at("name").is_string()
                          ? document.at("name").get<std::string>()
                          : "custom";

    base_function base;
    if (document.contains("base")) {
        const auto &value = document.at("base");
        const auto kind = value.is_string() ? parse_base_kind(value.get<std::string>()) : std::nullopt;
        if (!kind) {
            throw schema_error("custom spectrum: 'base' must be multiset, selection or exponential");
        }
        base = base_function(*kind);
    }

    const bool has_table = document.contains("weights");
    const bool has_rule = document.contains("weight_rule");
    if (has_table && has_rule) {
        throw schema_error("custom spectrum: give either 'weights' or 'weight_rule', not both");
    }
    if (has_table) {
        selection.model = make_weight_table(read_rational_array(document.at("weights"), "weights"), base);
    } else if (has_rule) {
        const auto coeffs = read_rational_array(document.at("weight_rule"), "weight_rule");
        auto rule = [coeffs](std::uint64_t j) {
            Rational value = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                value = value * Rational(j) + *it;
            }
            return value;
        };
        selection.model = model_spec(model_kind::custom, base, rule, [](std::uint64_t) { return Rational(1); },
                                     selection.label);
    }
    return selection;
}

model_selection load_custom_model_file(const std::string &path)
{
    std::ifstream file(path);
    if (!file) {
        throw usage_error(fmt::format("cannot read '{}'", path));
    }
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception &e) {
        throw schema_error(fmt::format("{}: {}", path, e.what()));
    }
    return load_custom_model(document);
}

std::vector<std::uint64_t> parse_grid(const std::string &text)
{
    const auto parts = split_colon(text, "--grid");
    const std::uint64_t start = parse_count(parts[0], "--grid start");
    const std::uint64_t stop = parse_count(parts[1], "--grid stop");
    const std::uint64_t step = parse_count(parts[2], "--grid step");
    if (start == 0 || step == 0) {
        throw usage_error("--grid: start and step must be positive");
    }
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = start; n <= stop; n += step) {
        grid.push_back(n);
    }
    return grid;
}

std::vector<std::uint64_t> parse_geom(const std::string &text)
{
    const auto parts = split_colon(text, "--geom");
    const std::uint64_t start = parse_count(parts[0], "--geom start");
    const std::uint64_t stop = parse_count(parts[1], "--geom stop");
    Rational factor;
    try {
        factor = parse_rational(parts[2]);
    } catch (const error &) {
        throw usage_error(fmt::format("--geom factor: '{}' is not a number", parts[2]));
    }
    if (start == 0 || factor <= 1) {
        throw usage_error("--geom: start must be positive and factor greater than 1");
    }
    std::vector<std::uint64_t> grid;
    const Rational half(1, 2);
    for (Rational x(start); x <= Rational(stop); x *= factor) {
        const Rational shifted = x + half;
        const Integer rounded = numerator(shifted) / denominator(shifted);
        const auto n = rounded.convert_to<std::uint64_t>();
        if (n <= stop && (grid.empty() || grid.back() != n)) {
            grid.push_back(n);
        }
    }
    return grid;
}

std::vector<comparison_row> compare_rows(const model_selection &selection, const std::vector<std::uint64_t> &grid,
                                         std::uint64_t exact_order)
{
    std::optional<exact_series> series;
    if (selection.model && exact_order > 0) {
        series = exact_coefficients(*selection.model, exact_order);
    }
    const bool eligible = validate_spectrum(selection.spectrum).eligible();

    std::vector<comparison_row> rows;
    for (const std::uint64_t n : grid) {
        comparison_row row;
        row.n = n;
        if (series && n <= series->order() && series->coeffs[n] > 0) {
            row.exact_log = series->log_coeff(n);
        }
        row.pred_khintchine_log = log_estimate_khintchine(selection.spectrum, n).log_value;
        if (eligible) {
            row.pred_explicit_log = log_estimate_explicit(selection.spectrum, n).log_value;
        }
        if (row.exact_log) {
            row.ratio_khintchine = exp(*row.exact_log - *row.pred_khintchine_log);
            if (row.pred_explicit_log) {
                row.ratio_explicit = exp(*row.exact_log - *row.pred_explicit_log);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<comparison_row> &rows, bool log10)
{
    out << csv_header << '\n';
    for (const auto &row : rows) {
        out << row.n << ',' << field(row.exact_log, log10) << ',' << field(row.pred_khintchine_log, log10) << ','
            << field(row.pred_explicit_log, log10) << ',' << ratio_field(row.ratio_khintchine) << ','
            << ratio_field(row.ratio_explicit) << '\n';
    }
}

std::vector<comparison_row> read_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw schema_error("csv: missing or unexpected header");
    }
    std::vector<comparison_row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::size_t begin = 0;
        while (true) {
            const std::size_t comma = line.find(',', begin);
            cells.push_back(line.substr(begin, comma - begin));
            if (comma == std::string::npos) {
                break;
            }
            begin = comma + 1;
        }
        if (cells.size() != 6) {
            throw schema_error(fmt::format("csv: expected 6 columns in '{}'", line));
        }
        comparison_row row;
        try {
            row.n = parse_count(cells[0], "csv n");
        } catch (const usage_error &e) {
            throw schema_error(e.what());
        }
        row.exact_log = parse_field(cells[1]);
        row.pred_khintchine_log = parse_field(cells[2]);
        row.pred_explicit_log = parse_field(cells[3]);
        row.ratio_khintchine = parse_field(cells[4]);
        row.ratio_explicit = parse_field(cells[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<check_result> verify_constants()
{
    using namespace specfun;
    const Real p = pi();
    const Real half_log_2pi = log(2 * p) / 2;
    const Real zeta2 = riemann_zeta(Real(2));
    const Real zeta3 = riemann_zeta(Real(3));
    constexpr double tol = 1e-12;

    std::vector<check_result> checks;
    checks.push_back(close_to("zeta(2)=pi^2/6", zeta2, p * p / 6, tol));
    checks.push_back(close_to("zeta(0)=-1/2", riemann_zeta(Real(0)), Real(-0.5), tol));
    checks.push_back(close_to("zeta(-1)=-1/12", riemann_zeta(Real(-1)), Real(-1) / 12, tol));
    checks.push_back(close_to("zeta'(0)=-1/2 log 2pi", riemann_zeta_deriv(Real(0)), -half_log_2pi, tol));

    bool hurwitz_ok = true;
    std::string hurwitz_detail;
    for (std::uint64_t a = 1; a <= 10; ++a) {
        for (std::uint64_t b = 1; b <= a; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const Real q = Real(b) / a;
            const auto c = close_to("", hurwitz_zeta(Real(0), q), Real(0.5) - q, tol);
            if (!c.ok && hurwitz_ok) {
                hurwitz_ok = false;
                hurwitz_detail = fmt::format("a={} b={}: {}", a, b, c.detail);
            }
        }
    }
    checks.push_back({"zeta(0,b/a)=1/2-b/a for a<=10", hurwitz_ok, hurwitz_detail});

    const spectral_data standard = derive_spectrum(make_standard());
    checks.push_back(close_to("standard: h_1=pi^2/6", standard.top().h, p * p / 6, tol));
    checks.push_back(close_to("standard: A0=-1/2", standard.A0, Real(-0.5), tol));
    checks.push_back(close_to("standard: h0=-1/2 log 2pi", standard.h0, -half_log_2pi, tol));
    checks.push_back(close_to("standard: Q=h0", q_constant(standard), standard.h0, tol));

    const model_spec roots_model = make_roots();
    checks.push_back({"roots: b_5=11", roots_model.weight(5) == 11, roots_model.weight(5).str()});
    const spectral_data roots = derive_spectrum(roots_model);
    checks.push_back(close_to("roots: A0=-2/3", roots.A0, Real(-2) / 3, tol));
    checks.push_back(close_to("roots: h_1=zeta(2)", roots.poles.at(0).h, zeta2, tol));
    checks.push_back(close_to("roots: h_2=2 zeta(3)", roots.poles.at(1).h, 2 * zeta3, tol));
    checks.push_back(close_to("roots: h0=1/6-2 log A-1/2 log 2pi", roots.h0,
                              Real(1) / 6 - 2 * log_glaisher() - half_log_2pi, tol));
    const spectrum_report report = validate_spectrum(roots);
    checks.push_back({"roots: critical case 2 rho_1 - rho_2 = 0", report.regime == pole_regime::critical,
                      to_string(report.regime)});
    checks.push_back(close_to("roots: kappa=-8/9", kappa(roots), Real(-8) / 9, tol));
    checks.push_back(close_to("roots: Q=h0-zeta(2)^2/(24 zeta(3))", q_constant(roots),
                              roots.h0 - zeta2 * zeta2 / (24 * zeta3), tol));

    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
        const spectral_data sd = derive_spectrum(make_congruent(a, b));
        const std::string label = fmt::format("congruent({},{})", a, b);
        checks.push_back(close_to(label + ": A0=1/2-b/a", sd.A0, Real(0.5) - Real(b) / a, tol));
        checks.push_back(close_to(label + ": kappa=-(a+b)/(2a)", kappa(sd), -Real(a + b) / (2 * a), tol));
    }
    const spectral_data odd = derive_spectrum(make_congruent(2, 1));
    const Real n(1000);
    checks.push_back(close_to("congruent(2,1): exponent π√(2n/(3a))",
                              log_estimate_explicit(odd, 1000).terms.leading_exponent, p * sqrt(2 * n / 6), tol));

    bool hr_ok = true;
    std::string hr_detail;
    for (std::uint64_t m : {10u, 100u, 1000u}) {
        const Real nn(m);
        const Real want = -log(4 * sqrt(Real(3))) - log(nn) + p * sqrt(2 * nn / 3);
        const Real got = log_estimate_explicit(standard, m).log_value;
        if (abs(got - want) > Real(1e-10)) {
            hr_ok = false;
            hr_detail = fmt::format("n={}: got {} want {}", m, got.str(20), want.str(20));
        }
    }
    checks.push_back({"standard: explicit formula = Hardy–Ramanujan leading term", hr_ok, hr_detail});
    return checks;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact counts and asymptotic estimates for multiplicative generating functions", "subexp"};
    app.require_subcommand(1);

    shared_options opts;
    bool require_eligible = false;
    bool oracle = false;
    bool log10 = false;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> order;
    std::uint64_t q_max = 8;
    std::string formula = "both";
    std::string grid_text;
    std::string geom_text;
    std::string out_path;

    auto *spectrum = app.add_subcommand("spectrum", "print spectral data and the pole classification");
    add_model_options(spectrum, opts);
    spectrum->add_flag("--require-eligible", require_eligible, "fail unless the explicit formula applies");

    auto *predict = app.add_subcommand("predict", "asymptotic estimate of log c_n");
    add_model_options(predict, opts);
    predict->add_option("--n", n, "index n")->required();
    predict->add_option("--formula", formula, "khintchine, explicit or both")
        ->check(CLI::IsMember({"khintchine", "explicit", "both"}));
    predict->add_flag("--log10", log10, "print base-10 logarithms");

    auto *exact = app.add_subcommand("exact", "exact coefficients c_0..c_N");
    add_model_options(exact, opts);
    exact->add_option("--N", order, "truncation order")->required();
    exact->add_flag("--oracle", oracle, "cross-check against an independent algorithm");

    auto *compare = app.add_subcommand("compare", "CSV of exact counts against both estimates");
    add_model_options(compare, opts);
    compare->add_option("--N", order, "exact counting order (default: largest grid point)");
    compare->add_option("--grid", grid_text, "start:stop:step");
    compare->add_option("--geom", geom_text, "start:stop:factor");
    compare->add_flag("--log10", log10, "base-10 logarithms in the log columns");
    compare->add_option("--out", out_path, "write the CSV to a file");

    auto *verify = app.add_subcommand("verify", "check the built-in constants");

    auto *llt = app.add_subcommand("llt", "weight mass off multiples of q against log^2 n");
    add_model_options(llt, opts);
    std::uint64_t n_max = 1024;
    llt->add_option("--n", n_max, "largest n (at least 16)");
    llt->add_option("--q", q_max, "largest modulus q");

    std::vector<std::string> argv_storage{"subexp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &arg : argv_storage) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    try {
        scoped_precision guard(working_precision());
        apply_precision_from_environment();
        if (opts.precision) {
            set_working_precision(*opts.precision);
        }

        if (spectrum->parsed()) {
            return cmd_spectrum(opts, require_eligible, out, err);
        }
        if (predict->parsed()) {
            return cmd_predict(opts, n, formula, log10, out);
        }
        if (exact->parsed()) {
            return cmd_exact(opts, *order, oracle, out, err);
        }
        if (compare->parsed()) {
            return cmd_compare(opts, order, grid_text, geom_text, log10, out_path, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(out);
        }
        if (llt->parsed()) {
            return cmd_llt(opts, n_max, q_max, out);
        }
    } catch (const usage_error &e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    } catch (const error &e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_model;
    }
    return exit_usage;
}

} // namespace subexp::cli
