#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <subexp/errors.hpp>
#include <subexp/model.hpp>
#include <subexp/numeric.hpp>
#include <subexp/spectrum.hpp>

namespace subexp::cli
{

enum exit_status : int
{
    exit_success = 0,
    exit_usage = 2,
    exit_model = 3,
    exit_verification = 4,
};

// Bad flag values or malformed grids.
class usage_error : public subexp::error
{
public:
    using subexp::error::error;
};

struct model_selection
{
    std::string label;
    spectral_data spectrum;
    std::optional<model_spec> model; // present when exact counting is possible
    bool custom = false;
};

model_selection select_preset(const std::string &name, std::optional<std::uint64_t> a = {},
                              std::optional<std::uint64_t> b = {});

// Keys: poles [{rho, h}], A0, h0, d_neg, optional theta, weights, weight_rule, base, name.
// weight_rule is a list of polynomial coefficients c_0, c_1, ... with b_j = sum c_i j^i.
model_selection load_custom_model(const nlohmann::json &document);
model_selection load_custom_model_file(const std::string &path);

// start:stop:step
std::vector<std::uint64_t> parse_grid(const std::string &text);
// start:stop:factor, rounded to the nearest integer, duplicates dropped
std::vector<std::uint64_t> parse_geom(const std::string &text);

struct comparison_row
{
    std::uint64_t n = 0;
    std::optional<Real> exact_log;
    std::optional<Real> pred_khintchine_log;
    std::optional<Real> pred_explicit_log;
    std::optional<Real> ratio_khintchine;
    std::optional<Real> ratio_explicit;
};

inline constexpr const char *csv_header = "n,exact_log,pred_khintchine_log,pred_explicit_log,ratio_khintchine,ratio_explicit";

// Exact counts are computed up to exact_order when the selection carries a model.
// The explicit column is left empty for ineligible spectra.
std::vector<comparison_row> compare_rows(const model_selection &selection, const std::vector<std::uint64_t> &grid,
                                         std::uint64_t exact_order);

void write_csv(std::ostream &out, const std::vector<comparison_row> &rows, bool log10 = false);
std::vector<comparison_row> read_csv(std::istream &in);

struct check_result
{
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<check_result> verify_constants();

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace subexp::cli
