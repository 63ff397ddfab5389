#include "exsec/sweep.hpp"

#include <cmath>
#include <fstream>

#include "exsec/errors.hpp"
#include "exsec/model.hpp"
#include "exsec/optimize.hpp"
#include "parallel.hpp"
#include "text.hpp"

namespace exsec {

namespace {

void assign_param(MarketParams& params, SweepParam parameter, double value) {
  switch (parameter) {
    case SweepParam::attack_constant:
      params.attack_probability_constant = value;
      break;
    case SweepParam::risk_constant:
      params.risk_exposure_constant = value;
      break;
    case SweepParam::market_volume:
      params.market_volume = value;
      break;
    case SweepParam::fee_sensitive_fraction:
      params.fee_sensitive_fraction = value;
      break;
    default:
      throw domain_error("axis names a decision variable; use the profit sweep");
  }
}

// Substitutes both axis values, then validates once through the constructor
// so that feasibility is judged on the final combination only.
MarketParams cell_market(const MarketParams& base, SweepParam x_param, double x_value,
                         SweepParam y_param, double y_value) {
  MarketParams params = base;
  assign_param(params, x_param, x_value);
  assign_param(params, y_param, y_value);
  return MarketParams(params.market_volume, params.big_exchange_volume, params.big_exchange_fee,
                      params.fee_sensitive_fraction, params.attack_probability_constant,
                      params.risk_exposure_constant);
}

bool is_market_param(SweepParam parameter) {
  return parameter != SweepParam::fee_rate && parameter != SweepParam::investment;
}

SweepGrid make_grid(const SweepAxis& axis_x, const SweepAxis& axis_y, std::string metric_name) {
  SweepGrid grid;
  grid.axis_x = axis_x;
  grid.axis_y = axis_y;
  grid.metric_name = std::move(metric_name);
  grid.values.assign(static_cast<std::size_t>(axis_x.steps) *
                         static_cast<std::size_t>(axis_y.steps),
                     std::nullopt);
  return grid;
}

}  // namespace

const char* sweep_param_name(SweepParam parameter) {
  switch (parameter) {
    case SweepParam::attack_constant: return "alpha_M";
    case SweepParam::risk_constant: return "beta_M";
    case SweepParam::market_volume: return "V_M";
    case SweepParam::fee_sensitive_fraction: return "gamma_BS";
    case SweepParam::fee_rate: return "f_S";
    case SweepParam::investment: return "I";
  }
  throw domain_error("unknown sweep parameter");
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "alpha_M") return SweepParam::attack_constant;
  if (name == "beta_M") return SweepParam::risk_constant;
  if (name == "V_M") return SweepParam::market_volume;
  if (name == "gamma_BS") return SweepParam::fee_sensitive_fraction;
  if (name == "f_S") return SweepParam::fee_rate;
  if (name == "I") return SweepParam::investment;
  throw domain_error("unknown sweep parameter '" + name +
                     "' (expected alpha_M, beta_M, V_M, gamma_BS, f_S or I)");
}

std::vector<double> axis_points(const SweepAxis& axis) {
  if (axis.steps < 2) throw domain_error("axis needs at least 2 steps");
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || !(axis.lo < axis.hi))
    throw domain_error("axis range must satisfy lo < hi");
  if (axis.spacing == AxisSpacing::log && !(axis.lo > 0.0))
    throw domain_error("log spacing requires lo > 0");
  std::vector<double> points(static_cast<std::size_t>(axis.steps));
  points.front() = axis.lo;
  points.back() = axis.hi;
  if (axis.spacing == AxisSpacing::linear) {
    for (int i = 1; i + 1 < axis.steps; ++i)
      points[static_cast<std::size_t>(i)] =
          axis.lo + (axis.hi - axis.lo) * static_cast<double>(i) / (axis.steps - 1);
  } else {
    const double log_lo = std::log(axis.lo);
    const double log_span = std::log(axis.hi) - log_lo;
    for (int i = 1; i + 1 < axis.steps; ++i)
      points[static_cast<std::size_t>(i)] =
          std::exp(log_lo + log_span * static_cast<double>(i) / (axis.steps - 1));
  }
  return points;
}

const std::optional<double>& SweepGrid::at(int ix, int iy) const {
  if (ix < 0 || ix >= axis_x.steps || iy < 0 || iy >= axis_y.steps)
    throw domain_error("grid index out of range");
  return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(axis_y.steps) +
                static_cast<std::size_t>(iy)];
}

SweepGrid sweep_optimal_investment(const MarketParams& base, const SweepAxis& axis_x,
                                   const SweepAxis& axis_y, int worker_threads) {
  if (!is_market_param(axis_x.parameter) || !is_market_param(axis_y.parameter))
    throw domain_error("axis names a decision variable; use the profit sweep");
  if (axis_x.parameter == axis_y.parameter)
    throw domain_error("sweep axes must name two distinct parameters");
  const auto xs = axis_points(axis_x);
  const auto ys = axis_points(axis_y);
  SweepGrid grid = make_grid(axis_x, axis_y, "optimal_investment");
  detail::parallel_chunks(
      static_cast<std::int64_t>(grid.values.size()), worker_threads,
      [&](int, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t cell = lo; cell < hi; ++cell) {
          const auto ix = static_cast<std::size_t>(cell) / ys.size();
          const auto iy = static_cast<std::size_t>(cell) % ys.size();
          try {
            const MarketParams cell_params =
                cell_market(base, axis_x.parameter, xs[ix], axis_y.parameter, ys[iy]);
            grid.values[static_cast<std::size_t>(cell)] =
                optimal_decision(cell_params, FeeMode::security_aware).investment;
          } catch (const domain_error&) {
            // parameter bounds violated at this cell
          } catch (const infeasible_error&) {
            // no feasible risk-aware fee at this cell
          }
        }
      });
  return grid;
}

SweepGrid sweep_profit(const MarketParams& base, const SweepAxis& fee_axis,
                       const SweepAxis& investment_axis, int worker_threads) {
  if (fee_axis.parameter != SweepParam::fee_rate)
    throw domain_error("profit sweep x axis must be the fee rate f_S");
  if (investment_axis.parameter != SweepParam::investment)
    throw domain_error("profit sweep y axis must be the investment I");
  if (!(fee_axis.lo >= 0.0) || !(fee_axis.hi <= base.big_exchange_fee))
    throw domain_error("fee axis must lie within [0, big_exchange_fee]");
  if (!(investment_axis.lo > 0.0)) throw domain_error("investment axis requires lo > 0");
  const auto fees = axis_points(fee_axis);
  const auto investments = axis_points(investment_axis);
  SweepGrid grid = make_grid(fee_axis, investment_axis, "expected_profit");
  detail::parallel_chunks(
      static_cast<std::int64_t>(grid.values.size()), worker_threads,
      [&](int, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t cell = lo; cell < hi; ++cell) {
          const auto ix = static_cast<std::size_t>(cell) / investments.size();
          const auto iy = static_cast<std::size_t>(cell) % investments.size();
          grid.values[static_cast<std::size_t>(cell)] =
              expected_profit({fees[ix], investments[iy]}, base).expected_profit;
        }
      });
  return grid;
}

MarketParams price_shock(const MarketParams& params, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw domain_error("scale must be > 0");
  return MarketParams(params.market_volume * scale, params.big_exchange_volume * scale,
                      params.big_exchange_fee, params.fee_sensitive_fraction,
                      params.attack_probability_constant, params.risk_exposure_constant);
}

void write_grid_csv(const SweepGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path);
  const auto xs = axis_points(grid.axis_x);
  const auto ys = axis_points(grid.axis_y);
  out << sweep_param_name(grid.axis_x.parameter) << ',' << sweep_param_name(grid.axis_y.parameter)
      << ',' << grid.metric_name << '\n';
  for (std::size_t ix = 0; ix < xs.size(); ++ix) {
    for (std::size_t iy = 0; iy < ys.size(); ++iy) {
      const auto& value = grid.values[ix * ys.size() + iy];
      out << detail::format_double(xs[ix]) << ',' << detail::format_double(ys[iy]) << ',';
      if (value) out << detail::format_double(*value);
      out << '\n';
    }
  }
  if (!out) throw io_error("write failed: " + path);
}

GridCsvData read_grid_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error(path + ": empty file, expected header");
  const auto header = detail::split_fields(detail::strip_carriage_return(line));
  if (header.size() != 3) throw io_error(path + ": expected 3 header fields");
  GridCsvData data;
  data.x_name = std::string(header[0]);
  data.y_name = std::string(header[1]);
  data.metric_name = std::string(header[2]);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const auto stripped = detail::strip_carriage_return(line);
    if (stripped.empty()) continue;
    const auto fields = detail::split_fields(stripped);
    const std::string context = path + ":" + std::to_string(line_number);
    if (fields.size() != 3) throw io_error(context + ": expected 3 fields");
    GridCsvRow row;
    row.x = detail::parse_double(fields[0], context);
    row.y = detail::parse_double(fields[1], context);
    if (!fields[2].empty()) row.value = detail::parse_double(fields[2], context);
    data.rows.push_back(row);
  }
  return data;
}

std::string grid_csv_filename(const SweepGrid& grid) {
  return grid.metric_name + "__" + sweep_param_name(grid.axis_x.parameter) + "__" +
         sweep_param_name(grid.axis_y.parameter) + ".csv";
}

}  // namespace exsec
