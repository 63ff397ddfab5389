#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exsec/market.hpp"

namespace exsec {

enum class SweepParam {
  attack_constant,         // wire name alpha_M
  risk_constant,           // wire name beta_M
  market_volume,           // wire name V_M
  fee_sensitive_fraction,  // wire name gamma_BS
  fee_rate,                // wire name f_S
  investment,              // wire name I
};

// Wire names used in CSV headers, CLI specs and file names.
const char* sweep_param_name(SweepParam parameter);
SweepParam parse_sweep_param(const std::string& name);

enum class AxisSpacing { linear, log };

struct SweepAxis {
  SweepParam parameter;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;  // >= 2
  AxisSpacing spacing = AxisSpacing::linear;
};

// The axis lattice, endpoints exact. Validates the axis.
std::vector<double> axis_points(const SweepAxis& axis);

// A metric evaluated over a 2-D parameter lattice, x-major. Cells where the
// model is undefined (parameter bounds violated or no feasible fee) are
// marked infeasible rather than failing the whole sweep.
struct SweepGrid {
  SweepAxis axis_x;
  SweepAxis axis_y;
  std::string metric_name;  // "optimal_investment" or "expected_profit"
  std::vector<std::optional<double>> values;  // size axis_x.steps * axis_y.steps

  const std::optional<double>& at(int ix, int iy) const;
};

// Optimal security investment (at the risk-aware optimal fee) over two
// market-parameter axes.
SweepGrid sweep_optimal_investment(const MarketParams& base, const SweepAxis& axis_x,
                                   const SweepAxis& axis_y, int worker_threads = 1);

// Expected profit over the decision plane: x axis must be the fee rate
// within [0, big_exchange_fee], y axis the investment with lo > 0.
SweepGrid sweep_profit(const MarketParams& base, const SweepAxis& fee_axis,
                       const SweepAxis& investment_axis, int worker_threads = 1);

// Asset-price scenario: volumes scale with the asset's market value while
// fee rates and the per-instance cost stay fixed.
MarketParams price_shock(const MarketParams& params, double scale);

// Long-format CSV "x,y,value" with a header row naming the axes and metric.
// Rows are x-major ascending; infeasible cells emit an empty value field.
// Output is byte-stable for identical grids.
void write_grid_csv(const SweepGrid& grid, const std::string& path);

struct GridCsvRow {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> value;
};

struct GridCsvData {
  std::string x_name;
  std::string y_name;
  std::string metric_name;
  std::vector<GridCsvRow> rows;
};

GridCsvData read_grid_csv(const std::string& path);

// Conventional output name: "<metric>__<xparam>__<yparam>.csv".
std::string grid_csv_filename(const SweepGrid& grid);

}  // namespace exsec
