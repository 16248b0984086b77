#pragma once

#include "fom/core/trace.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fom::bench {

struct CsvRow {
  std::string method;
  int iter = 0;
  double f_value = 0.0;
  double grad_norm_dual = 0.0;
  double step_L = 0.0;
  double bregman_to_opt = 0.0;  // NaN when x* is unknown
  double certificate = 0.0;     // NaN when not computed
  std::uint64_t grad_calls = 0;
  std::uint64_t value_calls = 0;
};

std::vector<CsvRow> trace_rows(const Trace& trace, const std::string& method,
                               const std::function<double(const Point&)>& bregman_to_opt);

// Scientific notation with 15 digits after the point; NaN becomes an empty cell.
std::string format_number(double v);

// Header: [method,]iter,f_value,grad_norm_dual,step_L,bregman_to_opt,certificate,grad_calls,value_calls
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows, bool with_method);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};
CsvTable read_csv(std::istream& in);

// Log-scale convergence plot built from a CSV table. The plotted quantity is
// f_value - f_star when f_star is given, otherwise the certificate column.
std::string svg_plot(const CsvTable& table, std::optional<double> f_star, const std::string& title);

}  // namespace fom::bench
