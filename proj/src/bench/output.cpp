#include "fom/bench/output.hpp"

#include "fom/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace fom::bench {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double at_or_nan(const std::vector<double>& v, std::size_t k) { return k < v.size() ? v[k] : kNaN; }
}  // namespace

std::vector<CsvRow> trace_rows(const Trace& trace, const std::string& method,
                               const std::function<double(const Point&)>& bregman_to_opt) {
  std::vector<CsvRow> rows;
  rows.reserve(trace.size());
  for (std::size_t k = 0; k < trace.size(); ++k) {
    CsvRow r;
    r.method = method;
    r.iter = static_cast<int>(k);
    r.f_value = trace.values[k];
    r.grad_norm_dual = trace.grad_norms[k];
    r.step_L = trace.step_constants[k];
    r.bregman_to_opt = bregman_to_opt ? bregman_to_opt(trace.iterates[k]) : kNaN;
    r.certificate = at_or_nan(trace.certificates, k);
    r.grad_calls = trace.grad_calls[k];
    r.value_calls = trace.value_calls[k];
    rows.push_back(r);
  }
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows, bool with_method) {
  if (with_method) out << "method,";
  out << "iter,f_value,grad_norm_dual,step_L,bregman_to_opt,certificate,grad_calls,value_calls\r\n";
  for (const auto& r : rows) {
    if (with_method) out << r.method << ',';
    out << r.iter << ',' << format_number(r.f_value) << ',' << format_number(r.grad_norm_dual) << ','
        << format_number(r.step_L) << ',' << format_number(r.bregman_to_opt) << ','
        << format_number(r.certificate) << ',' << r.grad_calls << ',' << r.value_calls << "\r\n";
  }
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable read_csv(std::istream& in) {
  auto split = [](std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CSV has no header row");
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    t.rows.push_back(split(line));
  }
  return t;
}

std::string svg_plot(const CsvTable& table, std::optional<double> f_star, const std::string& title) {
  const int c_iter = table.column("iter"), c_f = table.column("f_value"), c_cert = table.column("certificate");
  const int c_method = table.column("method");
  if (c_iter < 0 || c_f < 0) throw ConfigError("CSV lacks iter/f_value columns");

  std::map<std::string, std::vector<std::pair<double, double>>> series;
  std::vector<std::string> order;
  for (const auto& row : table.rows) {
    const std::string name = c_method >= 0 ? row[static_cast<std::size_t>(c_method)] : "run";
    double y = kNaN;
    if (f_star) {
      const std::string& s = row[static_cast<std::size_t>(c_f)];
      if (!s.empty()) y = std::stod(s) - *f_star;
    } else if (c_cert >= 0 && static_cast<std::size_t>(c_cert) < row.size()) {
      const std::string& s = row[static_cast<std::size_t>(c_cert)];
      if (!s.empty()) y = std::stod(s);
    }
    if (!(y > 0.0) || !std::isfinite(y)) continue;
    if (!series.count(name)) order.push_back(name);
    series[name].emplace_back(std::stod(row[static_cast<std::size_t>(c_iter)]), std::log10(y));
  }

  double x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool first = true;
  for (const auto& [name, pts] : series)
    for (auto [x, y] : pts) {
      x_max = std::max(x_max, x);
      if (first) {
        y_min = y_max = y;
        first = false;
      }
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  y_min = std::floor(y_min);
  y_max = std::ceil(y_max);
  if (y_max <= y_min) y_max = y_min + 1.0;

  const double W = 720, H = 480, left = 70, right = 180, top = 40, bottom = 50;
  auto px = [&](double x) { return left + (W - left - right) * x / x_max; };
  auto py = [&](double y) { return top + (H - top - bottom) * (y_max - y) / (y_max - y_min); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  o << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
    << "\" stroke=\"black\"/>\n";
  for (double d = y_min; d <= y_max + 1e-9; d += 1.0) {
    o << "<line x1=\"" << left << "\" y1=\"" << py(d) << "\" x2=\"" << W - right << "\" y2=\"" << py(d)
      << "\" stroke=\"#dddddd\"/>\n";
    o << "<text x=\"" << left - 8 << "\" y=\"" << py(d) + 4
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">1e" << static_cast<int>(d)
      << "</text>\n";
  }
  o << "<text x=\"" << (W - right + left) / 2 << "\" y=\"" << H - 12
    << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">iteration (max "
    << static_cast<long>(x_max) << ")</text>\n";
  std::size_t ci = 0;
  for (const auto& name : order) {
    const char* col = colors[ci % (sizeof colors / sizeof *colors)];
    o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : series[name]) o << px(x) << ',' << py(y) << ' ';
    o << "\"/>\n";
    o << "<text x=\"" << W - right + 10 << "\" y=\"" << top + 16 * (ci + 1) << "\" fill=\"" << col
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << name << "</text>\n";
    ++ci;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace fom::bench
