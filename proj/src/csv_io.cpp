#include "swe/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swe/errors.hpp"

namespace swe {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot open for writing: " + tmp.string());
    os << content;
    if (!os) throw ConfigError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("rename failed for " + path.string() + ": " + ec.message());
}

void write_solution(const std::filesystem::path& path, const Grid1D& g, const Field1D& f,
                    const Bathymetry1D& bathy) {
  std::string out = "x,h,hu,u,w,B\n";
  for (int k = g.begin(); k < g.end(); ++k) {
    const double x = g.primal_center(k);
    const double w = f.primal[k][0], hu = f.primal[k][1];
    const double b = bathy.value(x);
    const double h = w - b;
    out += format_double(x);
    out += ',';
    out += format_double(h);
    out += ',';
    out += format_double(hu);
    out += ',';
    out += format_double(h > 0.0 ? hu / h : 0.0);
    out += ',';
    out += format_double(w);
    out += ',';
    out += format_double(b);
    out += '\n';
  }
  write_text_atomic(path, out);
}

void write_solution(const std::filesystem::path& path, const Grid2D& g, const Field2D& f,
                    const Bathymetry2D& bathy) {
  std::string out = "x,y,h,hu,hv,w,B\n";
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) {
      const double x = g.primal_center_x(i), y = g.primal_center_y(j);
      const auto& a = f.primal[g.index(i, j)];
      const double b = bathy.value(x, y);
      out += format_double(x);
      out += ',';
      out += format_double(y);
      out += ',';
      out += format_double(a[0] - b);
      out += ',';
      out += format_double(a[1]);
      out += ',';
      out += format_double(a[2]);
      out += ',';
      out += format_double(a[0]);
      out += ',';
      out += format_double(b);
      out += '\n';
    }
  write_text_atomic(path, out);
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", v);
  return buf;
}

}  // namespace

std::string render_error_report(const ErrorReport& r, const std::vector<std::string>& components) {
  std::ostringstream os;
  os << "             ";
  for (const auto& c : components) os << "  " << c << std::string(12 - std::min<std::size_t>(c.size(), 12), ' ');
  os << '\n';
  os << "L1-error     ";
  for (int c = 0; c < r.n_components && c < static_cast<int>(components.size()); ++c)
    os << "  " << sci(r.l1[c]) << "  ";
  os << '\n';
  os << "Linf-error   ";
  for (int c = 0; c < r.n_components && c < static_cast<int>(components.size()); ++c)
    os << "  " << sci(r.linf[c]) << "  ";
  os << '\n';
  return os.str();
}

std::string render_order_table(const OrderTable& table) {
  std::ostringstream os;
  os << "grid        ";
  for (const auto& c : table.columns) os << "  " << c << std::string(c.size() < 14 ? 14 - c.size() : 1, ' ');
  os << '\n';
  for (const auto& row : table.rows) {
    os << row.label << std::string(row.label.size() < 12 ? 12 - row.label.size() : 1, ' ');
    for (double v : row.values) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%8.4f", v);
      os << "  " << buf << "        ";
    }
    os << '\n';
  }
  return os.str();
}

void write_error_report(const std::filesystem::path& path, const ErrorReport& r,
                        const std::vector<std::string>& components) {
  write_text_atomic(path, render_error_report(r, components));
}

void write_order_table(const std::filesystem::path& path, const OrderTable& table) {
  write_text_atomic(path, render_order_table(table));
}

void write_step_log(const std::filesystem::path& path, const std::vector<StepRecord>& log) {
  std::string out = "step,t,dt,a,total_w_mass,max_abs_hu,max_rate\n";
  for (const auto& r : log) {
    out += std::to_string(r.step);
    out += ',';
    out += format_double(r.t);
    out += ',';
    out += format_double(r.dt);
    out += ',';
    out += format_double(r.a);
    out += ',';
    out += format_double(r.total_w_mass);
    out += ',';
    out += format_double(r.max_abs_hu);
    out += ',';
    out += format_double(r.max_rate);
    out += '\n';
  }
  write_text_atomic(path, out);
}

}  // namespace swe
