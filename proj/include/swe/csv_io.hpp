#pragma once

#include <filesystem>
#include <string>

#include "swe/metrics.hpp"
#include "swe/model.hpp"
#include "swe/scenarios.hpp"

namespace swe {

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

// Writes the whole content then renames into place, so readers never see a
// partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// One row per primal interior cell center, in index order (x fastest in 2-D).
// Headers are exactly "x,h,hu,u,w,B" and "x,y,h,hu,hv,w,B"; w and the
// discharges round-trip bit-exactly, h = w - B and u = hu/h are derived at
// the center.
void write_solution(const std::filesystem::path& path, const Grid1D& g, const Field1D& f,
                    const Bathymetry1D& bathy);
void write_solution(const std::filesystem::path& path, const Grid2D& g, const Field2D& f,
                    const Bathymetry2D& bathy);

std::string render_error_report(const ErrorReport& r, const std::vector<std::string>& components);
std::string render_order_table(const OrderTable& table);

void write_error_report(const std::filesystem::path& path, const ErrorReport& r,
                        const std::vector<std::string>& components);
void write_order_table(const std::filesystem::path& path, const OrderTable& table);

void write_step_log(const std::filesystem::path& path, const std::vector<StepRecord>& log);

}  // namespace swe
