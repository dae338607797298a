#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swe/csv_io.hpp"
#include "swe/scenarios.hpp"

using namespace swe;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    rows.emplace_back();
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) rows.back().push_back(cell);
  }
  return rows;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("swe_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -0.1, 3.141592653589793, 1e-300, 6.02e23, 490.6, 0.30000000000000004}) {
    const std::string s = format_double(v);
    CHECK(parse_double(s) == v);
  }
}

TEST_CASE("1-D solution file: header, rows, bit-exact round trip") {
  TempDir tmp;
  const Grid1D g = build_grid_1d(0.0, 1.0, 4);
  Field1D f = init_field(
      g, [](double x) { return 2.0 + 0.123456789123456789 * x; }, [](double x) { return -x * x; });
  const Bathymetry1D bathy = Bathymetry1D::analytic([](double x) { return 0.25 * x; },
                                                    [](double) { return 0.25; });
  const auto path = tmp.path / "sol.csv";
  write_solution(path, g, f, bathy);
  const auto rows = parse_csv(slurp(path));
  REQUIRE(rows.size() == 5);  // header + 4 cells
  CHECK(rows[0] == std::vector<std::string>{"x", "h", "hu", "u", "w", "B"});
  for (int k = 0; k < 4; ++k) {
    CHECK(parse_double(rows[k + 1][0]) == g.primal_center(g.begin() + k));
    CHECK(parse_double(rows[k + 1][4]) == f.primal[g.begin() + k][0]);  // w bit-exact
    CHECK(parse_double(rows[k + 1][2]) == f.primal[g.begin() + k][1]);  // hu bit-exact
  }
}

TEST_CASE("lake-at-rest file has a constant w column") {
  TempDir tmp;
  const Grid1D g = build_grid_1d(0.0, 1.0, 4);
  Field1D f = init_field(
      g, [](double) { return 7.5; }, [](double) { return 0.0; });
  const Bathymetry1D bathy = Bathymetry1D::analytic([](double x) { return 0.1 * x; },
                                                    [](double) { return 0.1; });
  const auto path = tmp.path / "rest.csv";
  write_solution(path, g, f, bathy);
  const auto rows = parse_csv(slurp(path));
  for (int k = 1; k <= 4; ++k) CHECK(rows[k][4] == rows[1][4]);
}

TEST_CASE("2-D solution file: nx*ny rows in index order") {
  TempDir tmp;
  const Grid2D g = build_grid_2d(0.0, 1.0, 0.0, 0.5, 6, 4);
  Field2D f = Field2D::zeros(g);
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) f.primal[g.index(i, j)] = {1.0 + i + 100.0 * j, 0.0, 0.0};
  const Bathymetry2D bathy =
      Bathymetry2D::analytic([](double, double) { return 0.0; }, [](double, double) { return 0.0; },
                             [](double, double) { return 0.0; });
  const auto path = tmp.path / "sol2d.csv";
  write_solution(path, g, f, bathy);
  const auto rows = parse_csv(slurp(path));
  REQUIRE(rows.size() == 1 + 6 * 4);
  CHECK(rows[0] == std::vector<std::string>{"x", "y", "h", "hu", "hv", "w", "B"});
  // x varies fastest
  CHECK(parse_double(rows[1][0]) < parse_double(rows[2][0]));
  CHECK(parse_double(rows[1][1]) == parse_double(rows[2][1]));
  CHECK(parse_double(rows[1 + 6][1]) > parse_double(rows[1][1]));
}

TEST_CASE("report rendering") {
  ErrorReport r;
  r.n_components = 3;
  r.l1 = {2.216e-17, 8.4091e-18, 9.5723e-18};
  r.linf = {8.6597e-15, 3.9053e-15, 4.4746e-15};
  const std::string text = render_error_report(r, {"w", "hu", "hv"});
  CHECK(text.find("L1-error") != std::string::npos);
  CHECK(text.find("Linf-error") != std::string::npos);
  CHECK(text.find("2.2160e-17") != std::string::npos);
  CHECK(text.find("4.4746e-15") != std::string::npos);

  SUBCASE("empty report is header only") {
    ErrorReport empty;
    const std::string t = render_error_report(empty, {"w", "hu"});
    CHECK(t.find("w") != std::string::npos);
    CHECK(t.find("e-") == std::string::npos);
  }

  SUBCASE("order table has one row per grid pair") {
    OrderTable table;
    table.columns = {"w L1-order", "w Linf-order"};
    table.rows.push_back({"1/800", {2.988, 2.9796}});
    table.rows.push_back({"1/1600", {2.9982, 2.9942}});
    const std::string t = render_order_table(table);
    CHECK(t.find("1/800") != std::string::npos);
    CHECK(t.find("1/1600") != std::string::npos);
    CHECK(t.find("2.9982") != std::string::npos);
  }
}

TEST_CASE("writes are atomic and deterministic") {
  TempDir tmp;
  const Grid1D g = build_grid_1d(0.0, 2.0, 8);
  Field1D f = init_field(
      g, [](double x) { return 1.0 + 0.3 * x; }, [](double x) { return 0.7 * x; });
  const Bathymetry1D bathy = Bathymetry1D::analytic([](double x) { return 0.05 * x; },
                                                    [](double) { return 0.05; });
  const auto p1 = tmp.path / "a.csv";
  const auto p2 = tmp.path / "b.csv";
  write_solution(p1, g, f, bathy);
  write_solution(p2, g, f, bathy);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(!std::filesystem::exists(tmp.path / "a.csv.tmp"));

  SUBCASE("identical scenario runs produce byte-identical files") {
    const Scenario1D& scn = *find_scenario_1d("wb-1d-smooth");
    RunSwitches sw;
    sw.nx = 16;
    sw.t_final = 0.02;
    const auto r1 = run_scenario(scn, sw);
    const auto r2 = run_scenario(scn, sw);
    const auto q1 = tmp.path / "r1.csv";
    const auto q2 = tmp.path / "r2.csv";
    write_solution(q1, r1.grid, r1.field, r1.bathy);
    write_solution(q2, r2.grid, r2.field, r2.bathy);
    CHECK(slurp(q1) == slurp(q2));
  }
}

TEST_CASE("report files land on disk atomically") {
  TempDir tmp;
  ErrorReport r;
  r.n_components = 2;
  r.l1 = {1.5e-3, 2.5e-4, 0.0};
  r.linf = {3.0e-3, 5.0e-4, 0.0};
  write_error_report(tmp.path / "err.txt", r, {"w", "hu"});
  CHECK(slurp(tmp.path / "err.txt").find("1.5000e-03") != std::string::npos);

  OrderTable table;
  table.columns = {"w L1-order"};
  table.rows.push_back({"1/400", {2.9355}});
  write_order_table(tmp.path / "orders.txt", table);
  CHECK(slurp(tmp.path / "orders.txt").find("2.9355") != std::string::npos);
  CHECK(!std::filesystem::exists(tmp.path / "orders.txt.tmp"));
}

TEST_CASE("step log file") {
  TempDir tmp;
  std::vector<StepRecord> log(2);
  log[0] = {1, 0.1, 0.1, 3.0, 20.0, 0.5, 1e-3};
  log[1] = {2, 0.2, 0.1, 3.1, 20.0, 0.6, 2e-3};
  const auto path = tmp.path / "steps.csv";
  write_step_log(path, log);
  const auto rows = parse_csv(slurp(path));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == "step");
  CHECK(rows[2][0] == "2");
}
