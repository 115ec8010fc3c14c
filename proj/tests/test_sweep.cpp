#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gibbs/errors.hpp"
#include "gibbs/format.hpp"
#include "gibbs/sweep.hpp"

using namespace gibbs;

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1.00000000000");
  CHECK(format_number(-2.5) == "-2.50000000000");
  CHECK(format_number(0.0) == "0.00000000000e+00");
  CHECK(format_number(1e-4) == "1.00000000000e-04");
  CHECK(format_number(0.00123) == "0.00123000000000");
  CHECK(format_number(123456.0) == "123456.000000");
  CHECK(format_number(1e6) == "1000000.00000");
  CHECK(format_number(-999999.9999999) == "-1000000.00000");
  CHECK(format_number(1.5e6) == "1.50000000000e+06");
  CHECK(format_number(0.00099999999999995) == "0.00100000000000");
  CHECK(format_number(0.000999) == "9.99000000000e-04");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("sweep grids") {
  SweepRequest r;
  r.start = 1.0;
  r.stop = 100.0;
  r.count = 3;
  const auto g = sweep_grid(r);
  CHECK(g.size() == 3);
  CHECK(g[1] == doctest::Approx(10.0));
  r.spacing = Spacing::Linear;
  CHECK(sweep_grid(r)[1] == doctest::Approx(50.5));
  r.count = 1;
  CHECK_THROWS_AS(r.validate(), InvalidArgument);
  r.count = 3;
  r.start = -1.0;
  CHECK_THROWS_AS(r.validate(), InvalidArgument);
}

TEST_CASE("two-point sweep has exactly the endpoints") {
  SweepRequest r;
  r.swept = SweptParameter::Beta;
  r.fixed = 10.0;
  r.start = 0.5;
  r.stop = 2.0;
  r.count = 2;
  const auto rows = run_sweep(r);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].param == 0.5);
  CHECK(rows[1].param == 2.0);
  CHECK(rows[0].classical_ref == doctest::Approx(2 * std::log(2.0)));
  CHECK(rows[0].delta_s_bose == doctest::Approx(rows[0].delta_s_dist).epsilon(1e-12));
}

TEST_CASE("sweep CSV is deterministic and independent of thread count") {
  SweepRequest r;
  r.n_particles = 4;
  r.labels = Labels::WithoutColors;
  r.fixed = 0.5;
  r.start = 1.0;
  r.stop = 100.0;
  r.count = 12;
  r.threads = 1;
  const std::string serial = sweep_csv(r);
  r.threads = 4;
  CHECK(sweep_csv(r) == serial);
  CHECK(sweep_csv(r) == serial);
  std::istringstream in(serial);
  std::string line;
  std::getline(in, line);
  CHECK(line == kSweepCsvHeader);
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
  }
  CHECK(n == 12);
  CHECK(serial.find('\r') == std::string::npos);
}

TEST_CASE("sweep file output") {
  SweepRequest r;
  r.count = 3;
  const std::string path =
      (std::filesystem::temp_directory_path() / "gibbs_sweep_test.csv").string();
  write_sweep_file(r, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == sweep_csv(r));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_sweep_file(r, "no/such/dir/out.csv"), IoError);
}

TEST_CASE("classical reference line") {
  CHECK(classical_reference(2, Labels::WithoutColors) == doctest::Approx(2 * std::log(2.0)));
  CHECK(classical_reference(4, Labels::WithColors) == doctest::Approx(4 * std::log(2.0)));
  CHECK(classical_reference(4, Labels::WithoutColors) == 0.0);
}

TEST_CASE("numeric failures carry the grid point") {
  SweepRequest r;
  r.fixed = 1.0;
  r.start = 1.0;
  r.stop = 1e300;
  r.count = 2;
  try {
    run_sweep(r);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("sweep failed at length=") != std::string::npos);
  }
}
