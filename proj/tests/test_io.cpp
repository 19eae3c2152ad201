#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "optomech/io.hpp"

using namespace optomech;
using nlohmann::json;

namespace {

json minimal() {
  return {{"J", 2.0},     {"kappa_L", 1.0}, {"kappa_R", 0.1},    {"g", 0.05},
          {"omega_m", 0.3}, {"delta", 0.1}, {"alpha_L_re", 1.0}, {"alpha_L_im", 0.0}};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "optomech_io_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("parse a config") {
  json j = minimal();
  j["grid"] = {-1, 1, 11};
  j["alpha_R_im"] = 0.25;
  const RunConfig c = parse_config(j);
  CHECK(c.params.J == 2.0);
  CHECK(c.drive.alpha_R == cplx(0.0, 0.25));
  CHECK(c.params.gamma == 0.0);
  CHECK(c.options.at("grid") == json({-1, 1, 11}));
  CHECK_FALSE(c.options.contains("J"));
}

TEST_CASE("config errors") {
  json missing = minimal();
  missing.erase("kappa_L");
  CHECK_THROWS_WITH(parse_config(missing), doctest::Contains("kappa_L"));
  json text = minimal();
  text["g"] = "small";
  CHECK_THROWS_AS(parse_config(text), ModelError);
  json bad = minimal();
  bad["J"] = 0.0;
  CHECK_THROWS_WITH(parse_config(bad), doctest::Contains("zero mode splitting"));
  CHECK_THROWS_AS(parse_config(json::array()), ModelError);
  try {
    load_config(scratch("nope.json"));
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
}

TEST_CASE("config round trip") {
  json j = minimal();
  j["seed"] = 12;
  const RunConfig c = parse_config(j);
  const RunConfig again = parse_config(config_to_json(c));
  CHECK(config_to_json(again) == config_to_json(c));
}

TEST_CASE("csv round trip is exact") {
  CsvTable t;
  t.header = config_to_json(parse_config(minimal()));
  t.names = {"omega", "S"};
  t.columns = {{-1.0 / 3.0, 0.1, 2.5e-300}, {1.0 / 7.0, 6.02e23, -0.0}};
  const std::string path = scratch("t.csv");
  write_csv(path, t);
  const CsvTable r = read_csv(path);
  CHECK(r.header == t.header);
  CHECK(r.names == t.names);
  CHECK(r.columns == t.columns);
  CHECK(load_config(path).params.J == 2.0);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("csv errors") {
  CsvTable t;
  t.names = {"a"};
  CHECK_THROWS_AS(write_csv(scratch("x.csv"), t), ModelError);
  t.columns = {{1.0}};
  CHECK_THROWS_AS(write_csv("/nonexistent/dir/x.csv", t), ModelError);
  const std::string path = scratch("nohdr.csv");
  std::ofstream(path) << "a,b\n1,2\n";
  CHECK_THROWS_AS(read_csv(path), ModelError);
}
