#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "llshock/io.hpp"

using namespace llshock;

TEST(SystemJson, RoundTrip) {
  const auto s = SystemSpec::from_arrays({1, 2.5}, {0, 0.75}, {0.5, 1});
  EXPECT_EQ(system_from_json(to_json(s)), s);
}

TEST(SystemJson, SchemaViolations) {
  auto bad = [](const char* text) { return system_from_json(Json::parse(text)); };
  EXPECT_THROW(bad(R"({"sigma":[1,1],"lambda":[0],"p":[0.5,0.5]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":[1],"lambda":[0]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":[1],"lambda":[0],"p":[0.5],"extra":1})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":[1],"lambda":[0],"p":[1.5]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":[0],"lambda":[0],"p":[0.5]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":[1],"lambda":[-1],"p":[0.5]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"({"sigma":["1"],"lambda":[0],"p":[0.5]})"), std::invalid_argument);
  EXPECT_THROW(bad(R"([1,2])"), std::invalid_argument);
  EXPECT_THROW(load_system("/nonexistent/spec.json"), std::invalid_argument);
}

TEST(Parsers, VectorsAndMatrices) {
  EXPECT_EQ(parse_real_vec("[1, 2.5]"), (std::vector<double>{1, 2.5}));
  EXPECT_THROW(parse_real_vec("[1,"), std::invalid_argument);
  EXPECT_THROW(parse_real_vec("[]"), std::invalid_argument);
  EXPECT_THROW(parse_real_vec("{\"a\":1}"), std::invalid_argument);
  const ParamMatrix m = parse_param_matrix("[[1,2],[3,4]]");
  EXPECT_EQ(m.bottom, (std::vector<double>{3, 4}));
  EXPECT_EQ(parse_param_matrix(R"({"top":[1],"bottom":[2]})").top, (std::vector<double>{1}));
  EXPECT_THROW(parse_param_matrix("[[1,2],[3]]"), std::invalid_argument);
  EXPECT_EQ(parse_square_matrix("[[0,1],[1,0]]")(0, 1), 1.0);
  EXPECT_THROW(parse_square_matrix("[[0,1],[1]]"), std::invalid_argument);
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream out;
  write_diff_csv(out, {{0.0, -0.5}, {1.0, 0.0}});
  EXPECT_EQ(out.str(), "x,diff\n0,-0.5\n1,0\n");
  EXPECT_THROW(write_diff_csv("/nonexistent/dir/out.csv", {}), std::invalid_argument);
}

TEST(VerdictJson, Fields) {
  OrderVerdict v;
  v.outcome = Order::kCrossing;
  v.positive_witness = 0.25;
  const Json j = to_json(v);
  EXPECT_EQ(j["verdict"], "Crossing");
  EXPECT_EQ(j["positive_witness"], 0.25);
  EXPECT_TRUE(j["negative_witness"].is_null());
  EXPECT_EQ(to_json(MajorVerdict::fail(2, 1))["row"], 1);
}
