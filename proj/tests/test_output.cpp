#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "menage/output.hpp"

using menage::Int;
using menage::OutputDocument;
using menage::Record;
using menage::Value;

namespace {

OutputDocument sample_document() {
  OutputDocument doc;
  doc.command = "table";
  doc.params.emplace_back("min", Value::from_int(2));
  doc.params.emplace_back("max", Value::from_int(3));
  Record row1;
  row1.emplace_back("n", Value::from_int(2));
  row1.emplace_back("u_touchard", Value::from_int(Int("59216642000000000000")));
  row1.emplace_back("flag", Value::from_bool(true));
  Record row2;
  row2.emplace_back("n", Value::from_int(3));
  row2.emplace_back("u_touchard", Value::from_int(1));
  row2.emplace_back("flag", Value::from_bool(false));
  doc.rows = {row1, row2};
  return doc;
}

}  // namespace

TEST_CASE("json rendering: fixed key order, big integers as strings") {
  const std::string text = menage::render_json(sample_document());
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["command"] == "table");
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["params"]["min"] == "2");
  CHECK(parsed["rows"][0]["u_touchard"] == "59216642000000000000");
  CHECK(parsed["rows"][0]["flag"] == true);
  CHECK(parsed["rows"].size() == 2);

  // insertion order survives serialization
  const auto keys_at = text.find("\"n\"");
  const auto value_at = text.find("\"u_touchard\"");
  CHECK(keys_at != std::string::npos);
  CHECK(keys_at < value_at);
}

TEST_CASE("csv rendering: header union plus one record per row") {
  const std::string text = menage::render_csv(sample_document());
  CHECK(text ==
        "n,u_touchard,flag\n"
        "2,59216642000000000000,true\n"
        "3,1,false\n");
}

TEST_CASE("csv quoting is RFC style") {
  OutputDocument doc;
  doc.command = "rook";
  Record row;
  row.emplace_back("file", Value::from_text("a,b\"c"));
  row.emplace_back("coefficients", Value::from_int_list({Int(1), Int(2)}));
  doc.rows.push_back(row);
  const std::string text = menage::render_csv(doc);
  CHECK(text ==
        "file,coefficients\n"
        "\"a,b\"\"c\",1 2\n");
}

TEST_CASE("plain rendering aligns columns and is deterministic") {
  const std::string once = menage::render_plain(sample_document());
  const std::string twice = menage::render_plain(sample_document());
  CHECK(once == twice);
  CHECK(once.find("command: table") == 0);
  CHECK(once.find("status: ok") != std::string::npos);
  CHECK(once.find("u_touchard") != std::string::npos);
}

TEST_CASE("csv and json carry identical values") {
  const OutputDocument doc = sample_document();
  const auto parsed = nlohmann::json::parse(menage::render_json(doc));
  const std::string csv = menage::render_csv(doc);

  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 1 + parsed["rows"].size());
  // row 1 of the CSV matches row 0 of the JSON, field by field
  CHECK(lines[1] == "2,59216642000000000000,true");
  CHECK(parsed["rows"][0]["n"] == "2");
  CHECK(parsed["rows"][0]["u_touchard"] == "59216642000000000000");
  CHECK(parsed["rows"][0]["flag"] == true);
}

TEST_CASE("pairs and integer lists flatten stably") {
  Value pairs = Value::from_pairs({{"3", "54888"}, {"4", "55500"}});
  CHECK(pairs.flat() == "3:54888 4:55500");
  Value list = Value::from_int_list({Int(1), Int(5), Int(6), Int(1)});
  CHECK(list.flat() == "1 5 6 1");
  Value boolean = Value::from_bool(true);
  CHECK(boolean.flat() == "true");
}

TEST_CASE("exit codes follow the status contract") {
  OutputDocument doc = sample_document();
  CHECK(menage::exit_code_for(doc) == 0);
  doc.status = "mismatch";
  CHECK(menage::exit_code_for(doc) == 1);
  doc.status = "error";
  CHECK(menage::exit_code_for(doc) == 2);
}

TEST_CASE("unknown format is rejected") {
  CHECK_THROWS_AS(menage::render(sample_document(), "xml"), std::invalid_argument);
  CHECK_NOTHROW(menage::render(sample_document(), "plain"));
}
