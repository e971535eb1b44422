#pragma once

#include <string>
#include <utility>
#include <vector>

#include "menage/arith.hpp"

namespace menage {

// One cell of a machine-readable document. Integers always serialize as
// decimal strings (they exceed 64 bits quickly); booleans stay booleans in
// JSON and become "true"/"false" elsewhere.
struct Value {
  enum class Kind { Text, Integer, Boolean, IntegerList, Pairs };

  Kind kind = Kind::Text;
  std::string text;                 // Text and Integer payload
  bool boolean = false;             // Boolean payload
  std::vector<std::string> items;   // IntegerList payload
  std::vector<std::pair<std::string, std::string>> pairs;  // Pairs payload, ordered

  static Value from_text(std::string s);
  static Value from_int(const Int& v);
  static Value from_int(long long v);
  static Value from_bool(bool b);
  static Value from_int_list(const std::vector<Int>& values);
  static Value from_pairs(std::vector<std::pair<std::string, std::string>> kv);

  // Canonical single-string form used by the CSV and plain renderers.
  std::string flat() const;

  bool operator==(const Value& other) const = default;
};

using Record = std::vector<std::pair<std::string, Value>>;

// The one CLI result shape: command echo, parameter echo, rows (schema per
// command; a trailing row may carry summary keys), and status. Serialization
// is stable: keys render in insertion order, so identical inputs produce
// byte-identical output.
struct OutputDocument {
  std::string command;
  Record params;
  std::vector<Record> rows;
  std::string status = "ok";  // ok | mismatch | error
};

std::string render_json(const OutputDocument& doc);
std::string render_csv(const OutputDocument& doc);
std::string render_plain(const OutputDocument& doc);

// Renders in the named format ("json", "csv", "plain"); throws
// std::invalid_argument for anything else.
std::string render(const OutputDocument& doc, const std::string& format);

// 0 for ok, 1 for mismatch, 2 for error.
int exit_code_for(const OutputDocument& doc);

}  // namespace menage
