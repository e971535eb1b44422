#include "menage/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace menage {

Value Value::from_text(std::string s) {
  Value v;
  v.kind = Kind::Text;
  v.text = std::move(s);
  return v;
}

Value Value::from_int(const Int& value) {
  Value v;
  v.kind = Kind::Integer;
  v.text = to_decimal(value);
  return v;
}

Value Value::from_int(long long value) { return from_int(Int(value)); }

Value Value::from_bool(bool b) {
  Value v;
  v.kind = Kind::Boolean;
  v.boolean = b;
  return v;
}

Value Value::from_int_list(const std::vector<Int>& values) {
  Value v;
  v.kind = Kind::IntegerList;
  v.items.reserve(values.size());
  for (const Int& x : values) v.items.push_back(to_decimal(x));
  return v;
}

Value Value::from_pairs(std::vector<std::pair<std::string, std::string>> kv) {
  Value v;
  v.kind = Kind::Pairs;
  v.pairs = std::move(kv);
  return v;
}

std::string Value::flat() const {
  switch (kind) {
    case Kind::Text:
    case Kind::Integer:
      return text;
    case Kind::Boolean:
      return boolean ? "true" : "false";
    case Kind::IntegerList: {
      std::string out;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i];
      }
      return out;
    }
    case Kind::Pairs: {
      std::string out;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ' ';
        out += pairs[i].first + ':' + pairs[i].second;
      }
      return out;
    }
  }
  return {};
}

namespace {

nlohmann::ordered_json value_to_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Text:
    case Value::Kind::Integer:
      return v.text;
    case Value::Kind::Boolean:
      return v.boolean;
    case Value::Kind::IntegerList:
      return v.items;
    case Value::Kind::Pairs: {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [k, val] : v.pairs) obj[k] = val;
      return obj;
    }
  }
  return nullptr;
}

nlohmann::ordered_json record_to_json(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record) obj[key] = value_to_json(value);
  return obj;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Union of row keys in first-appearance order.
std::vector<std::string> column_order(const std::vector<Record>& rows) {
  std::vector<std::string> columns;
  for (const Record& row : rows) {
    for (const auto& [key, value] : row) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) {
        columns.push_back(key);
      }
    }
  }
  return columns;
}

const Value* find_value(const Record& row, const std::string& key) {
  for (const auto& [k, v] : row) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

std::string render_json(const OutputDocument& doc) {
  nlohmann::ordered_json root;
  root["command"] = doc.command;
  root["params"] = record_to_json(doc.params);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Record& row : doc.rows) rows.push_back(record_to_json(row));
  root["rows"] = std::move(rows);
  root["status"] = doc.status;
  return root.dump(2) + "\n";
}

std::string render_csv(const OutputDocument& doc) {
  const std::vector<std::string> columns = column_order(doc.rows);
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(columns[i]);
  }
  out << '\n';
  for (const Record& row : doc.rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      const Value* v = find_value(row, columns[i]);
      if (v) out << csv_quote(v->flat());
    }
    out << '\n';
  }
  return out.str();
}

std::string render_plain(const OutputDocument& doc) {
  std::ostringstream out;
  out << "command: " << doc.command << '\n';
  if (!doc.params.empty()) {
    out << "params:";
    for (const auto& [key, value] : doc.params) out << ' ' << key << '=' << value.flat();
    out << '\n';
  }
  const std::vector<std::string> columns = column_order(doc.rows);
  if (!columns.empty()) {
    std::vector<std::size_t> widths(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) widths[i] = columns[i].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.rows.size());
    for (const Record& row : doc.rows) {
      std::vector<std::string> line(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const Value* v = find_value(row, columns[i]);
        line[i] = v ? v->flat() : "";
        widths[i] = std::max(widths[i], line[i].size());
      }
      cells.push_back(std::move(line));
    }
    auto write_line = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << "  ";
        out << line[i];
        if (i + 1 < columns.size()) {
          out << std::string(widths[i] - line[i].size(), ' ');
        }
      }
      out << '\n';
    };
    write_line(columns);
    for (const auto& line : cells) write_line(line);
  }
  out << "status: " << doc.status << '\n';
  return out.str();
}

std::string render(const OutputDocument& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "csv") return render_csv(doc);
  if (format == "plain") return render_plain(doc);
  throw std::invalid_argument("unknown format: " + format);
}

int exit_code_for(const OutputDocument& doc) {
  if (doc.status == "ok") return 0;
  if (doc.status == "mismatch") return 1;
  return 2;
}

}  // namespace menage
