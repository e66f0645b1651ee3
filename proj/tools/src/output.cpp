#include <cli/output.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace becshift::cli {

namespace {

using flat_row = std::vector<std::pair<std::string, const record*>>;

void flatten(const record& node, const std::string& prefix, flat_row& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) flatten(value, prefix + "." + std::to_string(i++), out);
  } else {
    out.emplace_back(prefix, &node);
  }
}

std::string format_scalar(const record& v) {
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v.get<double>());
    return buf;
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return "";  // null
}

void emit_line(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::string to_json_text(const record& rec) { return rec.dump(2) + "\n"; }

std::string to_csv_text(const record& rec) {
  record base = rec;
  const bool has_rows = base.contains("rows");
  record rows;
  if (has_rows) {
    rows = base.at("rows");
    base.erase("rows");
  }

  flat_row base_cells;
  flatten(base, "", base_cells);

  std::ostringstream out;
  std::vector<std::string> line;
  if (!has_rows || rows.empty()) {
    for (const auto& [key, value] : base_cells) line.push_back(key);
    emit_line(out, line);
    line.clear();
    for (const auto& [key, value] : base_cells) line.push_back(format_scalar(*value));
    emit_line(out, line);
    return out.str();
  }

  flat_row first;
  flatten(rows.front(), "", first);
  for (const auto& [key, value] : base_cells) line.push_back(key);
  for (const auto& [key, value] : first) line.push_back(key);
  emit_line(out, line);

  for (const auto& row : rows) {
    flat_row cells;
    flatten(row, "", cells);
    line.clear();
    for (const auto& [key, value] : base_cells) line.push_back(format_scalar(*value));
    for (const auto& [key, value] : first) {
      std::string cell;
      for (const auto& [rkey, rvalue] : cells)
        if (rkey == key) {
          cell = format_scalar(*rvalue);
          break;
        }
      line.push_back(cell);
    }
    emit_line(out, line);
  }
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file \"" + path + "\"");
  out << text;
  if (!out) throw ConfigError("failed writing output file \"" + path + "\"");
}

}  // namespace becshift::cli
