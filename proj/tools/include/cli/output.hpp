#pragma once

#include <cli/commands.hpp>

#include <string>

namespace becshift::cli {

// Pretty-printed JSON, insertion-ordered keys, trailing newline.
std::string to_json_text(const record& rec);

// Comma-separated, `.` decimal, doubles in scientific notation with 12
// significant digits. Records with a "rows" array become one line per row
// with the flattened echo columns repeated; everything else is one row.
std::string to_csv_text(const record& rec);

// path "-" writes to stdout; anything else to the named file.
void write_output(const std::string& path, const std::string& text);

}  // namespace becshift::cli
