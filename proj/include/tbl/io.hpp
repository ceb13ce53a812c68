#pragma once

#include <string>

#include "tbl/matrix.hpp"

namespace tbl {

// Feature CSV: d_in rows by k columns, comma separated; a leading
// non-numeric row is treated as a header and skipped.
Matrix parse_feature_csv(const std::string& text);
Matrix load_feature_csv(const std::string& path);
std::string format_feature_csv(const Matrix& features);

std::string read_file(const std::string& path);

// Writes via a temp file in the same directory plus rename, so readers never
// observe a partial report.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tbl
