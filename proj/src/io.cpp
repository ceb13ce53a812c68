#include "tbl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tbl/errors.hpp"

namespace tbl {

namespace {

bool parse_row(const std::string& line, std::vector<double>& out) {
    out.clear();
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            while (used < field.size() &&
                   (field[used] == ' ' || field[used] == '\t' || field[used] == '\r'))
                ++used;
            if (used != field.size()) return false;
            out.push_back(v);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

}  // namespace

Matrix parse_feature_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        if (!parse_row(line, row)) {
            if (first) {
                first = false;  // header row
                continue;
            }
            throw ParseError("feature CSV line " + std::to_string(line_no) + ": not numeric");
        }
        first = false;
        if (!rows.empty() && rows.back().size() != row.size())
            throw ParseError("feature CSV line " + std::to_string(line_no) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("feature CSV has no data rows");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

Matrix load_feature_csv(const std::string& path) {
    return parse_feature_csv(read_file(path));
}

std::string format_feature_csv(const Matrix& features) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < features.rows(); ++i) {
        for (int j = 0; j < features.cols(); ++j) {
            if (j) out << ',';
            out << features(i, j);
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write file: " + tmp);
        out << content;
        if (!out.good()) throw ParseError("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ParseError("cannot move report into place: " + path);
}

}  // namespace tbl
