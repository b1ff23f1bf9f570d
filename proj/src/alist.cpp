#include "pgq/alist.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pgq {

std::string to_alist(const BitMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::size_t>> col_rows(cols), row_cols(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r, c)) {
                col_rows[c].push_back(r + 1);
                row_cols[r].push_back(c + 1);
            }

    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_rows) max_col = std::max(max_col, v.size());
    for (const auto& v : row_cols) max_row = std::max(max_row, v.size());

    std::ostringstream out;
    out << cols << ' ' << rows << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < cols; ++c) out << col_rows[c].size() << (c + 1 < cols ? ' ' : '\n');
    for (std::size_t r = 0; r < rows; ++r) out << row_cols[r].size() << (r + 1 < rows ? ' ' : '\n');
    auto emit_padded = [&out](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i) out << (i < v.size() ? v[i] : 0) << (i + 1 < width ? ' ' : '\n');
    };
    for (const auto& v : col_rows) emit_padded(v, max_col);
    for (const auto& v : row_cols) emit_padded(v, max_row);
    return out.str();
}

BitMatrix bitmatrix_from_alist(std::istream& in) {
    auto need = [&in](auto& value, const char* what) {
        if (!(in >> value)) throw std::runtime_error(std::string("alist: missing ") + what);
    };

    std::size_t cols = 0, rows = 0, max_col = 0, max_row = 0;
    need(cols, "column count");
    need(rows, "row count");
    need(max_col, "max column degree");
    need(max_row, "max row degree");
    if (cols == 0 || rows == 0) throw std::runtime_error("alist: empty matrix");

    std::vector<std::size_t> col_deg(cols), row_deg(rows);
    for (auto& d : col_deg) need(d, "column degree");
    for (auto& d : row_deg) need(d, "row degree");

    BitMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < max_col; ++i) {
            std::size_t r = 0;
            need(r, "column entry");
            if (r == 0) continue;  // padding
            if (r > rows) throw std::runtime_error("alist: row index out of range");
            m.set(r - 1, c, true);
        }
    }
    // row section repeats the same incidences; read it and cross-check
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < max_row; ++i) {
            std::size_t c = 0;
            need(c, "row entry");
            if (c == 0) continue;
            if (c > cols) throw std::runtime_error("alist: column index out of range");
            if (!m.get(r, c - 1)) throw std::runtime_error("alist: row/column sections disagree");
            ++seen;
        }
        if (seen != row_deg[r]) throw std::runtime_error("alist: row degree mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t deg = 0;
        for (std::size_t r = 0; r < rows; ++r) deg += m.get(r, c);
        if (deg != col_deg[c]) throw std::runtime_error("alist: column degree mismatch");
    }
    return m;
}

void write_alist(const std::filesystem::path& path, const BitMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_alist(m);
}

BitMatrix read_alist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return bitmatrix_from_alist(in);
}

}  // namespace pgq
