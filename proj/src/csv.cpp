#include "dispwave/csv.hpp"

#include <cstdio>
#include <fstream>

#include "dispwave/errors.hpp"

namespace dispwave {
namespace io {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << text;
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) throw Error("write_csv: no columns");
    const std::size_t rows = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw Error("write_csv: ragged columns");

    std::string text = header + "\n";
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) text += ",";
            text += fmt17(columns[c][r]);
        }
        text += "\n";
    }
    atomic_write_text(path, text);
}

}  // namespace io
}  // namespace dispwave
