#ifndef LEVY_TABLE_IO_HPP
#define LEVY_TABLE_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace levy {

// Numeric cell format shared by every CSV emitter: %.12g, which keeps
// integer-valued times exact and is byte-stable across platforms.
inline std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

inline std::string format_number(std::uint64_t value) { return std::to_string(value); }

// CSV with a header row and LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) {
        if (cells.size() != header_.size())
            throw std::invalid_argument("CsvTable: row width does not match header");
        rows_.push_back(std::move(cells));
    }

    std::string to_string() const {
        std::string out = join(header_);
        for (const auto& row : rows_) out += join(row);
        return out;
    }

    void write(const std::string& path) const {
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open for writing: " + path);
        file << to_string();
        if (!file) throw std::runtime_error("write failed: " + path);
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        line += '\n';
        return line;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file << content;
    if (!file) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for reading: " + path);
    std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return content;
}

} // namespace levy

#endif
