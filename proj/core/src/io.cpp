#include "rholab/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rholab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

namespace csv {

Builder& Builder::cell(std::string_view s) {
    if (row_open_) out_ += ',';
    out_ += s;
    row_open_ = true;
    return *this;
}

Builder& Builder::cell(std::uint64_t v) { return cell(std::string_view(std::to_string(v))); }

Builder& Builder::cell(double v) { return cell(std::string_view(format_double(v))); }

Builder& Builder::end_row() {
    out_ += '\n';
    row_open_ = false;
    return *this;
}

} // namespace csv

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace rholab
