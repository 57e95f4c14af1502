#pragma once

// Small CSV/number-formatting helpers shared by the report emitters. Doubles
// are printed with the shortest round-trip representation so that repeated
// runs produce byte-identical artifacts.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace rholab {

std::string format_double(double v);

namespace csv {

class Builder {
public:
    Builder& cell(std::string_view s);
    Builder& cell(std::uint64_t v);
    Builder& cell(double v);
    Builder& end_row();

    const std::string& str() const noexcept { return out_; }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
    bool row_open_ = false;
};

} // namespace csv

void write_text_file(const std::string& path, std::string_view content);

} // namespace rholab
