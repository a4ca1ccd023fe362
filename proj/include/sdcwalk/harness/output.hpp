#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sdcwalk::harness {

// Output file could not be created or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::string, std::int64_t, double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double v);

// Header row plus one line per row, '\n' line endings.
std::string to_csv(const Table& t);
// Array of objects keyed by column name; non-finite numbers become null.
std::string to_json(const Table& t);

// Writes `contents` to `path` (creating parent directories). Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace sdcwalk::harness
