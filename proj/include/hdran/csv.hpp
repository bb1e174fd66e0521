#ifndef HDRAN_CSV_HPP
#define HDRAN_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace hdran::io {

using CsvCell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// Doubles are printed with 17 significant digits so they read back exactly.
std::string format_double(double x);

/// A header plus rows of the same width. Text cells containing commas,
/// quotes or newlines are quoted.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws DomainError when the row width differs from the header.
    void add_row(std::vector<CsvCell> row);

    std::size_t size() const noexcept { return rows_.size(); }
    std::string to_string() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvCell>> rows_;
};

/// Writes text to a file, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hdran::io

#endif  // HDRAN_CSV_HPP
