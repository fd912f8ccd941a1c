#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loadcast {

/// Streaming CSV reader. Handles quoted fields with embedded delimiters,
/// doubled quotes, and CRLF line endings. Blank lines are skipped.
class CsvReader {
public:
    explicit CsvReader(std::istream& in, char delimiter = ',');

    /// Next record, or nullopt at end of input.
    std::optional<std::vector<std::string>> next();

    /// 1-based line number of the last record returned by next().
    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    char delimiter_;
    std::size_t line_ = 0;
    std::size_t next_line_ = 1;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out, char delimiter = ',');
    void row(std::span<const std::string> fields);
    void row(std::initializer_list<std::string> fields);

private:
    std::ostream& out_;
    char delimiter_;
};

/// Locates a named column in a header row; InputError if absent.
std::size_t require_column(const std::vector<std::string>& header, std::string_view name,
                           std::string_view file_label);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view text, char decimal_separator = '.');
std::optional<long long> parse_integer(std::string_view text);

} // namespace loadcast
