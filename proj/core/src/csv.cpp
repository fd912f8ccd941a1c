#include "loadcast/csv.hpp"

#include "loadcast/error.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace loadcast {

CsvReader::CsvReader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

std::optional<std::vector<std::string>> CsvReader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        std::size_t at = next_line_++;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        if (raw.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            char c = raw[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < raw.size() && raw[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == delimiter_) {
                fields.push_back(std::move(field));
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(std::move(field));
        line_ = at;
        return fields;
    }
    return std::nullopt;
}

CsvWriter::CsvWriter(std::ostream& out, char delimiter) : out_(out), delimiter_(delimiter) {}

void CsvWriter::row(std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out_ << delimiter_;
        }
        const std::string& f = fields[i];
        bool needs_quotes = f.find(delimiter_) != std::string::npos ||
                            f.find('"') != std::string::npos || f.find('\n') != std::string::npos;
        if (needs_quotes) {
            out_ << '"';
            for (char c : f) {
                if (c == '"') {
                    out_ << "\"\"";
                } else {
                    out_ << c;
                }
            }
            out_ << '"';
        } else {
            out_ << f;
        }
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string> fields) {
    row(std::span<const std::string>(fields.begin(), fields.size()));
}

std::size_t require_column(const std::vector<std::string>& header, std::string_view name,
                           std::string_view file_label) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw InputError(std::string(file_label) + ": missing column '" + std::string(name) + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    internal_check(ec == std::errc{}, "format_double: to_chars failed");
    return std::string(buf, ptr);
}

std::optional<double> parse_double(std::string_view text, char decimal_separator) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    std::string buf(text);
    if (decimal_separator != '.') {
        for (char& c : buf) {
            if (c == '.') {
                return std::nullopt; // '.' is not valid when another separator is declared
            }
            if (c == decimal_separator) {
                c = '.';
            }
        }
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{} || ptr != buf.data() + buf.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<long long> parse_integer(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return v;
}

} // namespace loadcast
