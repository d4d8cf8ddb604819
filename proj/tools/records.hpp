#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace uacg::cli {

enum class Format { json, csv };

/// Flat ordered key/value record emitted as one JSON line or one CSV row.
/// Every floating value is rendered through the same 17-significant-digit
/// formatter in both encodings, so the two carry identical numbers.
class Record {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value);
    void add(const std::string& key, double value);
    void add(const std::string& key, std::int64_t value);
    void add(const std::string& key, int value);
    void add(const std::string& key, bool value);
    void add_null(const std::string& key);

    std::string to_json() const;
    std::string csv_header() const;
    std::string csv_row() const;

private:
    struct Null {};
    using Value = std::variant<std::string, double, std::int64_t, bool, Null>;
    std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_double(double value);

/// Prints records of one shape: JSON lines, or CSV with a header before the
/// first row.
class RecordPrinter {
public:
    explicit RecordPrinter(Format format) : format_(format) {}
    void print(const Record& record);

private:
    Format format_;
    bool header_done_ = false;
};

} // namespace uacg::cli
