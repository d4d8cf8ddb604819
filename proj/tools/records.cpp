#include "records.hpp"

#include <cstdio>
#include <iostream>

namespace uacg::cli {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void Record::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, Value{value});
}
void Record::add(const std::string& key, const char* value) {
    fields_.emplace_back(key, Value{std::string(value)});
}
void Record::add(const std::string& key, double value) { fields_.emplace_back(key, Value{value}); }
void Record::add(const std::string& key, std::int64_t value) {
    fields_.emplace_back(key, Value{value});
}
void Record::add(const std::string& key, int value) {
    fields_.emplace_back(key, Value{static_cast<std::int64_t>(value)});
}
void Record::add(const std::string& key, bool value) { fields_.emplace_back(key, Value{value}); }
void Record::add_null(const std::string& key) { fields_.emplace_back(key, Value{Null{}}); }

std::string Record::to_json() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : fields_) {
        if (!first) out += ',';
        first = false;
        out += '"' + json_escape(key) + "\":";
        if (std::holds_alternative<std::string>(value))
            out += '"' + json_escape(std::get<std::string>(value)) + '"';
        else if (std::holds_alternative<double>(value))
            out += format_double(std::get<double>(value));
        else if (std::holds_alternative<std::int64_t>(value))
            out += std::to_string(std::get<std::int64_t>(value));
        else if (std::holds_alternative<bool>(value))
            out += std::get<bool>(value) ? "true" : "false";
        else
            out += "null";
    }
    out += '}';
    return out;
}

std::string Record::csv_header() const {
    std::string out;
    bool first = true;
    for (const auto& [key, value] : fields_) {
        if (!first) out += ',';
        first = false;
        out += csv_escape(key);
    }
    return out;
}

std::string Record::csv_row() const {
    std::string out;
    bool first = true;
    for (const auto& [key, value] : fields_) {
        if (!first) out += ',';
        first = false;
        if (std::holds_alternative<std::string>(value))
            out += csv_escape(std::get<std::string>(value));
        else if (std::holds_alternative<double>(value))
            out += format_double(std::get<double>(value));
        else if (std::holds_alternative<std::int64_t>(value))
            out += std::to_string(std::get<std::int64_t>(value));
        else if (std::holds_alternative<bool>(value))
            out += std::get<bool>(value) ? "true" : "false";
        // Null renders as the empty cell
    }
    return out;
}

void RecordPrinter::print(const Record& record) {
    if (format_ == Format::json) {
        std::cout << record.to_json() << '\n';
        return;
    }
    if (!header_done_) {
        std::cout << record.csv_header() << '\n';
        header_done_ = true;
    }
    std::cout << record.csv_row() << '\n';
}

} // namespace uacg::cli
