#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wwlab {

// Minimal TOML reader covering the subset the scenario configs use:
// [section] headers (dotted allowed), bare keys, `key = value` pairs with
// string / integer / float / boolean / single-line array values, and `#`
// comments.  Keys are flattened to "section.key".
struct TomlValue {
    enum class Kind { String, Integer, Float, Boolean, Array };
    Kind kind = Kind::String;
    std::string str;
    long long integer = 0;
    double real = 0.0;
    bool boolean = false;
    std::vector<TomlValue> array;

    const std::string& as_string() const;
    long long as_integer() const;
    double as_double() const;  // accepts integers
    bool as_bool() const;
    const std::vector<TomlValue>& as_array() const;
};

using TomlTable = std::map<std::string, TomlValue>;

TomlTable toml_parse(std::string_view text);
TomlTable toml_parse_file(const std::string& path);

}  // namespace wwlab
