#include "wwlab/toml.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wwlab/errors.hpp"

namespace wwlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Strip a trailing comment, respecting quoted strings.
std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
        if (c == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

bool valid_key(std::string_view k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
            return false;
    return true;
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    int line = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw config_error("toml: line " + std::to_string(line) + ": " + msg);
    }
};

TomlValue parse_value(Cursor& c);

TomlValue parse_string(Cursor& c) {
    TomlValue v;
    v.kind = TomlValue::Kind::String;
    ++c.pos;  // opening quote
    while (c.pos < c.s.size() && c.s[c.pos] != '"') {
        char ch = c.s[c.pos];
        if (ch == '\\') {
            ++c.pos;
            if (c.pos >= c.s.size()) c.fail("dangling escape");
            switch (c.s[c.pos]) {
                case 'n': v.str += '\n'; break;
                case 't': v.str += '\t'; break;
                case '"': v.str += '"'; break;
                case '\\': v.str += '\\'; break;
                default: c.fail("unsupported escape");
            }
        } else {
            v.str += ch;
        }
        ++c.pos;
    }
    if (c.pos >= c.s.size()) c.fail("unterminated string");
    ++c.pos;  // closing quote
    return v;
}

TomlValue parse_array(Cursor& c) {
    TomlValue v;
    v.kind = TomlValue::Kind::Array;
    ++c.pos;  // '['
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == ']') {
        ++c.pos;
        return v;
    }
    while (true) {
        c.skip_ws();
        v.array.push_back(parse_value(c));
        c.skip_ws();
        if (c.pos >= c.s.size()) c.fail("unterminated array");
        if (c.s[c.pos] == ',') {
            ++c.pos;
            continue;
        }
        if (c.s[c.pos] == ']') {
            ++c.pos;
            return v;
        }
        c.fail("expected ',' or ']' in array");
    }
}

TomlValue parse_scalar(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && c.s[c.pos] != ',' && c.s[c.pos] != ']') ++c.pos;
    std::string tok(trim(c.s.substr(start, c.pos - start)));
    if (tok.empty()) c.fail("empty value");
    TomlValue v;
    if (tok == "true" || tok == "false") {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = tok == "true";
        return v;
    }
    std::string plain;
    for (char ch : tok)
        if (ch != '_') plain += ch;
    bool looks_float = plain.find_first_of(".eE") != std::string::npos;
    if (!looks_float) {
        long long iv = 0;
        auto [p, ec] = std::from_chars(plain.data(), plain.data() + plain.size(), iv);
        if (ec == std::errc() && p == plain.data() + plain.size()) {
            v.kind = TomlValue::Kind::Integer;
            v.integer = iv;
            return v;
        }
    }
    try {
        std::size_t used = 0;
        double dv = std::stod(plain, &used);
        if (used == plain.size()) {
            v.kind = TomlValue::Kind::Float;
            v.real = dv;
            return v;
        }
    } catch (const std::exception&) {
    }
    c.fail("unrecognised value '" + tok + "'");
}

TomlValue parse_value(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.s.size()) c.fail("missing value");
    char ch = c.s[c.pos];
    if (ch == '"') return parse_string(c);
    if (ch == '[') return parse_array(c);
    return parse_scalar(c);
}

}  // namespace

const std::string& TomlValue::as_string() const {
    if (kind != Kind::String) throw config_error("toml: expected string value");
    return str;
}
long long TomlValue::as_integer() const {
    if (kind != Kind::Integer) throw config_error("toml: expected integer value");
    return integer;
}
double TomlValue::as_double() const {
    if (kind == Kind::Integer) return double(integer);
    if (kind != Kind::Float) throw config_error("toml: expected numeric value");
    return real;
}
bool TomlValue::as_bool() const {
    if (kind != Kind::Boolean) throw config_error("toml: expected boolean value");
    return boolean;
}
const std::vector<TomlValue>& TomlValue::as_array() const {
    if (kind != Kind::Array) throw config_error("toml: expected array value");
    return array;
}

TomlTable toml_parse(std::string_view text) {
    TomlTable table;
    std::string prefix;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw config_error("toml: line " + std::to_string(line_no) +
                                                       ": unterminated section header");
            std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!valid_key(name)) throw config_error("toml: line " + std::to_string(line_no) +
                                                     ": bad section name");
            prefix = std::string(name) + ".";
            continue;
        }
        std::size_t eq = std::string_view::npos;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '=' && !quoted) {
                eq = i;
                break;
            }
        }
        if (eq == std::string_view::npos)
            throw config_error("toml: line " + std::to_string(line_no) + ": expected key = value");
        std::string_view key = trim(line.substr(0, eq));
        if (!valid_key(key))
            throw config_error("toml: line " + std::to_string(line_no) + ": bad key");
        Cursor c{line.substr(eq + 1), 0, line_no};
        TomlValue v = parse_value(c);
        c.skip_ws();
        if (c.pos != c.s.size()) c.fail("trailing characters after value");
        table[prefix + std::string(key)] = std::move(v);
    }
    return table;
}

TomlTable toml_parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return toml_parse(ss.str());
}

}  // namespace wwlab
