#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridesim::text {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline int to_int(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw std::runtime_error("empty integer field");
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw std::runtime_error("not an integer: '" + t + "'");
    return static_cast<int>(v);
}

inline std::int64_t to_int64(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw std::runtime_error("empty integer field");
    char* end = nullptr;
    long long v = std::strtoll(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw std::runtime_error("not an integer: '" + t + "'");
    return v;
}

inline double to_double(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw std::runtime_error("empty numeric field");
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw std::runtime_error("not a number: '" + t + "'");
    return v;
}

// Round-trip-exact double formatting (17 significant digits).
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Shorter form for human-facing values that are not parsed back.
inline std::string fmt_double6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace ridesim::text
