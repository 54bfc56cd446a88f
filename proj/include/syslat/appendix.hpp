#pragma once

// The appendix matrices as a versioned text document with a checksum, and
// the loader that turns it into exact matrices over the tower.
//
// The embedded text is a byte-for-byte copy of data/appendix_v1.txt.

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "syslat/expr.hpp"
#include "syslat/matrix.hpp"

namespace syslat {

inline constexpr std::string_view kAppendixV1 = R"APPENDIX(# Appendix matrices of the 4- and 8-dimensional representations.
# Entries are expressions in t, s = sqrt(t^2-1) and w = sqrt(t^2+2).
# sqrt((t^2-1)/(t^2+2)) is written s/w.
format syslat-appendix 1
matrix rho_u 4 4
1, 0, 0, 0
0, 1, 0, 0
0, 0, s/w, 1
0, 0, -(1 + 2*t^2)/(2 + t^2), -s/w
end
matrix rho_c 4 4
(t + w)/2, 0, (1 - t^2 - t*w)/2, 0
0, (t - w)/2, 0, (-1 + t^2 - t*w)/2
1, 0, (-t - w)/2, 0
0, -1, 0, (-t + w)/2
end
matrix m_form 4 4
-(2*w)/(2*t + t^3 - w + t^2*w), 0, 0, 0
0, 2*(2 + t^2)/((1 + 2*t^2)*(1 - t^2 + t*w)), 0, 0
0, 0, 1, 0
0, 0, 0, (2 + t^2)/(1 + 2*t^2)
end
matrix omega_u 8 8
1, 0, 0, 2*t, -2*t, 2*t, 0, 0
0, 1, 0, t - s, -t + s, t - s, 1, 0
0, 0, 1, -1, 1, -1, 0, 0
0, 0, 1, 0, 0, 0, 0, 0
0, 0, 1, 0, 0, 1, -t + s, -t - s
0, 0, 1, -1, 0, 1, -t + s, -t - s
0, 0, 0, 0, 0, 0, 0, -1
0, 0, 0, 0, 0, 0, 1, 0
end
matrix omega_c 8 8
0, 0, 1, 0, 0, 0, 0, 0
0, 0, 0, 1, 0, 0, 0, 0
1, 0, 0, 0, 0, 0, 0, 0
0, 1, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, -1, 1
0, 0, 0, 0, 0, 0, -1, 0
0, 0, 0, 0, 0, -1, 0, 0
0, 0, 0, 0, 1, -1, 0, 0
end
checksum fnv1a64 041c6341c1eebdee
)APPENDIX";

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace detail {
inline std::vector<std::string> split_entries(const std::string& line) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : line) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}
} // namespace detail

using MatrixTable = std::map<std::string, Matrix<TowerElem>>;

/// Parses the appendix format. The checksum line covers every byte before it
/// and must be the last non-empty line.
inline MatrixTable parse_appendix(std::string_view text) {
    const std::size_t at = text.rfind("checksum ");
    if (at == std::string_view::npos) fail(ErrorCode::ParseError, "missing checksum line");
    const std::string_view body = text.substr(0, at);
    {
        std::istringstream tail{std::string(text.substr(at))};
        std::string kw, algo, value;
        tail >> kw >> algo >> value;
        if (algo != "fnv1a64") fail(ErrorCode::ParseError, "unknown checksum algorithm " + algo);
        if (value != hex64(fnv1a64(body)))
            fail(ErrorCode::ChecksumMismatch, "expected " + value + ", computed " + hex64(fnv1a64(body)));
    }
    std::istringstream in{std::string(body)};
    std::string line;
    MatrixTable out;
    bool have_format = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hdr(line);
        std::string kw;
        hdr >> kw;
        if (kw == "format") {
            std::string name;
            int version = 0;
            hdr >> name >> version;
            if (name != "syslat-appendix" || version != 1) fail(ErrorCode::ParseError, "unsupported format: " + line);
            have_format = true;
            continue;
        }
        if (kw != "matrix") fail(ErrorCode::ParseError, "unexpected line: " + line);
        if (!have_format) fail(ErrorCode::ParseError, "format line must precede matrices");
        std::string name;
        std::size_t rows = 0, cols = 0;
        if (!(hdr >> name >> rows >> cols) || rows == 0 || cols == 0)
            fail(ErrorCode::ParseError, "bad matrix header: " + line);
        std::vector<TowerElem> entries;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!std::getline(in, line)) fail(ErrorCode::ParseError, "matrix " + name + " is truncated");
            const auto cells = detail::split_entries(line);
            if (cells.size() != cols) fail(ErrorCode::ParseError, "row width mismatch in " + name + ": " + line);
            for (const auto& c : cells) entries.push_back(parse_tower_expr(c));
        }
        if (!std::getline(in, line) || line != "end") fail(ErrorCode::ParseError, "matrix " + name + " lacks 'end'");
        if (!out.emplace(name, Matrix<TowerElem>(rows, cols, std::move(entries))).second)
            fail(ErrorCode::ParseError, "duplicate matrix " + name);
    }
    return out;
}

/// The embedded appendix, parsed once.
inline const MatrixTable& appendix() {
    static const MatrixTable table = parse_appendix(kAppendixV1);
    return table;
}

inline const Matrix<TowerElem>& appendix_matrix(const std::string& name) {
    const auto& t = appendix();
    auto it = t.find(name);
    if (it == t.end()) fail(ErrorCode::MissingGenerator, "appendix has no matrix " + name);
    return it->second;
}

} // namespace syslat
