#include "gpkit/graph6.hpp"

namespace gpkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 record");

    unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126) throw ParseError("long-form graph6 size (order > 62) is not supported");
    if (size_byte < 63 || size_byte > 126)
        throw ParseError("malformed length prefix: byte " + std::to_string(size_byte));
    int n = size_byte - kBias;
    if (n == 0) throw ParseError("graph6 record of order 0 is not supported");

    int bit_count = n * (n - 1) / 2;
    int body_len = (bit_count + 5) / 6;
    if (static_cast<int>(line.size()) - 1 < body_len) throw ParseError("truncated graph6 body");
    if (static_cast<int>(line.size()) - 1 > body_len) throw ParseError("trailing garbage after graph6 body");

    Graph g(n);
    int bit = 0, row = 0, col = 1;
    for (int k = 0; k < body_len; ++k) {
        unsigned char c = static_cast<unsigned char>(line[1 + k]);
        if (c < 63 || c > 126)
            throw ParseError("byte " + std::to_string(c) + " outside the 63..126 graph6 range");
        int group = c - kBias;
        for (int b = 5; b >= 0 && bit < bit_count; --b, ++bit) {
            if ((group >> b) & 1) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int group = 0, used = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + kBias));
    return out;
}

}  // namespace gpkit
