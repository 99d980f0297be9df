#include "c5/graph6.hpp"

#include <stdexcept>

namespace c5 {

std::string graph6_encode(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int nbits = g.n * (g.n - 1) / 2;
    int idx = 0;
    int cur = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            ++idx;
            if (idx % 6 == 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
            }
        }
    if (nbits % 6 != 0) {
        cur <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(cur + 63));
    }
    return out;
}

Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph6: order out of supported range");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: wrong length");
    Graph g;
    g.n = n;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx) {
            int byte = static_cast<unsigned char>(s[1 + idx / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: bad character");
            int bit = (byte >> (5 - idx % 6)) & 1;
            if (bit) {
                g.adj[i] |= static_cast<uint16_t>(1u << j);
                g.adj[j] |= static_cast<uint16_t>(1u << i);
            }
        }
    // trailing padding must be zero
    if (nbits % 6 != 0) {
        int byte = static_cast<unsigned char>(s.back()) - 63;
        int pad = 6 - nbits % 6;
        if (byte & ((1 << pad) - 1)) throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

}  // namespace c5
