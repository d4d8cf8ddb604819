#include "uacg/graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "uacg/numtheory.hpp"

namespace uacg {

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::addition_cayley: return "uacg";
        case GraphKind::unitary_cayley: return "ucg";
        case GraphKind::addition_cayley_complement: return "uacg-complement";
        case GraphKind::unitary_cayley_complement: return "ucg-complement";
    }
    return "?";
}

Graph::Graph(GraphKind kind, int n) : kind_(kind), n_(n) {
    if (n < 2) throw std::invalid_argument("Graph: n must be at least 2");
    if (n > kMaxOrder)
        throw std::invalid_argument("Graph: order above " + std::to_string(kMaxOrder));
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    degrees_.assign(n, 0);

    std::vector<char> coprime(n);
    for (int r = 0; r < n; ++r) coprime[r] = std::gcd(r, n) == 1 ? 1 : 0;

    const bool complement = kind == GraphKind::addition_cayley_complement ||
                            kind == GraphKind::unitary_cayley_complement;
    const bool addition = kind == GraphKind::addition_cayley ||
                          kind == GraphKind::addition_cayley_complement;

    auto set_edge = [this](int a, int b) {
        bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
        ++degrees_[a];
        ++degrees_[b];
    };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int r = addition ? (a + b) % n : (b - a) % n;
            bool adj = coprime[r] != 0;
            if (complement) adj = !adj;
            if (adj) set_edge(a, b);
        }
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (int d : degrees_) twice += d;
    return twice / 2;
}

IntMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    const int words = g.row_words();
    IntMatrix d(n);

    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s >> 6] = frontier[s >> 6] = std::uint64_t{1} << (s & 63);
        int reached = 1;
        int dist = 0;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = frontier[w];
                while (bits) {
                    const int v = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t* row = g.row(v);
                    for (int u = 0; u < words; ++u) next[u] |= row[u];
                }
            }
            bool any = false;
            ++dist;
            for (int w = 0; w < words; ++w) {
                next[w] &= ~visited[w];
                visited[w] |= next[w];
                std::uint64_t bits = next[w];
                if (bits) any = true;
                while (bits) {
                    const int v = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    d(s, v) = dist;
                    ++reached;
                }
            }
            if (!any) break;
            frontier.swap(next);
        }
        if (reached < n)
            throw DisconnectedGraph(std::string("distance_matrix: ") + to_string(g.kind()) +
                                    " n=" + std::to_string(n) + " is disconnected");
    }
    return d;
}

int diameter_formula(int n) {
    if (n <= 2) throw std::invalid_argument("diameter_formula: requires n > 2");
    const auto f = factorize(n);
    if (n % 2 == 0) return f.size() == 1 ? 2 : 3; // power of two vs mixed even
    return 2;                                     // odd prime or odd composite
}

std::vector<std::int64_t> transmissions(const Graph& g) {
    const IntMatrix d = distance_matrix(g);
    std::vector<std::int64_t> tr(g.order(), 0);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) tr[i] += d(i, j);
    return tr;
}

std::int64_t transmission_formula(int n, VertexClass cls) {
    if (n <= 2) throw std::invalid_argument("transmission_formula: requires n > 2");
    const bool even = n % 2 == 0;
    const std::int64_t phi = euler_phi(n);
    switch (cls) {
        case VertexClass::even_power_of_two:
            if (!even || factorize(n).size() != 1)
                throw std::invalid_argument("transmission_formula: n is not a power of two");
            return 2LL * n - 2 - phi;
        case VertexClass::even_with_odd_prime:
            if (!even || factorize(n).size() == 1)
                throw std::invalid_argument("transmission_formula: n has no odd prime factor");
            return 5LL * n / 2 - 2 - 2 * phi;
        case VertexClass::odd_degree_phi:
            if (even) throw std::invalid_argument("transmission_formula: n must be odd");
            return 2LL * n - phi - 2;
        case VertexClass::odd_degree_phi_minus_one:
            if (even) throw std::invalid_argument("transmission_formula: n must be odd");
            return 2LL * n - phi - 1;
    }
    throw std::invalid_argument("transmission_formula: unknown vertex class");
}

} // namespace uacg
