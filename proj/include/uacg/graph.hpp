#pragma once

#include <cstdint>
#include <vector>

#include "uacg/errors.hpp"

namespace uacg {

/// The four graph constructions on the residues 0..n-1:
///  - addition_cayley:  a ~ b  iff  a != b and (a + b) mod n is a unit
///  - unitary_cayley:   a ~ b  iff  (a - b) mod n is a unit
/// plus their complements (all off-diagonal pairs flipped).
enum class GraphKind {
    addition_cayley,
    unitary_cayley,
    addition_cayley_complement,
    unitary_cayley_complement,
};

const char* to_string(GraphKind kind);

/// Immutable simple graph with dense bit-set adjacency rows.
/// Order is capped at kMaxOrder; the eigensolver work is O(n^3) anyway.
class Graph {
public:
    static constexpr int kMaxOrder = 3000;

    Graph(GraphKind kind, int n);

    int order() const { return n_; }
    GraphKind kind() const { return kind_; }

    bool adjacent(int a, int b) const {
        return (row(a)[static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1u;
    }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degree_sequence() const { return degrees_; }
    std::int64_t edge_count() const;

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int row_words() const { return words_; }

private:
    GraphKind kind_;
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

inline Graph build_graph(GraphKind kind, int n) { return Graph(kind, n); }

/// Square integer matrix, row-major. Used for BFS distances.
struct IntMatrix {
    int n = 0;
    std::vector<int> a;

    explicit IntMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0) {}
    int operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// All-pairs shortest path lengths by BFS from every vertex.
/// Throws DisconnectedGraph if any pair is unreachable (complements of the
/// Cayley graphs can be disconnected; the base graphs never are for n >= 2).
IntMatrix distance_matrix(const Graph& g);

/// Diameter of the addition Cayley graph for n > 2 without doing BFS:
/// 2 for primes, powers of two and odd composites, 3 for other even n.
int diameter_formula(int n);

/// Per-vertex transmissions (row sums of the distance matrix).
std::vector<std::int64_t> transmissions(const Graph& g);

/// Vertex classes with a closed-form transmission in the addition Cayley
/// graph. Even n is transmission regular; odd n splits by degree.
enum class VertexClass {
    even_power_of_two,        // n = 2^m, m >= 2:          2n - 2 - phi(n)
    even_with_odd_prime,      // even n, odd prime factor: 5n/2 - 2 - 2 phi(n)
    odd_degree_phi,           // odd n, deg(v) = phi(n):   2n - phi(n) - 2
    odd_degree_phi_minus_one, // odd n, deg(v) = phi(n)-1: 2n - phi(n) - 1
};

/// Closed-form transmission for the class. Throws std::invalid_argument when
/// the class is inconsistent with n (wrong parity or wrong 2-power shape).
std::int64_t transmission_formula(int n, VertexClass cls);

} // namespace uacg
