#pragma once

#include <stdexcept>
#include <string>

namespace uacg {

/// Distance computations require every vertex pair to be reachable.
struct DisconnectedGraph : std::runtime_error {
    explicit DisconnectedGraph(const std::string& what) : std::runtime_error(what) {}
};

/// Requested a closed-form result for a (family, n) pair that has none.
struct NoClosedForm : std::runtime_error {
    explicit NoClosedForm(const std::string& what) : std::runtime_error(what) {}
};

/// Eigensolver sweep cap exhausted. Signals a bug: cyclic Jacobi on a
/// symmetric matrix always converges.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace uacg
