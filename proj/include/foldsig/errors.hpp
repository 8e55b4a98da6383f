#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foldsig {

enum class ErrorKind {
    InvalidInput,  // degenerate or out-of-contract arguments
    Dimension,     // point set does not span the plane
    Foldability,   // dual graph not bipartite
    Density,       // triangulation not dense where density is required
    TooLarge,      // enumeration limit exceeded
    NonGeneric,    // positive-dimensional common locus
    Parse,         // malformed input file
    Internal       // broken invariant; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when a 2-coloring is requested for a non-foldable triangulation.
/// Carries an odd cycle of the dual graph as triangle indices.
class FoldabilityError : public Error {
public:
    FoldabilityError(std::string msg, std::vector<int> odd_cycle)
        : Error(ErrorKind::Foldability, msg), odd_cycle_(std::move(odd_cycle)) {}

    const std::vector<int>& odd_cycle() const { return odd_cycle_; }

private:
    std::vector<int> odd_cycle_;
};

}  // namespace foldsig
