#ifndef HODGELETS_ERRORS_HPP
#define HODGELETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hodgelets {

// Thrown when a numerical procedure cannot produce a usable result
// (eigensolver non-convergence, degenerate frame, uncovered eigenvalue).
// Invalid inputs (bad indices, malformed files, dimension mismatches)
// throw std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hodgelets

#endif
