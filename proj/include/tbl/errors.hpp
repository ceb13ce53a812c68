#pragma once

#include <stdexcept>
#include <string>

namespace tbl {

// Domain precondition violations. Each value names the contract that was
// broken; the CLI maps DomainError to exit code 3.
enum class errc {
    invalid_graph,
    isolated_vertex,
    disconnected,
    diameter_too_large,
    non_finite_metric,
    not_fully_supported,
    marginal_mismatch,
    infeasible_dual,
    collapsed_pair,
    bad_alpha,
    bad_eta,
    bad_params,
    min_distance_below_one,
    negative_radicand,
    shape_mismatch,
    empty_sample,
    invalid_measure,
    invalid_spec,
};

const char* errc_name(errc code);

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Malformed input files or command lines; exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal numeric failures (solver non-convergence, lost certificates); exit code 4.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tbl
