#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tktile {

enum class ErrorKind {
    invalid_arity,
    invalid_vertex,
    invalid_uniformity,
    too_few_vertices,
    budget_exceeded,
    divisibility,
    generation_failed,
    invalid_coloring,
    invalid_dimension,
    invalid_partite_structure,
    invalid_edge_profile,
    empty_graph,
    invalid_family,
    parse_error,
    invalid_argument,
    guard_exceeded,
};

auto to_string(ErrorKind kind) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

/// Raised when a search or enumeration runs out of its node/copy allowance.
/// `partial` is whatever was counted before stopping.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string & message, std::uint64_t partial) :
        Error(ErrorKind::budget_exceeded, message + " (partial count " + std::to_string(partial) + ")"),
        _partial(partial)
    {
    }

    auto partial() const noexcept -> std::uint64_t { return _partial; }

private:
    std::uint64_t _partial;
};

/// Three-valued outcome of every exact decision procedure.
enum class Verdict { yes, no, unknown };

auto to_string(Verdict v) -> std::string_view;

}
