#pragma once

#include "tktile/constructions.hpp"
#include "tktile/patterns.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tktile {

/// Nonzero copy weights, sorted by copy.
struct FractionalTiling {
    int n = 0;
    std::vector<std::pair<TkCopy, Rational>> weights;
};

auto vertex_weight(const FractionalTiling & w, Vertex u) -> Rational;
/// Zero for pairs that share no weighted copy.
auto pair_weight(const FractionalTiling & w, Vertex u, Vertex v) -> Rational;
auto is_perfect(const FractionalTiling & w) -> bool;

/// a with a.1_{V(T)} >= 0 for every copy T and a.1 < 0; scaled to the
/// primitive integer vector.
struct FarkasCertificate {
    std::vector<Rational> a;
};

struct FractionalOptions {
    std::uint64_t cap = default_copy_cap;
    unsigned workers = 1;
    /// Price columns by streaming over supporting sets instead of
    /// materialising every copy (no cap applies).
    bool column_generation = false;
};

struct FractionalOutcome {
    std::optional<FractionalTiling> tiling;
    std::optional<FarkasCertificate> certificate;
    /// Distinct supporting vertex sets offered to the LP.
    std::size_t columns = 0;
};

auto perfect_fractional_tiling(const KGraph & h, const FractionalOptions & options = {}) -> FractionalOutcome;

/// Same question restricted to copies spanning no pair of B.
auto b_avoiding_fractional_tiling(const KGraph & h, const PairGraph & b, const FractionalOptions & options = {}) -> FractionalOutcome;

struct CertificateCheck {
    bool valid = false;
    std::optional<TkCopy> violating_copy;
    Rational total;
};

auto verify_certificate(const KGraph & h, const FarkasCertificate & cert, const FractionalOptions & options = {}) -> CertificateCheck;

struct MinMaxPairWeight {
    /// Set when a perfect fractional tiling exists.
    std::optional<Rational> optimum;
    std::optional<FractionalTiling> tiling;
    std::optional<FarkasCertificate> certificate;
};

/// Minimises max_{u,v} omega(uv) over perfect fractional tilings.
auto min_max_pair_weight(const KGraph & h, const FractionalOptions & options = {}) -> MinMaxPairWeight;

struct PackingValue {
    Rational value;
    FractionalTiling tiling;
};

/// max sum omega subject to every vertex load <= 1.
auto fractional_packing_number(const KGraph & h, const FractionalOptions & options = {}) -> PackingValue;

/// Multiplies by the lcm of denominators and divides by the gcd of numerators.
auto primitive_integer_vector(const std::vector<Rational> & v) -> std::vector<Rational>;

/// Calls fn(set, witness) for every (2k-1)-set supporting T_k, in
/// lexicographic order; fn returns false to stop.
void for_each_supporting_set(const KGraph & h, const std::function<bool(const VertexSet &, const TkCopy &)> & fn);

}
