#pragma once

#include "tktile/patterns.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tktile {

struct ExactOptions {
    /// Search nodes before giving up with an unknown verdict.
    std::uint64_t budget = 50'000'000;
    std::uint64_t cap = default_copy_cap;
    unsigned workers = 1;
};

struct TilingDecision {
    /// yes: `tiling` is perfect. no: search exhausted. unknown: budget ran out.
    Verdict verdict = Verdict::unknown;
    std::optional<Tiling> tiling;
    /// "divisibility" when (2k-1) does not divide n, else empty.
    std::string reason;
    std::uint64_t nodes = 0;
    /// True when rows were generated per uncovered vertex because the copy
    /// count exceeded the cap.
    bool lazy = false;
};

/// Exact cover with one row per supporting (2k-1)-set and one column per vertex.
auto perfect_tiling(const KGraph & h, const ExactOptions & options = {}) -> TilingDecision;

struct MaxTilingResult {
    /// yes: lo == hi is optimal. unknown: budget ran out inside [lo, hi].
    Verdict verdict = Verdict::unknown;
    std::size_t lo = 0;
    std::size_t hi = 0;
    Tiling tiling;
    /// Packing LP optimum used for the root upper bound.
    Rational lp_bound;
    std::uint64_t nodes = 0;
};

/// Branch and bound: greedy lower bound, packing-LP upper bound at the root,
/// free-vertex counting bound below it.
auto max_tiling(const KGraph & h, const ExactOptions & options = {}) -> MaxTilingResult;

struct MatchingResult {
    Verdict verdict = Verdict::unknown;
    std::vector<Edge> edges;
    std::uint64_t nodes = 0;
};

/// J must be k-partite with equal classes; every edge meets each class once.
auto kpartite_perfect_matching(const KGraph & j, const std::vector<VertexSet> & classes, std::uint64_t budget = 50'000'000)
    -> MatchingResult;

/// Perfect matching in an arbitrary uniform hypergraph.
auto perfect_matching(const KGraph & j, std::uint64_t budget = 50'000'000) -> MatchingResult;

struct DHCondition {
    bool holds = false;
    Vertex worst_vertex = -1;
    std::size_t worst_degree = 0;
    /// (k-1) n^(k-1) / k with n the class size.
    Rational threshold;
};

auto dh_condition(const KGraph & j, const std::vector<VertexSet> & classes) -> DHCondition;

/// The two thresholds for a (2k-1)-graph on parts of sizes (2k-3)n and 2n:
/// c1 = (1 - beta) C((2k-3)n, 2k-3) C(2n, 2) edges overall and
/// c2 = n^(2k-2) / (2k-1)^((k+1)^2) edges at every vertex.
struct CorollaryThresholds {
    Rational c1;
    Rational c2;
};

auto corollary_thresholds(int k, int n, const Rational & beta) -> CorollaryThresholds;

struct GoodBad {
    std::vector<VertexSet> good;
    std::vector<VertexSet> bad;
    /// sqrt(gamma) n^(k-1), kept symbolic as (gamma n^(2k-2))^(1/2).
    RationalRoot bad_bound;
    bool within_bound = true;
};

/// A (k-1)-subset Q of S is bad when |N(Q) & S| > sqrt(gamma) n, else good.
auto classify_good_bad(const KGraph & h, std::span<const Vertex> s, const Rational & gamma) -> GoodBad;

struct AuxiliaryJ {
    /// (2k-1)-uniform, on the vertex set of H'.
    KGraph graph;
    VertexSet a;
    VertexSet b;
    /// copies[i] is a witness inside graph.edges()[i].
    std::vector<TkCopy> copies;
};

/// Every (2k-1)-set with 2k-3 vertices in A' and 2 in B' that supports T_k.
auto build_auxiliary_J(const KGraph & h, std::span<const Vertex> a, std::span<const Vertex> b,
    std::uint64_t cap = default_copy_cap) -> AuxiliaryJ;

struct StageReport {
    /// witness | good-bad | X | matching-M | Tk-for-X | build-J | DH-check | J-matching
    std::string stage;
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> diagnostics{};
};

struct PipelineOptions {
    /// A gamma-extremal set to start from; searched for when absent.
    std::optional<VertexSet> witness;
    /// Overrides for gamma' = gamma^(1/4) and beta = gamma^(1/8).
    std::optional<Rational> gamma_prime;
    std::optional<Rational> beta;
    std::uint64_t budget = 50'000'000;
    /// On failure, fall back to perfect_tiling.
    bool fallback = false;
};

struct PipelineResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Tiling> tiling;
    std::vector<StageReport> stages;
    bool used_fallback = false;

    /// The first failed stage, if any.
    auto failure() const -> const StageReport *
    {
        for (auto & s : stages)
            if (! s.ok)
                return &s;
        return nullptr;
    }
};

/// Runs the extremal-case construction step by step and stops at the first
/// stage that fails at this n. A returned tiling is always perfect.
auto extremal_pipeline(const KGraph & h, const Rational & gamma, const PipelineOptions & options = {}) -> PipelineResult;

}
