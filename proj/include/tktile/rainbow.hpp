#pragma once

#include "tktile/kgraph.hpp"
#include "tktile/patterns.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace tktile {

/// Hosts H_1..H_m on the shared vertex set {0..n-1}.
class GraphFamily {
public:
    explicit GraphFamily(std::vector<KGraph> hosts);

    auto n() const noexcept -> int { return _hosts.front().n(); }
    auto k() const noexcept -> int { return _hosts.front().k(); }
    auto size() const noexcept -> std::size_t { return _hosts.size(); }
    auto hosts() const noexcept -> const std::vector<KGraph> & { return _hosts; }
    auto host(std::size_t i) const -> const KGraph & { return _hosts.at(i); }
    /// Every edge of some host.
    auto union_graph() const -> KGraph;

private:
    std::vector<KGraph> _hosts;
};

/// A manifest lists one host file per line; relative paths are taken from
/// the manifest's directory. Blank lines and lines starting with '#' are skipped.
auto read_family(const std::filesystem::path & manifest) -> GraphFamily;

struct RainbowTiling {
    Tiling tiling;
    /// assignment[3c + j] hosts edge slot j (base 1, base 2, spine) of copy c.
    std::vector<int> assignment;
};

struct RainbowResult {
    Verdict verdict = Verdict::unknown;
    std::optional<RainbowTiling> tiling;
    std::uint64_t nodes = 0;
};

/// Exact cover over the copies of T_k in the union of the hosts, pruned as
/// soon as the chosen copies' edge slots cannot be matched to distinct hosts.
/// Each host carries exactly one edge, so the family must have 3n/(2k-1) members.
auto rainbow_perfect_tiling(const GraphFamily & family, std::uint64_t budget = 50'000'000,
    std::uint64_t cap = default_copy_cap) -> RainbowResult;

struct ColorCovering {
    Verdict verdict = Verdict::unknown;
    /// map[p] is the image of pattern vertex p.
    std::vector<Vertex> map;
    /// Index into pattern.edges() of the edge sent into H_1.
    std::size_t designated = 0;
    std::uint64_t nodes = 0;
};

/// Tries each pattern edge in turn as the one that goes to H_1, all others to H_2.
auto color_covering_homomorphism(const KGraph & pattern, const KGraph & h1, const KGraph & h2,
    std::uint64_t budget = 50'000'000) -> ColorCovering;

}
