#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tktile {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-'), q > 0. Floats are rejected.
auto parse_rational(std::string_view text) -> Rational;

/// Always "p/q", canonical (reduced, q > 0).
auto to_pq_string(const Rational & value) -> std::string;

auto pow(const Rational & base, unsigned exponent) -> Rational;

/// The nonnegative real base^(1/root), kept symbolic so every comparison
/// against it stays exact.
struct RationalRoot {
    Rational base{0};
    unsigned root = 1;

    static auto of(const Rational & value) -> RationalRoot { return {value, 1}; }

    auto is_rational() const -> bool { return root == 1; }
    auto to_string() const -> std::string;
};

/// Compares a nonnegative rational x against r.value * scale, scale >= 0.
/// Returns <0, 0, >0 like a three-way compare.
auto compare(const Rational & x, const RationalRoot & r, const Rational & scale = Rational(1)) -> int;

/// 1 - r, compared to a rational: sign of (x - (1 - r.value)) * scale.
auto compare_one_minus(const Rational & x, const RationalRoot & r, const Rational & scale) -> int;

/// r^(1/extra_root) as a new symbolic root (defaults: gamma' = gamma^(1/4) etc).
auto nth_root(const RationalRoot & r, unsigned extra_root) -> RationalRoot;

}
