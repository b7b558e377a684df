#include "tktile/rational.hpp"
#include "tktile/error.hpp"

#include <cctype>

namespace tktile {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::invalid_arity: return "InvalidArity";
        case ErrorKind::invalid_vertex: return "InvalidVertex";
        case ErrorKind::invalid_uniformity: return "InvalidUniformity";
        case ErrorKind::too_few_vertices: return "TooFewVertices";
        case ErrorKind::budget_exceeded: return "BudgetExceeded";
        case ErrorKind::divisibility: return "DivisibilityError";
        case ErrorKind::generation_failed: return "GenerationFailed";
        case ErrorKind::invalid_coloring: return "InvalidColoring";
        case ErrorKind::invalid_dimension: return "InvalidDimension";
        case ErrorKind::invalid_partite_structure: return "InvalidPartiteStructure";
        case ErrorKind::invalid_edge_profile: return "InvalidEdgeProfile";
        case ErrorKind::empty_graph: return "EmptyGraph";
        case ErrorKind::invalid_family: return "InvalidFamily";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::invalid_argument: return "InvalidArgument";
        case ErrorKind::guard_exceeded: return "GuardExceeded";
    }
    return "Error";
}

auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
        case Verdict::yes: return "decided-yes";
        case Verdict::no: return "decided-no";
        case Verdict::unknown: return "unknown-budget";
    }
    return "unknown-budget";
}

namespace {
    auto all_digits(std::string_view s) -> bool
    {
        if (s.empty())
            return false;
        for (char c : s)
            if (! std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    }
}

auto parse_rational(std::string_view text) -> Rational
{
    std::string_view body = text;
    bool negative = false;
    if (! body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (! all_digits(num) || ! all_digits(den))
        throw Error(ErrorKind::parse_error, "not an exact rational \"" + std::string(text) + "\" (expected p or p/q)");
    Integer p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0)
        throw Error(ErrorKind::parse_error, "zero denominator in \"" + std::string(text) + "\"");
    Rational r(negative ? Integer(-p) : p, q);
    r.canonicalize();
    return r;
}

auto to_pq_string(const Rational & value) -> std::string
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

auto pow(const Rational & base, unsigned exponent) -> Rational
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

auto RationalRoot::to_string() const -> std::string
{
    if (root == 1)
        return to_pq_string(base);
    return "(" + to_pq_string(base) + ")^(1/" + std::to_string(root) + ")";
}

auto compare(const Rational & x, const RationalRoot & r, const Rational & scale) -> int
{
    // x, scale, r.base are all nonnegative, so raising both sides to the
    // root-th power preserves order.
    Rational lhs = pow(x, r.root);
    Rational rhs = r.base * pow(scale, r.root);
    return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

auto compare_one_minus(const Rational & x, const RationalRoot & r, const Rational & scale) -> int
{
    // sign(x - (1 - r) * scale) = sign(r * scale - (scale - x))
    Rational y = scale - x;
    if (y < 0)
        return 1;
    if (y == 0)
        return (r.base == 0 || scale == 0) ? 0 : 1;
    return -compare(y, r, scale);
}

auto nth_root(const RationalRoot & r, unsigned extra_root) -> RationalRoot
{
    return RationalRoot{r.base, r.root * extra_root};
}

}
