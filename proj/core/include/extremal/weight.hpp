#pragma once

#include <memory>
#include <string>

#include "extremal/types.hpp"

namespace extremal {

/// Clip value standing in for -inf in weight and field evaluations.
inline constexpr double kWeightFloor = -1e6;

/// An upper semicontinuous weight q on C^n given by an expression over the
/// coordinates z1..zn. The grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := number | zK | re(expr) | im(expr) | abs(expr) | log(expr)
///           | max(expr, expr) | min(expr, expr) | '(' expr ')' | '-' factor
///
/// Complex-valued subexpressions (those containing a coordinate) may appear
/// only under abs/re/im; log, max and min take real arguments, and the whole
/// expression must be real-valued. Every expressible weight is continuous
/// into [-inf, +inf); values below the floor (and non-finite values, e.g.
/// log 0) are clipped to kWeightFloor with an explicit flag.
class Weight {
public:
    struct Value {
        double value = 0.0;
        bool clipped = false;
    };

    /// Throws ParseError with position and expected-token set.
    static Weight parse(const std::string& source);
    static Weight zero();
    static Weight constant(double c);

    Value operator()(const AffinePoint& z) const;

    /// True when the expression references no coordinate.
    bool is_constant() const;
    Value constant_value() const;

    /// Highest coordinate index referenced (0 when constant).
    int max_coordinate() const;

    /// Canonical text form; parsing it back yields an identical tree.
    std::string to_string() const;

    bool operator==(const Weight& other) const;

    struct Node;

private:
    explicit Weight(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace extremal
