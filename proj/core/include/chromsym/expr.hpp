#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromsym/graph.hpp"
#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

struct SourceLocation {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceLocation loc)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                             ": " + message),
          location_(loc) {}
    SourceLocation location() const { return location_; }

private:
    SourceLocation location_;
};

/// Expression AST. Basis atoms carry validated partitions, skew atoms
/// validated diagrams, chromatic atoms fully parsed graphs.
struct Expr {
    enum class Kind { constant, basis_atom, skew_atom, chromatic_atom, add, sub, mul, pow, neg };

    Kind kind;
    SourceLocation loc;

    Rational value;                      // constant
    BasisName basis = BasisName::p;      // basis_atom
    Partition partition;                 // basis_atom
    std::optional<SkewDiagram> skew;     // skew_atom
    std::optional<Graph> graph;          // chromatic_atom
    int exponent = 0;                    // pow
    std::vector<std::shared_ptr<const Expr>> children;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Recursive-descent parse: ^ over * over +/-, left associative,
/// parentheses. Partitions as [2,1], skew shapes as s[[3,2]/[1]],
/// chromatic atoms as X(K3+K2) or X(G(4; 1-2, 2-3)).
ExprPtr parse_expression(const std::string& input);

/// Graph expressions alone: K5, G(4; 1-2, 2-3, 3-4), and + for unions.
Graph parse_graph(const std::string& input);

struct EvalLimits {
    int edge_cap = 24;
    int vertex_cap = 12;
};

/// Bottom-up evaluation into a SymFunc. Chromatic atoms use the edge-subset
/// formula, falling back to the stable-partition formula when the edge count
/// exceeds the cap; ResourceError (with the atom's location prefixed) when
/// both caps are exceeded.
SymFunc evaluate(const Expr& e, const EvalLimits& limits = {});

/// Parseable rendering of the AST.
std::string print_expr(const Expr& e);

/// "m[2,1] + 2*m[1,1,1]" in canonical term order; "0" for zero.
std::string print_symfunc(const SymFunc& f, BasisName b);
std::string print_coefficients(const std::map<Partition, Rational>& coeffs, BasisName b);

}  // namespace chromsym
