#ifndef SKEWX_IO_HPP
#define SKEWX_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewx/poly.hpp"

namespace skewx {

struct LoadOptions {
    uint64_t validation_seed = 0;
    size_t validation_budget = 64;
};

/// Parse and validate a ring-spec document:
///   {"ring": {...}, "n": 2, "sigma": {"t": [["t","0"],["0","0"]]},
///    "delta": {"t": ["1","0"]}}
/// delta may be absent (zero) or {"inner": ["c1", ...]}. All entries are
/// strings in the coefficient grammar. The law validators run at load time.
Ext load_ring_spec_text(const std::string& text, const LoadOptions& opts = {});
Ext load_ring_spec_file(const std::string& path, const LoadOptions& opts = {});

/// AST of the skew expression grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" nat)?
///   atom   := var | coeff | "(" expr ")"
///   var    := "x" nat
///   coeff  := "[" ring-literal "]" | integer | fraction | ring variable name
struct ExprAst {
    enum class Node { Add, Sub, Mul, Pow, Neg, Var, Coeff };
    Node node;
    std::vector<ExprAst> children;
    uint64_t exponent = 0;           // Pow
    unsigned var_index = 0;          // Var (1-based)
    std::optional<RingElem> value;   // Coeff
};

ExprAst parse_expr(const Ext& ext, std::string_view text);
/// Evaluate the AST in the extension; every coefficient is pushed into
/// right-normal form by the rewrite engine.
SkewPoly normalize_expr(const Ext& ext, const ExprAst& ast);
/// parse + normalize; "-" reads an expression from stdin in the CLI.
SkewPoly parse_skew_poly(const Ext& ext, std::string_view text);

}  // namespace skewx

#endif
