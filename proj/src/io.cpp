#include "skewx/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace skewx {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// ring-spec documents
// ---------------------------------------------------------------------------

Int json_int(const json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SpecError("at " + path + ": '" + v.get<std::string>() + "' is not an integer");
        }
    }
    if (v.is_number_integer()) return Int(v.get<long>());
    throw SpecError("at " + path + ": expected an integer (number or string)");
}

Ring parse_ring_descriptor(const json& v, const std::string& path) {
    if (!v.is_object() || !v.contains("kind"))
        throw SpecError("at " + path + ": expected an object with a 'kind' field");
    std::string kind = v.at("kind").get<std::string>();
    if (kind == "integers") return RingDescriptor::integers();
    if (kind == "rationals") return RingDescriptor::rationals();
    if (kind == "integers_mod") {
        if (!v.contains("modulus")) throw SpecError("at " + path + ": integers_mod needs 'modulus'");
        return RingDescriptor::integers_mod(json_int(v.at("modulus"), path + ".modulus"));
    }
    if (kind == "poly") {
        if (!v.contains("base") || !v.contains("vars"))
            throw SpecError("at " + path + ": poly needs 'base' and 'vars'");
        std::vector<std::string> vars = v.at("vars").get<std::vector<std::string>>();
        static const std::regex reserved("^x[0-9]*$");
        for (const auto& name : vars)
            if (std::regex_match(name, reserved))
                throw SpecError("at " + path + ".vars: variable name '" + name +
                                "' collides with the skew generator tokens x1, x2, ...");
        return RingDescriptor::poly(parse_ring_descriptor(v.at("base"), path + ".base"),
                                    std::move(vars));
    }
    if (kind == "trunc_poly") {
        if (!v.contains("base") || !v.contains("var") || !v.contains("k"))
            throw SpecError("at " + path + ": trunc_poly needs 'base', 'var' and 'k'");
        std::string var = v.at("var").get<std::string>();
        static const std::regex reserved("^x[0-9]*$");
        if (std::regex_match(var, reserved))
            throw SpecError("at " + path + ".var: variable name '" + var +
                            "' collides with the skew generator tokens x1, x2, ...");
        Int k = json_int(v.at("k"), path + ".k");
        if (k < 2 || !k.fits_uint_p())
            throw SpecError("at " + path + ".k: nilpotency order must be an integer >= 2");
        return RingDescriptor::trunc_poly(parse_ring_descriptor(v.at("base"), path + ".base"),
                                          std::move(var), static_cast<unsigned>(k.get_ui()));
    }
    throw SpecError("at " + path + ": unknown ring kind '" + kind + "'");
}

RingElem parse_entry(const Ring& ring, const json& v, const std::string& path) {
    if (!v.is_string()) throw SpecError("at " + path + ": entries must be strings");
    try {
        return parse_ring_literal(ring, v.get<std::string>());
    } catch (const std::runtime_error& e) {
        throw SpecError("at " + path + ": " + e.what());
    }
}

}  // namespace

Ext load_ring_spec_text(const std::string& text, const LoadOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("ring spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("ring spec must be a JSON object");
    if (!doc.contains("ring")) throw SpecError("ring spec needs a 'ring' section");
    Ring ring = parse_ring_descriptor(doc.at("ring"), "$.ring");

    Int n_raw = doc.contains("n") ? json_int(doc.at("n"), "$.n") : Int(1);
    if (n_raw < 1 || !n_raw.fits_uint_p()) throw SpecError("at $.n: arity must be a positive integer");
    unsigned n = static_cast<unsigned>(n_raw.get_ui());

    std::map<std::string, RingMatrix> sigma_images;
    if (doc.contains("sigma")) {
        const json& s = doc.at("sigma");
        if (!s.is_object()) throw SpecError("at $.sigma: expected an object of generator images");
        for (const auto& [name, rows] : s.items()) {
            std::string path = "$.sigma." + name;
            if (!rows.is_array() || rows.size() != n)
                throw SpecError("at " + path + ": expected " + std::to_string(n) + " rows");
            RingMatrix img(ring, n, n);
            for (unsigned i = 0; i < n; ++i) {
                const json& row = rows.at(i);
                if (!row.is_array() || row.size() != n)
                    throw SpecError("at " + path + "[" + std::to_string(i) + "]: expected " +
                                    std::to_string(n) + " entries");
                for (unsigned j = 0; j < n; ++j)
                    img.at(i, j) = parse_entry(ring, row.at(j),
                                               path + "[" + std::to_string(i) + "][" +
                                                   std::to_string(j) + "]");
            }
            sigma_images.emplace(name, std::move(img));
        }
    }

    std::shared_ptr<const SigmaHom> sigma;
    try {
        sigma = std::make_shared<SigmaHom>(
            sigma_images.empty() ? SigmaHom::scalar(ring, n)
                                 : SigmaHom::from_images(ring, n, std::move(sigma_images)));
    } catch (const DomainError& e) {
        throw SpecError(std::string("at $.sigma: ") + e.what());
    }

    std::shared_ptr<const SigmaDerivation> delta;
    try {
        if (!doc.contains("delta")) {
            delta = std::make_shared<SigmaDerivation>(SigmaDerivation::zero(sigma));
        } else {
            const json& d = doc.at("delta");
            if (!d.is_object()) throw SpecError("at $.delta: expected an object");
            if (d.contains("inner")) {
                const json& iv = d.at("inner");
                if (!iv.is_array() || iv.size() != n)
                    throw SpecError("at $.delta.inner: expected " + std::to_string(n) +
                                    " entries");
                std::vector<RingElem> c;
                for (unsigned j = 0; j < n; ++j)
                    c.push_back(parse_entry(ring, iv.at(j),
                                            "$.delta.inner[" + std::to_string(j) + "]"));
                delta = std::make_shared<SigmaDerivation>(
                    SigmaDerivation::inner(sigma, std::move(c)));
            } else {
                std::map<std::string, std::vector<RingElem>> images;
                for (const auto& [name, row] : d.items()) {
                    std::string path = "$.delta." + name;
                    if (!row.is_array() || row.size() != n)
                        throw SpecError("at " + path + ": expected " + std::to_string(n) +
                                        " entries");
                    std::vector<RingElem> vec;
                    for (unsigned j = 0; j < n; ++j)
                        vec.push_back(
                            parse_entry(ring, row.at(j), path + "[" + std::to_string(j) + "]"));
                    images.emplace(name, std::move(vec));
                }
                delta = std::make_shared<SigmaDerivation>(
                    SigmaDerivation::from_images(sigma, std::move(images)));
            }
        }
    } catch (const DomainError& e) {
        throw SpecError(std::string("at $.delta: ") + e.what());
    }

    try {
        return make_extension(sigma, delta, opts.validation_seed, opts.validation_budget);
    } catch (const DomainError& e) {
        throw SpecError(std::string("law check failed: ") + e.what());
    }
}

Ext load_ring_spec_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open ring spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_ring_spec_text(buf.str(), opts);
}

// ---------------------------------------------------------------------------
// skew expression grammar
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    ExprParser(const Ext& ext, std::string_view text) : ext_(ext), text_(text) {}

    ExprAst run() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input in expression", pos_);
        return e;
    }

private:
    ExprAst expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        ExprAst acc = term();
        if (neg) acc = ExprAst{ExprAst::Node::Neg, {std::move(acc)}};
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = ExprAst{ExprAst::Node::Add, {std::move(acc), term()}};
            } else if (c == '-') {
                ++pos_;
                acc = ExprAst{ExprAst::Node::Sub, {std::move(acc), term()}};
            } else {
                return acc;
            }
        }
    }

    ExprAst term() {
        ExprAst acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = ExprAst{ExprAst::Node::Mul, {std::move(acc), factor()}};
            } else {
                return acc;
            }
        }
    }

    ExprAst factor() {
        ExprAst base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) throw ParseError("expected a non-negative exponent", pos_);
            ExprAst p{ExprAst::Node::Pow, {std::move(base)}};
            p.exponent = std::stoull(std::string(text_.substr(start, pos_ - start)));
            return p;
        }
        return base;
    }

    ExprAst atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprAst e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == '[') {
            size_t start = ++pos_;
            int depth = 1;
            while (pos_ < text_.size() && depth > 0) {
                if (text_[pos_] == '[') ++depth;
                if (text_[pos_] == ']') --depth;
                ++pos_;
            }
            if (depth != 0) throw ParseError("unterminated '[' coefficient", start - 1);
            std::string inner(text_.substr(start, pos_ - 1 - start));
            ExprAst a{ExprAst::Node::Coeff, {}};
            a.value = parse_ring_literal(ext_->ring, inner);
            return a;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_integer();
            skip_ws();
            // bare fraction literal p/q
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected a denominator", pos_);
                Int den = read_integer();
                RingElem d = RingElem::from_int(ext_->ring, den);
                auto dinv = d.try_invert();
                if (!dinv)
                    throw DomainError("fraction literal " + num.get_str() + "/" + den.get_str() +
                                      " has a non-invertible denominator in " +
                                      ring_name(ext_->ring));
                ExprAst a{ExprAst::Node::Coeff, {}};
                a.value = RingElem::from_int(ext_->ring, num) * *dinv;
                return a;
            }
            ExprAst a{ExprAst::Node::Coeff, {}};
            a.value = RingElem::from_int(ext_->ring, num);
            return a;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name.size() > 1 && name[0] == 'x' &&
                std::all_of(name.begin() + 1, name.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                unsigned long idx = std::stoul(name.substr(1));
                if (idx < 1 || idx > ext_->n)
                    throw ParseError("generator " + name + " out of range for arity " +
                                         std::to_string(ext_->n),
                                     start);
                ExprAst a{ExprAst::Node::Var, {}};
                a.var_index = static_cast<unsigned>(idx);
                return a;
            }
            try {
                ExprAst a{ExprAst::Node::Coeff, {}};
                a.value = RingElem::variable(ext_->ring, name);
                return a;
            } catch (const DomainError&) {
                throw ParseError("unknown variable '" + name + "'", start);
            }
        }
        throw ParseError("expected a variable, coefficient or '('", pos_);
    }

    Int read_integer() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const Ext& ext_;
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expr(const Ext& ext, std::string_view text) {
    return ExprParser(ext, text).run();
}

SkewPoly normalize_expr(const Ext& ext, const ExprAst& ast) {
    switch (ast.node) {
        case ExprAst::Node::Add:
            return normalize_expr(ext, ast.children[0]) + normalize_expr(ext, ast.children[1]);
        case ExprAst::Node::Sub:
            return normalize_expr(ext, ast.children[0]) - normalize_expr(ext, ast.children[1]);
        case ExprAst::Node::Mul:
            return normalize_expr(ext, ast.children[0]) * normalize_expr(ext, ast.children[1]);
        case ExprAst::Node::Pow: return normalize_expr(ext, ast.children[0]).pow(ast.exponent);
        case ExprAst::Node::Neg: return -normalize_expr(ext, ast.children[0]);
        case ExprAst::Node::Var: return SkewPoly::generator(ext, ast.var_index);
        case ExprAst::Node::Coeff: return SkewPoly::constant(ext, *ast.value);
    }
    throw DomainError("bad AST node");
}

SkewPoly parse_skew_poly(const Ext& ext, std::string_view text) {
    return normalize_expr(ext, parse_expr(ext, text));
}

}  // namespace skewx
