#ifndef SKEWX_POLY_HPP
#define SKEWX_POLY_HPP

#include <map>
#include <optional>
#include <string>

#include "skewx/skew.hpp"
#include "skewx/words.hpp"

namespace skewx {

using TermMap = std::map<Word, RingElem, DeglexLess>;

/// Element of the free skew extension in right-coefficient normal form
/// sum_w w*a_w. No zero coefficient is ever stored; the zero polynomial has
/// an empty term map. Values are immutable.
class SkewPoly {
public:
    static SkewPoly zero(Ext ext);
    static SkewPoly one(Ext ext);
    static SkewPoly constant(Ext ext, RingElem a);
    static SkewPoly generator(Ext ext, unsigned j);
    static SkewPoly monomial(Ext ext, Word w, RingElem a);
    static SkewPoly from_terms(Ext ext, TermMap terms);

    const Ext& ext() const { return ext_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of w (zero if absent).
    RingElem coeff(const Word& w) const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    /// Normal-form product via the rewrite rule a*x_j = sum_i x_i sigma_ij(a) + delta_j(a).
    SkewPoly operator*(const SkewPoly& o) const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    SkewPoly pow(uint64_t e) const;
    /// Coefficientwise right multiplication by a ring element (no rewriting).
    SkewPoly right_scale(const RingElem& c) const;
    /// Pure word left-multiplication w * f (concatenation, no rewriting).
    SkewPoly word_prefix(const Word& w) const;

    /// Max word length with a nonzero coefficient; nullopt encodes deg(0) = -infinity.
    std::optional<size_t> deg() const;
    /// Min word length with a nonzero coefficient. Throws ZeroPolynomial.
    size_t ord() const;
    /// Deglex-maximal term. Throws ZeroPolynomial.
    std::pair<Word, RingElem> leading() const;

    SkewPoly graded_component(size_t r) const;
    bool in_filtration(size_t m) const;
    /// True when every term's word is deglex-strictly below w.
    bool below_word(const Word& w) const;

    /// Canonical text: ascending deglex, "w*[coeff]" with unit coefficients
    /// elided, "0" for zero.
    std::string str() const;

private:
    SkewPoly(Ext ext, TermMap terms) : ext_(std::move(ext)), terms_(std::move(terms)) {}
    Ext ext_;
    TermMap terms_;
};

/// Normal form of a*w computed by the defining recursion
///   push(a, 1) = a,
///   push(a, x_j w') = sum_i x_i push(sigma_ij(a), w') + push(delta_j(a), w').
SkewPoly push_left_coefficient(const Ext& ext, const RingElem& a, const Word& w);

/// Memoizing rewrite engine; memoization is on (a, w) and lives for one
/// multiplication call.
class PushEngine {
public:
    explicit PushEngine(Ext ext) : ext_(std::move(ext)) {}
    const TermMap& push(const RingElem& a, const Word& w);

private:
    struct KeyLess {
        bool operator()(const std::pair<RingElem, Word>& x,
                        const std::pair<RingElem, Word>& y) const {
            int c = RingElem::compare(x.first, y.first);
            if (c != 0) return c < 0;
            return cmp_deglex(x.second, y.second) < 0;
        }
    };
    Ext ext_;
    std::map<std::pair<RingElem, Word>, TermMap, KeyLess> memo_;
};

std::string render_degree(const std::optional<size_t>& d);  // "-inf" for nullopt

/// Random skew polynomial with deg <= max_deg (possibly zero).
SkewPoly random_skew_poly(const Ext& ext, Rng& rng, size_t max_deg, int coeff_deg = 3,
                          int coeff_bound = 5);

}  // namespace skewx

#endif
