#ifndef SKEWX_ORACLE_HPP
#define SKEWX_ORACLE_HPP

#include "skewx/poly.hpp"

namespace skewx {

/// Finitely supported function <X> -> R. The generators of the extension act
/// on these on the right by
///   (f x_j)(m z_i) = sigma_ij(f(m)) + delta_j(f(m z_i)),
///   (f x_j)(1)     = delta_j(f(1)),
/// and ring elements act by pointwise right multiplication. This is the
/// operator model of the existence construction and shares no code with the
/// rewrite engine.
class SupportedFunction {
public:
    static SupportedFunction zero(Ext ext);
    /// Characteristic function of the empty word.
    static SupportedFunction indicator_one(Ext ext);

    const Ext& ext() const { return ext_; }
    const TermMap& values() const { return values_; }
    size_t support_size() const { return values_.size(); }
    RingElem value_at(const Word& w) const;

    SupportedFunction apply_generator(unsigned j) const;
    SupportedFunction apply_scalar(const RingElem& r) const;
    SupportedFunction operator+(const SupportedFunction& o) const;

    /// Apply the operator of a whole polynomial: per term, the generator
    /// actions of the word followed by the scalar action of the coefficient,
    /// summed over terms.
    SupportedFunction apply_poly(const SkewPoly& p) const;

private:
    SupportedFunction(Ext ext, TermMap values)
        : ext_(std::move(ext)), values_(std::move(values)) {}
    Ext ext_;
    TermMap values_;
};

/// Independent multiplication: run the indicator of the empty word through
/// the operators of f and then g; the values of the resulting function are
/// the normal-form coefficients of f*g.
SkewPoly oracle_mul(const SkewPoly& f, const SkewPoly& g);

}  // namespace skewx

#endif
