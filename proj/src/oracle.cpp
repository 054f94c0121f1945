#include "skewx/oracle.hpp"

namespace skewx {

namespace {

void accumulate(TermMap& acc, const Word& w, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

SupportedFunction SupportedFunction::zero(Ext ext) {
    return SupportedFunction(std::move(ext), {});
}

SupportedFunction SupportedFunction::indicator_one(Ext ext) {
    TermMap v;
    v.emplace(Word(ext->n), RingElem::one(ext->ring));
    return SupportedFunction(std::move(ext), std::move(v));
}

RingElem SupportedFunction::value_at(const Word& w) const {
    auto it = values_.find(w);
    return it == values_.end() ? RingElem::zero(ext_->ring) : it->second;
}

SupportedFunction SupportedFunction::apply_generator(unsigned j) const {
    if (j < 1 || j > ext_->n) throw DomainError("apply_generator: index out of range");
    TermMap out;
    for (const auto& [m, val] : values_) {
        // delta part: contributes delta_j(f(u)) at u itself (covers u = 1 too)
        accumulate(out, m, ext_->delta->component(val, j));
        // sigma part: contributes sigma_ij(f(m)) at m z_i
        for (unsigned i = 1; i <= ext_->n; ++i) {
            RingElem s = ext_->sigma->entry(val, i, j);
            if (!s.is_zero()) accumulate(out, m.append(i), s);
        }
    }
    return SupportedFunction(ext_, std::move(out));
}

SupportedFunction SupportedFunction::apply_scalar(const RingElem& r) const {
    if (!same_ring(r.ring(), ext_->ring))
        throw DomainError("apply_scalar: descriptor mismatch");
    TermMap out;
    for (const auto& [m, val] : values_) accumulate(out, m, val * r);
    return SupportedFunction(ext_, std::move(out));
}

SupportedFunction SupportedFunction::operator+(const SupportedFunction& o) const {
    if (!same_extension(ext_, o.ext_)) throw DomainError("function sum: extension mismatch");
    TermMap out = values_;
    for (const auto& [m, val] : o.values_) accumulate(out, m, val);
    return SupportedFunction(ext_, std::move(out));
}

SupportedFunction SupportedFunction::apply_poly(const SkewPoly& p) const {
    if (!same_extension(ext_, p.ext())) throw DomainError("apply_poly: extension mismatch");
    SupportedFunction acc = zero(ext_);
    for (const auto& [w, a] : p.terms()) {
        SupportedFunction t = *this;
        for (unsigned j : w.letters()) t = t.apply_generator(j);
        acc = acc + t.apply_scalar(a);
    }
    return acc;
}

SkewPoly oracle_mul(const SkewPoly& f, const SkewPoly& g) {
    if (!same_extension(f.ext(), g.ext())) throw DomainError("oracle_mul: extension mismatch");
    SupportedFunction h = SupportedFunction::indicator_one(f.ext()).apply_poly(f).apply_poly(g);
    TermMap terms = h.values();
    return SkewPoly::from_terms(f.ext(), std::move(terms));
}

}  // namespace skewx
