#include "skewx/poly.hpp"

namespace skewx {

namespace {

void add_term(TermMap& acc, const Word& w, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
}

void require_same_ext(const SkewPoly& a, const SkewPoly& b, const char* op) {
    if (!same_extension(a.ext(), b.ext()))
        throw DomainError(std::string(op) + ": extension mismatch");
}

}  // namespace

SkewPoly SkewPoly::zero(Ext ext) { return SkewPoly(std::move(ext), {}); }

SkewPoly SkewPoly::one(Ext ext) { return constant(ext, RingElem::one(ext->ring)); }

SkewPoly SkewPoly::constant(Ext ext, RingElem a) {
    if (!same_ring(a.ring(), ext->ring)) throw DomainError("constant: descriptor mismatch");
    TermMap t;
    if (!a.is_zero()) t.emplace(Word(ext->n), std::move(a));
    return SkewPoly(std::move(ext), std::move(t));
}

SkewPoly SkewPoly::generator(Ext ext, unsigned j) {
    Word w = Word(ext->n).append(j);
    return monomial(std::move(ext), std::move(w), RingElem::one(ext->ring));
}

SkewPoly SkewPoly::monomial(Ext ext, Word w, RingElem a) {
    if (w.arity() != ext->n) throw DomainError("monomial: word arity mismatch");
    if (!same_ring(a.ring(), ext->ring)) throw DomainError("monomial: descriptor mismatch");
    TermMap t;
    if (!a.is_zero()) t.emplace(std::move(w), std::move(a));
    return SkewPoly(std::move(ext), std::move(t));
}

SkewPoly SkewPoly::from_terms(Ext ext, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.arity() != ext->n) throw DomainError("from_terms: word arity mismatch");
        if (!same_ring(it->second.ring(), ext->ring))
            throw DomainError("from_terms: descriptor mismatch");
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    return SkewPoly(std::move(ext), std::move(terms));
}

RingElem SkewPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RingElem::zero(ext_->ring) : it->second;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    require_same_ext(*this, o, "add");
    TermMap out = terms_;
    for (const auto& [w, c] : o.terms_) add_term(out, w, c);
    return SkewPoly(ext_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
    TermMap out;
    for (const auto& [w, c] : terms_) out.emplace(w, -c);
    return SkewPoly(ext_, std::move(out));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    require_same_ext(*this, o, "sub");
    TermMap out = terms_;
    for (const auto& [w, c] : o.terms_) add_term(out, w, -c);
    return SkewPoly(ext_, std::move(out));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    return same_extension(ext_, o.ext_) && terms_ == o.terms_;
}

const TermMap& PushEngine::push(const RingElem& a, const Word& w) {
    auto key = std::make_pair(a, w);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    TermMap out;
    if (!a.is_zero()) {
        if (w.empty()) {
            out.emplace(w, a);
        } else {
            unsigned j = w.letter(0);
            Word rest(w.arity(), {w.letters().begin() + 1, w.letters().end()});
            RingMatrix sig = ext_->sigma->eval(a);
            for (unsigned i = 1; i <= ext_->n; ++i) {
                const RingElem& sij = sig.at(i - 1, j - 1);
                if (sij.is_zero()) continue;
                const TermMap& tail = push(sij, rest);
                for (const auto& [u, c] : tail) {
                    std::vector<unsigned> letters;
                    letters.reserve(1 + u.length());
                    letters.push_back(i);
                    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
                    add_term(out, Word(w.arity(), std::move(letters)), c);
                }
            }
            RingElem dj = ext_->delta->component(a, j);
            if (!dj.is_zero()) {
                const TermMap& tail = push(dj, rest);
                for (const auto& [u, c] : tail) add_term(out, u, c);
            }
        }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

SkewPoly push_left_coefficient(const Ext& ext, const RingElem& a, const Word& w) {
    if (!same_ring(a.ring(), ext->ring)) throw DomainError("push: descriptor mismatch");
    if (w.arity() != ext->n) throw DomainError("push: word arity mismatch");
    PushEngine engine(ext);
    return SkewPoly::from_terms(ext, engine.push(a, w));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    require_same_ext(*this, o, "mul");
    PushEngine engine(ext_);
    TermMap out;
    for (const auto& [v, b] : terms_) {
        for (const auto& [w, c] : o.terms_) {
            // v * push(b, w) * c: prepend v (pure concatenation), then
            // multiply each coefficient on the right by c
            const TermMap& pushed = engine.push(b, w);
            for (const auto& [u, q] : pushed) add_term(out, v.concat(u), q * c);
        }
    }
    return SkewPoly(ext_, std::move(out));
}

SkewPoly SkewPoly::pow(uint64_t e) const {
    SkewPoly acc = one(ext_);
    SkewPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

SkewPoly SkewPoly::right_scale(const RingElem& c) const {
    if (!same_ring(c.ring(), ext_->ring)) throw DomainError("right_scale: descriptor mismatch");
    TermMap out;
    for (const auto& [w, q] : terms_) add_term(out, w, q * c);
    return SkewPoly(ext_, std::move(out));
}

SkewPoly SkewPoly::word_prefix(const Word& w) const {
    TermMap out;
    for (const auto& [u, c] : terms_) out.emplace(w.concat(u), c);
    return SkewPoly(ext_, std::move(out));
}

std::optional<size_t> SkewPoly::deg() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.length();
}

size_t SkewPoly::ord() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.begin()->first.length();
}

std::pair<Word, RingElem> SkewPoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return *terms_.rbegin();
}

SkewPoly SkewPoly::graded_component(size_t r) const {
    TermMap out;
    for (const auto& [w, c] : terms_)
        if (w.length() == r) out.emplace(w, c);
    return SkewPoly(ext_, std::move(out));
}

bool SkewPoly::in_filtration(size_t m) const {
    auto d = deg();
    return !d || *d <= m;
}

bool SkewPoly::below_word(const Word& w) const {
    for (const auto& [u, c] : terms_)
        if (cmp_deglex(u, w) >= 0) return false;
    return true;
}

std::string SkewPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (w.empty()) {
            out += "[" + c.str() + "]";
        } else if (c.is_one()) {
            out += w.str();
        } else {
            out += w.str() + "*[" + c.str() + "]";
        }
    }
    return out;
}

SkewPoly random_skew_poly(const Ext& ext, Rng& rng, size_t max_deg, int coeff_deg,
                          int coeff_bound) {
    TermMap terms;
    size_t nterms = 1 + rng.below(3);
    for (size_t t = 0; t < nterms; ++t) {
        size_t len = rng.below(max_deg + 1);
        std::vector<unsigned> letters;
        for (size_t i = 0; i < len; ++i)
            letters.push_back(1 + static_cast<unsigned>(rng.below(ext->n)));
        Word w(ext->n, std::move(letters));
        RingElem c = random_element(ext->ring, rng, coeff_deg, coeff_bound);
        if (c.is_zero()) continue;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(std::move(w), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return SkewPoly::from_terms(ext, std::move(terms));
}

std::string render_degree(const std::optional<size_t>& d) {
    return d ? std::to_string(*d) : "-inf";
}

}  // namespace skewx
