#include "skewx/series.hpp"

#include <algorithm>

namespace skewx {

TruncSeries make_series(Ext ext, size_t trunc, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.arity() != ext->n) throw DomainError("series: word arity mismatch");
        if (!same_ring(it->second.ring(), ext->ring))
            throw DomainError("series: descriptor mismatch");
        if (it->first.length() > trunc)
            throw DomainError("series stores a word beyond its truncation order");
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    return TruncSeries{std::move(ext), trunc, std::move(terms)};
}

TruncSeries series_from_poly(const SkewPoly& p, size_t trunc) {
    TermMap kept;
    for (const auto& [w, c] : p.terms())
        if (w.length() <= trunc) kept.emplace(w, c);
    return TruncSeries{p.ext(), trunc, std::move(kept)};
}

TruncSeries truncate(const TruncSeries& s, size_t q) {
    TermMap kept;
    for (const auto& [w, c] : s.terms)
        if (w.length() <= q) kept.emplace(w, c);
    return TruncSeries{s.ext, std::min(q, s.trunc), std::move(kept)};
}

std::optional<size_t> nq_bound(const Ext& ext, const RingElem& a, size_t q,
                               const NqOptions& opts) {
    auto n0 = nilpotence_bound(*ext->delta, a, opts.composition_cap);
    if (!n0) return std::nullopt;
    size_t bound = *n0;
    for (size_t step = 0; step < q; ++step) {
        // joint kill bound for every coefficient of a*w over |w| = bound
        size_t p = 1;
        for (const Word& w : enumerate_words(bound, ext->n, opts.word_cap)) {
            SkewPoly aw = push_left_coefficient(ext, a, w);
            for (const auto& [v, c] : aw.terms()) {
                auto pc = nilpotence_bound(*ext->delta, c, opts.composition_cap);
                if (!pc) return std::nullopt;
                p = std::max(p, *pc);
            }
        }
        bound += p;
    }
    return bound;
}

TruncSeries series_mul_trunc(const TruncSeries& f, const TruncSeries& g, size_t q,
                             const NqOptions& opts) {
    if (!same_extension(f.ext, g.ext)) throw DomainError("series mul: extension mismatch");
    if (f.trunc < q)
        throw InsufficientTruncation(f.trunc, q);

    // s(q) = max N_q over the coefficients of f on words of length <= q
    size_t s_of_q = 1;
    for (const auto& [v, b] : f.terms) {
        if (v.length() > q) continue;
        auto nq = nq_bound(f.ext, b, q, opts);
        if (!nq) throw UnknownNilpotence();
        s_of_q = std::max(s_of_q, *nq);
    }
    if (g.trunc < s_of_q) throw InsufficientTruncation(g.trunc, s_of_q);

    TermMap fkept, gkept;
    for (const auto& [v, b] : f.terms)
        if (v.length() <= q) fkept.emplace(v, b);
    for (const auto& [w, c] : g.terms)
        if (w.length() < s_of_q) gkept.emplace(w, c);
    SkewPoly prod = SkewPoly::from_terms(f.ext, std::move(fkept)) *
                    SkewPoly::from_terms(g.ext, std::move(gkept));

    TermMap out;
    for (const auto& [u, c] : prod.terms())
        if (u.length() <= q) out.emplace(u, c);
    return TruncSeries{f.ext, q, std::move(out)};
}

std::optional<size_t> ord_series(const TruncSeries& s) {
    if (s.terms.empty()) return std::nullopt;
    return s.terms.begin()->first.length();
}

std::string render_series(const TruncSeries& s) {
    std::string body = SkewPoly::from_terms(s.ext, s.terms).str();
    return body + " + O(" + std::to_string(s.trunc + 1) + ")";
}

}  // namespace skewx
