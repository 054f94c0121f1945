#include "skewx/skew.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace skewx {

namespace {

bool has_generators(const Ring& r) {
    return r->kind == RingKind::Poly || r->kind == RingKind::TruncPoly;
}

RingMatrix scalar_matrix(const RingElem& a, unsigned n) {
    RingMatrix m(a.ring(), n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = a;
    return m;
}

// embed a base-field coefficient as a constant of the poly/trunc ring
RingElem embed_constant(const Ring& r, const RingElem& c) {
    if (r->kind == RingKind::Poly)
        return RingElem::make_poly(r, {{Monomial(r->vars.size(), 0), c}});
    return RingElem::make_trunc(r, {c});
}

}  // namespace

// ---------------------------------------------------------------------------
// SigmaHom
// ---------------------------------------------------------------------------

SigmaHom SigmaHom::scalar(Ring ring, unsigned n) {
    if (n == 0) throw DomainError("extension arity must be positive");
    return SigmaHom(std::move(ring), n);
}

SigmaHom SigmaHom::from_images(Ring ring, unsigned n,
                               std::map<std::string, RingMatrix> gen_images) {
    return build(std::move(ring), n, std::move(gen_images), true);
}

SigmaHom SigmaHom::from_images_unchecked(Ring ring, unsigned n,
                                         std::map<std::string, RingMatrix> gen_images) {
    return build(std::move(ring), n, std::move(gen_images), false);
}

SigmaHom SigmaHom::build(Ring ring, unsigned n, std::map<std::string, RingMatrix> gen_images,
                         bool checked) {
    if (n == 0) throw DomainError("extension arity must be positive");
    if (!has_generators(ring)) {
        if (!gen_images.empty())
            throw DomainError("sigma on " + ring_name(ring) +
                              " is forced scalar; generator images are not allowed");
        return SigmaHom(std::move(ring), n);
    }
    SigmaHom s(ring, n);
    auto gens = ring_generators(ring);
    for (const auto& [name, img] : gen_images) {
        bool known = std::any_of(gens.begin(), gens.end(),
                                 [&](const auto& g) { return g.first == name; });
        if (!known) throw DomainError("sigma image given for unknown generator '" + name + "'");
        if (img.rows() != n || img.cols() != n)
            throw DomainError("sigma image for '" + name + "' must be " + std::to_string(n) +
                              "x" + std::to_string(n));
        if (!same_ring(img.ring(), ring))
            throw DomainError("sigma image for '" + name + "' lives in the wrong ring");
    }
    for (const auto& [name, gen] : gens) {
        auto it = gen_images.find(name);
        // a missing image defaults to the scalar one
        s.gen_images_.emplace(name, it == gen_images.end() ? scalar_matrix(gen, n) : it->second);
    }
    if (!checked) return s;
    // multivariate images must commute for the extension to be well-defined
    for (auto i = s.gen_images_.begin(); i != s.gen_images_.end(); ++i) {
        for (auto j = std::next(i); j != s.gen_images_.end(); ++j) {
            if (!(i->second * j->second == j->second * i->second))
                throw DomainError("sigma images of '" + i->first + "' and '" + j->first +
                                  "' do not commute");
        }
    }
    if (ring->kind == RingKind::TruncPoly) {
        const RingMatrix& img = s.gen_images_.at(ring->var);
        RingMatrix pw = RingMatrix::identity(ring, n);
        for (unsigned e = 0; e < ring->order; ++e) pw = pw * img;
        if (!pw.is_zero())
            throw DomainError("sigma(" + ring->var + ")^" + std::to_string(ring->order) +
                              " must vanish in M_n(" + ring_name(ring) + ")");
    }
    return s;
}

RingMatrix SigmaHom::eval(const RingElem& a) const {
    if (!same_ring(a.ring(), ring_)) throw DomainError("sigma_eval: descriptor mismatch");
    if (gen_images_.empty()) return scalar_matrix(a, n_);

    if (ring_->kind == RingKind::TruncPoly) {
        const auto& coeffs = a.trunc_value().coeffs;
        RingMatrix acc(ring_, n_, n_);
        RingMatrix pw = RingMatrix::identity(ring_, n_);
        const RingMatrix& img = gen_images_.at(ring_->var);
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (e > 0) pw = pw * img;
            if (coeffs[e].is_zero()) continue;
            acc = acc + pw * scalar_matrix(embed_constant(ring_, coeffs[e]), n_);
        }
        return acc;
    }

    // Poly: evaluate each term c * prod t_i^{e_i} at the images
    RingMatrix acc(ring_, n_, n_);
    for (const auto& [mono, c] : a.poly_value().terms) {
        RingMatrix term = scalar_matrix(embed_constant(ring_, c), n_);
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            const RingMatrix& img = gen_images_.at(ring_->vars[v]);
            for (uint32_t e = 0; e < mono[v]; ++e) term = term * img;
        }
        acc = acc + term;
    }
    return acc;
}

RingElem SigmaHom::entry(const RingElem& a, unsigned i, unsigned j) const {
    return eval(a).at(i - 1, j - 1);
}

bool SigmaHom::is_scalar() const {
    for (const auto& [name, img] : gen_images_) {
        if (!(img == scalar_matrix(RingElem::variable(ring_, name), n_))) return false;
    }
    return true;
}

bool SigmaHom::upper_triangular() const {
    // products of upper triangular matrices stay upper triangular, so the
    // generator images decide this for every sigma(a)
    for (const auto& [name, img] : gen_images_)
        if (!img.is_upper_triangular()) return false;
    return true;
}

RingElem SigmaHom::diag_map(unsigned i, const RingElem& a) const {
    if (!upper_triangular())
        throw NotTriangular("diagonal maps need an upper triangular sigma");
    if (!same_ring(a.ring(), ring_)) throw DomainError("diag_map: descriptor mismatch");
    if (gen_images_.empty()) return a;

    if (ring_->kind == RingKind::TruncPoly) {
        const RingElem img = gen_images_.at(ring_->var).at(i - 1, i - 1);
        const auto& coeffs = a.trunc_value().coeffs;
        RingElem acc = RingElem::zero(ring_);
        RingElem pw = RingElem::one(ring_);
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (e > 0) pw = pw * img;
            if (coeffs[e].is_zero()) continue;
            acc = acc + embed_constant(ring_, coeffs[e]) * pw;
        }
        return acc;
    }

    RingElem acc = RingElem::zero(ring_);
    for (const auto& [mono, c] : a.poly_value().terms) {
        RingElem term = embed_constant(ring_, c);
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            RingElem img = gen_images_.at(ring_->vars[v]).at(i - 1, i - 1);
            term = term * img.pow(mono[v]);
        }
        acc = acc + term;
    }
    return acc;
}

RingMatrix SigmaHom::power_eval(const RingElem& a, unsigned r, size_t cap) const {
    if (r == 0) throw DomainError("sigma_power needs r >= 1");
    size_t dim = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (dim > cap / n_)
            throw CapExceeded("sigma^(r) dimension n^r exceeds cap of " + std::to_string(cap));
        dim *= n_;
    }
    RingMatrix cur = eval(a);
    for (unsigned step = 1; step < r; ++step) {
        size_t d = cur.rows();
        RingMatrix next(ring_, d * n_, d * n_);
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) {
                if (cur.at(i, j).is_zero()) continue;  // sigma(0) block stays zero
                RingMatrix blk = eval(cur.at(i, j));
                for (unsigned bi = 0; bi < n_; ++bi)
                    for (unsigned bj = 0; bj < n_; ++bj)
                        next.at(i * n_ + bi, j * n_ + bj) = blk.at(bi, bj);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

RingElem SigmaHom::word_map(const Word& w, const RingElem& a) const {
    if (w.arity() != n_) throw DomainError("sigma_w: word arity mismatch");
    RingElem b = a;
    for (unsigned j : w.letters()) b = diag_map(j, b);
    return b;
}

// ---------------------------------------------------------------------------
// SigmaDerivation
// ---------------------------------------------------------------------------

SigmaDerivation SigmaDerivation::zero(std::shared_ptr<const SigmaHom> sigma) {
    return SigmaDerivation(std::move(sigma));
}

SigmaDerivation SigmaDerivation::from_images(
    std::shared_ptr<const SigmaHom> sigma,
    std::map<std::string, std::vector<RingElem>> gen_images) {
    return build(std::move(sigma), std::move(gen_images), true);
}

SigmaDerivation SigmaDerivation::from_images_unchecked(
    std::shared_ptr<const SigmaHom> sigma,
    std::map<std::string, std::vector<RingElem>> gen_images) {
    return build(std::move(sigma), std::move(gen_images), false);
}

SigmaDerivation SigmaDerivation::build(std::shared_ptr<const SigmaHom> sigma,
                                       std::map<std::string, std::vector<RingElem>> gen_images,
                                       bool checked) {
    const Ring& ring = sigma->ring();
    unsigned n = sigma->n();
    if (!has_generators(ring)) {
        if (!gen_images.empty())
            throw DomainError("delta on " + ring_name(ring) + " is forced zero");
        return SigmaDerivation(std::move(sigma));
    }
    auto gens = ring_generators(ring);
    for (const auto& [name, row] : gen_images) {
        bool known = std::any_of(gens.begin(), gens.end(),
                                 [&](const auto& g) { return g.first == name; });
        if (!known) throw DomainError("delta image given for unknown generator '" + name + "'");
        if (row.size() != n)
            throw DomainError("delta image for '" + name + "' must have " + std::to_string(n) +
                              " components");
        for (const auto& e : row)
            if (!same_ring(e.ring(), ring))
                throw DomainError("delta image for '" + name + "' lives in the wrong ring");
    }
    SigmaDerivation d(std::move(sigma));
    bool all_zero = true;
    for (const auto& [name, gen] : gens) {
        auto it = gen_images.find(name);
        std::vector<RingElem> row =
            it == gen_images.end() ? std::vector<RingElem>(n, RingElem::zero(ring)) : it->second;
        for (const auto& e : row) all_zero = all_zero && e.is_zero();
        d.gen_images_.emplace(name, std::move(row));
    }
    if (all_zero) d.gen_images_.clear();
    if (d.gen_images_.empty() || !checked) return d;

    // consistency on commuting generators: delta(t_i t_j) must not depend on
    // the factor order
    for (auto i = d.gen_images_.begin(); i != d.gen_images_.end(); ++i) {
        for (auto j = std::next(i); j != d.gen_images_.end(); ++j) {
            RingElem ti = RingElem::variable(ring, i->first);
            RingElem tj = RingElem::variable(ring, j->first);
            auto lhs = row_times_matrix(i->second, d.sigma_->eval(tj));
            auto rhs = row_times_matrix(j->second, d.sigma_->eval(ti));
            for (unsigned c = 0; c < n; ++c) {
                lhs[c] = lhs[c] + ti * j->second[c];
                rhs[c] = rhs[c] + tj * i->second[c];
            }
            if (lhs != rhs)
                throw DomainError("delta images of '" + i->first + "' and '" + j->first +
                                  "' violate well-definedness on commuting generators");
        }
    }
    if (ring->kind == RingKind::TruncPoly) {
        // delta(t^k) computed through the Leibniz recursion must vanish
        RingElem t = RingElem::variable(ring, ring->var);
        std::vector<RingElem> row = d.gen_images_.at(ring->var);
        RingElem tpow = t;
        for (unsigned e = 2; e <= ring->order; ++e) {
            auto shifted = row_times_matrix(d.gen_images_.at(ring->var), d.sigma_->eval(tpow));
            for (unsigned c = 0; c < n; ++c) shifted[c] = shifted[c] + t * row[c];
            row = std::move(shifted);
            tpow = tpow * t;
        }
        if (!std::all_of(row.begin(), row.end(), [](const RingElem& e) { return e.is_zero(); }))
            throw DomainError("delta(" + ring->var + "^" + std::to_string(ring->order) +
                              ") does not vanish; delta is not well-defined on " +
                              ring_name(ring));
    }
    return d;
}

SigmaDerivation SigmaDerivation::inner(std::shared_ptr<const SigmaHom> sigma,
                                       std::vector<RingElem> c) {
    const Ring& ring = sigma->ring();
    unsigned n = sigma->n();
    if (c.size() != n) throw DomainError("inner vector must have n components");
    for (const auto& e : c)
        if (!same_ring(e.ring(), ring)) throw DomainError("inner vector in the wrong ring");
    SigmaDerivation d(sigma);
    d.inner_c_ = c;
    for (const auto& [name, gen] : ring_generators(ring)) {
        auto sg = row_times_matrix(c, sigma->eval(gen));
        std::vector<RingElem> row;
        row.reserve(n);
        for (unsigned j = 0; j < n; ++j) row.push_back(gen * c[j] - sg[j]);
        bool zero = std::all_of(row.begin(), row.end(),
                                [](const RingElem& e) { return e.is_zero(); });
        if (!zero) d.gen_images_.emplace(name, std::move(row));
    }
    return d;
}

bool SigmaDerivation::is_zero_map() const {
    if (inner_c_) {
        // inner delta vanishes identically iff it vanishes on generators and
        // on 1 (always) -- generator images were pruned if zero
        return gen_images_.empty();
    }
    return gen_images_.empty();
}

std::vector<RingElem> SigmaDerivation::eval(const RingElem& a) const {
    const Ring& ring = sigma_->ring();
    if (!same_ring(a.ring(), ring)) throw DomainError("delta_eval: descriptor mismatch");
    unsigned n = sigma_->n();

    if (inner_c_) {
        const auto& c = *inner_c_;
        auto sg = row_times_matrix(c, sigma_->eval(a));
        std::vector<RingElem> out;
        out.reserve(n);
        for (unsigned j = 0; j < n; ++j) out.push_back(a * c[j] - sg[j]);
        return out;
    }
    if (gen_images_.empty()) return std::vector<RingElem>(n, RingElem::zero(ring));

    if (ring->kind == RingKind::TruncPoly) {
        const auto& coeffs = a.trunc_value().coeffs;
        const auto& drow = gen_images_.at(ring->var);
        RingElem t = RingElem::variable(ring, ring->var);
        std::vector<RingElem> out(n, RingElem::zero(ring));
        std::vector<RingElem> dpow(n, RingElem::zero(ring));  // delta(t^e)
        RingElem tpow = RingElem::one(ring);
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (e == 1) {
                dpow = drow;
            } else if (e >= 2) {
                auto shifted = row_times_matrix(drow, sigma_->eval(tpow));
                for (unsigned j = 0; j < n; ++j) shifted[j] = shifted[j] + t * dpow[j];
                dpow = std::move(shifted);
            }
            if (e >= 1) tpow = tpow * t;  // tracks t^e for the next step
            if (coeffs[e].is_zero() || e == 0) continue;
            RingElem c = embed_constant(ring, coeffs[e]);
            for (unsigned j = 0; j < n; ++j) out[j] = out[j] + c * dpow[j];
        }
        return out;
    }

    // Poly: additive over terms, Leibniz recursion over monomials with a
    // per-call memo
    std::map<Monomial, std::vector<RingElem>> memo;
    std::function<const std::vector<RingElem>&(const Monomial&)> dmono =
        [&](const Monomial& m) -> const std::vector<RingElem>& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::vector<RingElem> out(n, RingElem::zero(ring));
        size_t v = 0;
        while (v < m.size() && m[v] == 0) ++v;
        if (v < m.size()) {
            Monomial rest = m;
            --rest[v];
            RingElem tv = RingElem::variable(ring, ring->vars[v]);
            RingElem restElem =
                RingElem::make_poly(ring, {{rest, RingElem::one(ring->base)}});
            auto first = row_times_matrix(gen_images_.at(ring->vars[v]),
                                          sigma_->eval(restElem));
            const auto& drest = dmono(rest);
            for (unsigned j = 0; j < n; ++j) out[j] = first[j] + tv * drest[j];
        }
        return memo.emplace(m, std::move(out)).first->second;
    };

    std::vector<RingElem> out(n, RingElem::zero(ring));
    for (const auto& [mono, c] : a.poly_value().terms) {
        const auto& dm = dmono(mono);
        RingElem ce = embed_constant(ring, c);
        for (unsigned j = 0; j < n; ++j) out[j] = out[j] + ce * dm[j];
    }
    return out;
}

RingElem SigmaDerivation::component(const RingElem& a, unsigned j) const {
    return eval(a)[j - 1];
}

// ---------------------------------------------------------------------------
// validators & probes on the maps
// ---------------------------------------------------------------------------

ValidationReport validate_hom(const SigmaHom& sigma, Rng& rng, size_t budget) {
    ValidationReport rep;
    rep.law = "sigma(ab) = sigma(a)sigma(b), sigma(a+b) = sigma(a)+sigma(b)";
    if (!(sigma.eval(RingElem::one(sigma.ring())) ==
          RingMatrix::identity(sigma.ring(), sigma.n()))) {
        rep.passed = false;
        rep.counterexample = {RingElem::one(sigma.ring()), RingElem::one(sigma.ring())};
        return rep;
    }
    for (size_t s = 0; s < budget; ++s) {
        RingElem a = random_element(sigma.ring(), rng, 4);
        RingElem b = random_element(sigma.ring(), rng, 4);
        ++rep.samples;
        if (!(sigma.eval(a * b) == sigma.eval(a) * sigma.eval(b)) ||
            !(sigma.eval(a + b) == sigma.eval(a) + sigma.eval(b))) {
            rep.passed = false;
            rep.counterexample = {a, b};
            return rep;
        }
    }
    return rep;
}

ValidationReport validate_leibniz(const SigmaDerivation& delta, Rng& rng, size_t budget) {
    ValidationReport rep;
    rep.law = "delta(rs) = delta(r)sigma(s) + r delta(s)";
    const Ring& ring = delta.ring();
    auto d1 = delta.eval(RingElem::one(ring));
    if (!std::all_of(d1.begin(), d1.end(), [](const RingElem& e) { return e.is_zero(); })) {
        rep.passed = false;
        rep.counterexample = {RingElem::one(ring), RingElem::one(ring)};
        return rep;
    }
    for (size_t s = 0; s < budget; ++s) {
        RingElem a = random_element(ring, rng, 4);
        RingElem b = random_element(ring, rng, 4);
        ++rep.samples;
        auto lhs = delta.eval(a * b);
        auto rhs = row_times_matrix(delta.eval(a), delta.sigma().eval(b));
        auto db = delta.eval(b);
        bool ok = true;
        for (unsigned j = 0; j < delta.n(); ++j) {
            rhs[j] = rhs[j] + a * db[j];
            ok = ok && lhs[j] == rhs[j];
        }
        if (!ok) {
            rep.passed = false;
            rep.counterexample = {a, b};
            return rep;
        }
    }
    return rep;
}

std::optional<bool> diag_is_automorphism(const SigmaHom& sigma, unsigned i) {
    if (!sigma.upper_triangular())
        throw NotTriangular("diag_is_automorphism needs an upper triangular sigma");
    const Ring& ring = sigma.ring();
    if (sigma.gen_images().empty()) return true;  // scalar sigma, identity diagonals

    // identity diagonal map is an automorphism over any ring
    bool identity = true;
    for (const auto& [name, img] : sigma.gen_images()) {
        if (!(img.at(i - 1, i - 1) == RingElem::variable(ring, name))) identity = false;
    }
    if (identity) return true;

    if (ring->kind == RingKind::Poly && ring->vars.size() == 1) {
        // t -> a*t + b is invertible iff a is a unit of the base field
        const RingElem img = sigma.gen_images().begin()->second.at(i - 1, i - 1);
        if (img.is_zero()) return false;
        const auto& terms = img.poly_value().terms;
        unsigned deg = img.poly_degree();
        if (deg != 1) return false;
        return terms[0].second.try_invert().has_value();
    }
    return std::nullopt;
}

std::optional<size_t> nilpotence_bound(const SigmaDerivation& delta, const RingElem& a,
                                       size_t cap) {
    if (a.is_zero()) return 1;
    struct Cmp {
        bool operator()(const RingElem& x, const RingElem& y) const {
            return RingElem::compare(x, y) < 0;
        }
    };
    std::set<RingElem, Cmp> frontier{a};
    for (size_t p = 1; p <= cap; ++p) {
        std::set<RingElem, Cmp> next;
        for (const auto& v : frontier) {
            for (const auto& dv : delta.eval(v)) {
                if (!dv.is_zero()) next.insert(dv);
            }
        }
        if (next.empty()) return p;
        frontier = std::move(next);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Extension
// ---------------------------------------------------------------------------

Ext make_extension(std::shared_ptr<const SigmaHom> sigma,
                   std::shared_ptr<const SigmaDerivation> delta, uint64_t validation_seed,
                   size_t validation_budget) {
    if (!sigma || !delta) throw DomainError("extension needs both sigma and delta");
    if (delta->sigma_ptr().get() != sigma.get())
        throw DomainError("delta is not paired with this sigma");
    auto ext = std::make_shared<Extension>();
    ext->ring = sigma->ring();
    ext->n = sigma->n();
    ext->sigma = std::move(sigma);
    ext->delta = std::move(delta);
    Rng rng(validation_seed);
    ext->validation.hom = validate_hom(*ext->sigma, rng, validation_budget);
    ext->validation.leibniz = validate_leibniz(*ext->delta, rng, validation_budget);
    if (!ext->validation.hom.passed)
        throw DomainError("sigma failed the homomorphism law on sample (" +
                          ext->validation.hom.counterexample->first.str() + ", " +
                          ext->validation.hom.counterexample->second.str() + ")");
    if (!ext->validation.leibniz.passed)
        throw DomainError("delta failed the Leibniz law on sample (" +
                          ext->validation.leibniz.counterexample->first.str() + ", " +
                          ext->validation.leibniz.counterexample->second.str() + ")");
    return ext;
}

bool same_extension(const Ext& a, const Ext& b) { return a.get() == b.get(); }

}  // namespace skewx
