#include "skewx/transforms.hpp"

#include <algorithm>

#include "skewx/linalg.hpp"

namespace skewx {

namespace {

std::vector<RingElem> verification_samples(const Ring& ring, Rng& rng, size_t count) {
    std::vector<RingElem> out;
    for (const auto& [name, gen] : ring_generators(ring)) out.push_back(gen);
    out.push_back(RingElem::one(ring));
    while (out.size() < count) out.push_back(random_element(ring, rng, 3));
    return out;
}

}  // namespace

BasisChange kill_delta(const Ext& ext, const RingElem& c, uint64_t verify_seed) {
    if (!same_ring(c.ring(), ext->ring)) throw DomainError("kill_delta: c not in R");
    // the supported coefficient rings are commutative, so c is central

    RingMatrix m = RingMatrix::identity(ext->ring, ext->n);
    for (unsigned i = 0; i < ext->n; ++i) m.at(i, i) = c;
    m = m - ext->sigma->eval(c);
    auto minv = invert_matrix(m);
    if (!minv)
        throw DomainError("kill_delta: cI_n - sigma(c) = " + m.str() +
                          " is not invertible in M_n(R)");

    auto zero_delta = std::make_shared<SigmaDerivation>(SigmaDerivation::zero(ext->sigma));
    Ext target = make_extension(ext->sigma, zero_delta, verify_seed);

    std::vector<RingElem> dc = ext->delta->eval(c);
    BasisChange bc;
    bc.source = ext;
    bc.target = target;
    for (unsigned j = 0; j < ext->n; ++j) {
        // y_j = sum_i x_i (cI - sigma(c))_{ij} - delta_j(c)
        SkewPoly yj = SkewPoly::constant(ext, -dc[j]);
        for (unsigned i = 0; i < ext->n; ++i)
            yj = yj + SkewPoly::generator(ext, i + 1).right_scale(m.at(i, j));
        bc.forward.push_back(std::move(yj));
        // x_j = sum_i (y_i + delta_i(c)) (cI - sigma(c))^{-1}_{ij}
        RingElem constant_part = RingElem::zero(ext->ring);
        SkewPoly xj = SkewPoly::zero(target);
        for (unsigned i = 0; i < ext->n; ++i) {
            xj = xj + SkewPoly::generator(target, i + 1).right_scale(minv->at(i, j));
            constant_part = constant_part + dc[i] * minv->at(i, j);
        }
        bc.backward.push_back(xj + SkewPoly::constant(target, constant_part));
    }

    // the target relations r y_j = sum_i y_i sigma_ij(r) must normalize
    // exactly through the source presentation
    Rng rng(verify_seed);
    for (const RingElem& r : verification_samples(ext->ring, rng, 32)) {
        RingMatrix sr = ext->sigma->eval(r);
        for (unsigned j = 0; j < ext->n; ++j) {
            SkewPoly lhs = SkewPoly::constant(ext, r) * bc.forward[j];
            SkewPoly rhs = SkewPoly::zero(ext);
            for (unsigned i = 0; i < ext->n; ++i)
                rhs = rhs + bc.forward[i].right_scale(sr.at(i, j));
            if (lhs != rhs)
                throw DomainError("internal: kill_delta target relation failed at r = " +
                                  r.str());
        }
    }
    return bc;
}

BasisChange scalarize_sigma(const Ext& ext, const std::vector<RingElem>& cs,
                            uint64_t verify_seed) {
    if (cs.size() != ext->n) throw DomainError("scalarize_sigma needs one c_j per generator");
    for (const auto& [name, img] : ext->sigma->gen_images()) {
        for (unsigned i = 0; i < ext->n; ++i)
            for (unsigned j = 0; j < ext->n; ++j)
                if (i != j && !img.at(i, j).is_zero())
                    throw DomainError("scalarize_sigma: sigma is not diagonal");
    }
    if (!ext->sigma->is_scalar())
        throw DomainError(
            "scalarize_sigma: sigma is not scalar on the center (for commutative R this "
            "means sigma(t) = t I_n on every generator)");

    std::vector<RingElem> d, dinv;
    for (unsigned j = 0; j < ext->n; ++j) {
        if (!same_ring(cs[j].ring(), ext->ring))
            throw DomainError("scalarize_sigma: c_j not in R");
        RingElem dj = ext->delta->component(cs[j], j + 1);
        auto inv = dj.try_invert();
        if (!inv)
            throw DomainError("scalarize_sigma: delta_" + std::to_string(j + 1) + "(c_" +
                              std::to_string(j + 1) + ") = " + dj.str() +
                              " is not invertible in R");
        d.push_back(std::move(dj));
        dinv.push_back(std::move(*inv));
    }

    // target derivation delta'_j = delta_j(.) * delta_j(c_j)^{-1}
    std::map<std::string, std::vector<RingElem>> images;
    for (const auto& [name, gen] : ring_generators(ext->ring)) {
        std::vector<RingElem> row = ext->delta->eval(gen);
        for (unsigned j = 0; j < ext->n; ++j) row[j] = row[j] * dinv[j];
        images.emplace(name, std::move(row));
    }
    auto dprime = std::make_shared<SigmaDerivation>(
        SigmaDerivation::from_images(ext->sigma, std::move(images)));
    Ext target = make_extension(ext->sigma, dprime, verify_seed);

    BasisChange bc;
    bc.source = ext;
    bc.target = target;
    for (unsigned j = 0; j < ext->n; ++j) {
        bc.forward.push_back(SkewPoly::generator(ext, j + 1).right_scale(dinv[j]));
        bc.backward.push_back(SkewPoly::generator(target, j + 1).right_scale(d[j]));
    }

    // r y_j = y_j r + delta'_j(r), normalized through the source
    Rng rng(verify_seed);
    for (const RingElem& r : verification_samples(ext->ring, rng, 32)) {
        for (unsigned j = 0; j < ext->n; ++j) {
            SkewPoly lhs = SkewPoly::constant(ext, r) * bc.forward[j];
            RingElem dpr = ext->delta->component(r, j + 1) * dinv[j];
            SkewPoly rhs = bc.forward[j].right_scale(r) + SkewPoly::constant(ext, dpr);
            if (lhs != rhs)
                throw DomainError("internal: scalarize_sigma relation failed at r = " + r.str());
        }
    }
    return bc;
}

SkewPoly map_through(const BasisChange& bc, const SkewPoly& f, MapDirection dir) {
    const Ext& domain = dir == MapDirection::ToTarget ? bc.source : bc.target;
    const Ext& codomain = dir == MapDirection::ToTarget ? bc.target : bc.source;
    const std::vector<SkewPoly>& images =
        dir == MapDirection::ToTarget ? bc.backward : bc.forward;
    if (!same_extension(f.ext(), domain)) throw DomainError("map_through: extension mismatch");

    SkewPoly out = SkewPoly::zero(codomain);
    for (const auto& [w, a] : f.terms()) {
        SkewPoly acc = SkewPoly::one(codomain);
        for (unsigned j : w.letters()) acc = acc * images[j - 1];
        out = out + acc.right_scale(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// evaluation homomorphisms
// ---------------------------------------------------------------------------

namespace {

struct TargetOps {
    const Ext& ext;
    const std::vector<EvalTarget>& targets;

    EvalTarget one() const {
        if (std::holds_alternative<RingElem>(targets[0]))
            return RingElem::one(ext->ring);
        if (std::holds_alternative<RingMatrix>(targets[0]))
            return RingMatrix::identity(ext->ring, std::get<RingMatrix>(targets[0]).rows());
        return SkewPoly::one(std::get<SkewPoly>(targets[0]).ext());
    }

    EvalTarget scalar(const RingElem& r) const {
        if (std::holds_alternative<RingElem>(targets[0])) return r;
        if (std::holds_alternative<RingMatrix>(targets[0])) {
            size_t k = std::get<RingMatrix>(targets[0]).rows();
            RingMatrix m(ext->ring, k, k);
            for (size_t i = 0; i < k; ++i) m.at(i, i) = r;
            return m;
        }
        return SkewPoly::constant(std::get<SkewPoly>(targets[0]).ext(), r);
    }

    EvalTarget mul(const EvalTarget& a, const EvalTarget& b) const {
        if (std::holds_alternative<RingElem>(a))
            return std::get<RingElem>(a) * std::get<RingElem>(b);
        if (std::holds_alternative<RingMatrix>(a))
            return std::get<RingMatrix>(a) * std::get<RingMatrix>(b);
        return std::get<SkewPoly>(a) * std::get<SkewPoly>(b);
    }

    EvalTarget add(const EvalTarget& a, const EvalTarget& b) const {
        if (std::holds_alternative<RingElem>(a))
            return std::get<RingElem>(a) + std::get<RingElem>(b);
        if (std::holds_alternative<RingMatrix>(a))
            return std::get<RingMatrix>(a) + std::get<RingMatrix>(b);
        return std::get<SkewPoly>(a) + std::get<SkewPoly>(b);
    }

    bool equal(const EvalTarget& a, const EvalTarget& b) const {
        if (std::holds_alternative<RingElem>(a))
            return std::get<RingElem>(a) == std::get<RingElem>(b);
        if (std::holds_alternative<RingMatrix>(a))
            return std::get<RingMatrix>(a) == std::get<RingMatrix>(b);
        return std::get<SkewPoly>(a) == std::get<SkewPoly>(b);
    }
};

}  // namespace

EvalTarget eval_hom(const Ext& ext, const std::vector<EvalTarget>& targets, const SkewPoly& f,
                    uint64_t check_seed, size_t check_budget) {
    if (targets.size() != ext->n) throw DomainError("eval_hom needs one target per generator");
    if (!same_extension(f.ext(), ext)) throw DomainError("eval_hom: extension mismatch");
    size_t alt = targets[0].index();
    for (const auto& t : targets)
        if (t.index() != alt)
            throw DomainError("eval_hom targets must live in a single algebra");
    for (const auto& t : targets) {
        if (const auto* e = std::get_if<RingElem>(&t)) {
            if (!same_ring(e->ring(), ext->ring)) throw DomainError("eval_hom: target not in R");
        } else if (const auto* m = std::get_if<RingMatrix>(&t)) {
            if (!same_ring(m->ring(), ext->ring) || m->rows() != m->cols() ||
                m->rows() != std::get<RingMatrix>(targets[0]).rows())
                throw DomainError("eval_hom: matrix targets must be square, equal-sized, over R");
        } else {
            const auto& p = std::get<SkewPoly>(t);
            if (!same_ring(p.ext()->ring, ext->ring))
                throw DomainError("eval_hom: polynomial targets must share the coefficient ring");
            if (!same_extension(p.ext(), std::get<SkewPoly>(targets[0]).ext()))
                throw DomainError("eval_hom: polynomial targets must share one extension");
        }
    }

    TargetOps ops{ext, targets};

    // relation precondition on generators plus a random sample
    Rng rng(check_seed);
    std::vector<RingElem> checks = verification_samples(ext->ring, rng, check_budget);
    for (const RingElem& r : checks) {
        RingMatrix sr = ext->sigma->eval(r);
        std::vector<RingElem> dr = ext->delta->eval(r);
        for (unsigned j = 0; j < ext->n; ++j) {
            EvalTarget lhs = ops.mul(ops.scalar(r), targets[j]);
            EvalTarget rhs = ops.scalar(dr[j]);
            for (unsigned i = 0; i < ext->n; ++i)
                rhs = ops.add(rhs, ops.mul(targets[i], ops.scalar(sr.at(i, j))));
            if (!ops.equal(lhs, rhs)) throw RelationCheckFailed(j + 1, r.str());
        }
    }

    EvalTarget acc = ops.scalar(RingElem::zero(ext->ring));
    for (const auto& [w, a] : f.terms()) {
        EvalTarget prod = ops.one();
        for (unsigned j : w.letters()) prod = ops.mul(prod, targets[j - 1]);
        acc = ops.add(acc, ops.mul(prod, ops.scalar(a)));
    }
    return acc;
}

std::string render_eval_target(const EvalTarget& t) {
    if (const auto* e = std::get_if<RingElem>(&t)) return e->str();
    if (const auto* m = std::get_if<RingMatrix>(&t)) return m->str();
    return std::get<SkewPoly>(t).str();
}

}  // namespace skewx
