#ifndef SKEWX_TRANSFORMS_HPP
#define SKEWX_TRANSFORMS_HPP

#include <variant>
#include <vector>

#include "skewx/poly.hpp"

namespace skewx {

/// Two presentations of the same ring: the source R<x_1..x_n; sigma, delta>
/// and a target R<y_1..y_n; sigma', delta'>. forward[j] expresses y_j in the
/// x's (a source polynomial); backward[j] expresses x_j in the y's.
struct BasisChange {
    Ext source;
    Ext target;
    std::vector<SkewPoly> forward;
    std::vector<SkewPoly> backward;
};

/// Change of variables y_j = x_j c - c x_j removing the derivation:
/// requires cI_n - sigma(c) invertible in M_n(R). The target keeps sigma and
/// has the zero derivation. Verified on samples: r y_j = sum_i y_i sigma_ij(r).
BasisChange kill_delta(const Ext& ext, const RingElem& c, uint64_t verify_seed = 0);

/// For diagonal sigma that is scalar on the (commutative) ring with each
/// delta_j(c_j) invertible: rescale y_j = x_j delta_j(c_j)^{-1} so that the
/// target has scalar sigma and ordinary derivations
/// delta'_j(r) = delta_j(r) delta_j(c_j)^{-1}.
BasisChange scalarize_sigma(const Ext& ext, const std::vector<RingElem>& cs,
                            uint64_t verify_seed = 0);

enum class MapDirection {
    ToTarget,  // rewrite a source polynomial in the y coordinates
    ToSource,  // rewrite a target polynomial in the x coordinates
};

/// Substitute each generator by its image polynomial and renormalize in the
/// codomain presentation; an R-ring homomorphism (inverse pair by construction).
SkewPoly map_through(const BasisChange& bc, const SkewPoly& f, MapDirection dir);

/// Target algebras for the universal property: R itself, square matrices over
/// R with R acting diagonally, or a skew extension over the same R.
using EvalTarget = std::variant<RingElem, RingMatrix, SkewPoly>;

struct RelationCheckFailed : std::runtime_error {
    unsigned j;
    std::string sample;
    RelationCheckFailed(unsigned j, const std::string& sample)
        : std::runtime_error("targets violate r*a_j = sum_i a_i sigma_ij(r) + delta_j(r) at j = " +
                             std::to_string(j) + ", r = " + sample),
          j(j),
          sample(sample) {}
};

/// The unique R-ring homomorphism with phi(x_i) = targets[i], evaluated at f:
/// phi(sum w a_w) = sum rho(w) a_w. The commutation relations are checked on
/// ring generators plus a random sample first; RelationCheckFailed identifies
/// a violated relation.
EvalTarget eval_hom(const Ext& ext, const std::vector<EvalTarget>& targets, const SkewPoly& f,
                    uint64_t check_seed = 0, size_t check_budget = 32);

std::string render_eval_target(const EvalTarget& t);

}  // namespace skewx

#endif
