#ifndef SKEWX_ANALYSIS_HPP
#define SKEWX_ANALYSIS_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewx/linalg.hpp"
#include "skewx/poly.hpp"

namespace skewx {

struct SampleSpec {
    size_t random_count = 32;
    int degree_bound = 3;
    int coeff_bound = 5;
    size_t pair_cap = 200;  // sampled (a,b) pairs in prime_probe
};

/// Nonzero sample set: ring generators, the coefficients appearing in the
/// sigma/delta generator images, plus random elements. Deterministic given
/// the generator state.
std::vector<RingElem> analysis_samples(const Ext& ext, const SampleSpec& spec, Rng& rng);

// ---------------------------------------------------------------------------
// megainjectivity
// ---------------------------------------------------------------------------

/// a != 0, b != 0 and sigma^(r)(a) * b = 0 exactly (verified on construction).
struct DependenceWitness {
    RingElem a;
    unsigned r = 1;
    std::vector<RingElem> b;
};

struct MegaVerdict {
    std::optional<DependenceWitness> witness;  // nullopt: NoDependenceFound
    unsigned r_max = 0;
    std::string sample_desc;
};

enum class MegaCertKind { Certified, Refuted, Unknown };

/// Structural certificate: division-ring coefficients certify; a non-domain
/// refutes (with witness); a domain with triangular sigma whose diagonal maps
/// provably preserve nonzeros certifies. Unknown otherwise.
struct MegaCertificate {
    MegaCertKind kind = MegaCertKind::Unknown;
    std::string reason;
    std::optional<DependenceWitness> witness;
};

MegaCertificate megainjective_certificate(const Ext& ext);

/// Semi-decision: a returned witness is a proof; absence only covers the
/// sampled elements up to r_max.
MegaVerdict megainjective_probe(const Ext& ext, unsigned r_max, const SampleSpec& spec,
                                Rng& rng, size_t dim_cap = kDefaultWordCap);

/// f = a (a constant), g = sum_j w_j b_j over the lex listing of <X>_r.
/// With delta = 0 the product is exactly zero (product_zero = true); with
/// delta != 0 only a degree drop is certified (product_zero = false).
struct ZeroDivisorResult {
    SkewPoly f, g;
    bool product_zero = false;
};

ZeroDivisorResult zero_divisor_from_witness(const Ext& ext, const DependenceWitness& w);

// ---------------------------------------------------------------------------
// degree additivity
// ---------------------------------------------------------------------------

struct DegreeDrop {
    SkewPoly f, g;
    size_t expected_deg;
    std::optional<size_t> actual_deg;
    DependenceWitness extracted;  // from the leading coefficients; verified
};

struct AdditivityReport {
    size_t pairs = 0;
    size_t drops = 0;
    std::vector<DegreeDrop> records;
    bool pseudo_valuation_ok = true;   // deg(fg) <= deg f + deg g everywhere
    bool all_drops_witnessed = true;   // every drop yielded a verified dependence
};

AdditivityReport degree_additivity_check(const Ext& ext, const SampleSpec& spec, Rng& rng,
                                         size_t sample_pairs = 64);

// ---------------------------------------------------------------------------
// primeness
// ---------------------------------------------------------------------------

struct PrimeVerdict {
    enum class Kind { Certified, NotPrime, Inconclusive } kind = Kind::Inconclusive;
    std::string detail;  // certification method or the reason it is inconclusive
    std::optional<std::pair<RingElem, RingElem>> pair;  // NotPrime witness
    // per sampled pair: the word w with sigma_w(a)*b != 0 backing aSb != 0
    std::vector<std::tuple<RingElem, RingElem, Word>> certified_words;
};

/// Requires upper triangular sigma with automorphism diagonal maps; searches
/// sigma_w(a)*b != 0 witnesses in deglex order, decides exactly in the
/// scalar-sigma/delta=0 commutative regime, and reports the regime otherwise.
/// A supplied conjugator only annotates the inconclusive reason (the
/// triangularizable reduction is not performed).
PrimeVerdict prime_probe(const Ext& ext, size_t degree_bound, const SampleSpec& spec, Rng& rng,
                         const RingMatrix* conjugator = nullptr);

// ---------------------------------------------------------------------------
// units
// ---------------------------------------------------------------------------

struct UnitProbeResult {
    enum class Kind { Unit, NotUnit, NotUnitCertified } kind = Kind::NotUnitCertified;
    std::optional<SkewPoly> inverse;
    std::string detail;
};

UnitProbeResult unit_probe(const Ext& ext, const SkewPoly& f, size_t degree_bound);

// ---------------------------------------------------------------------------
// graded transfer
// ---------------------------------------------------------------------------

struct GradedTransferReport {
    PrimeVerdict delta_zero;
    PrimeVerdict with_delta;
    bool implication_ok = true;  // delta=0 certified ==> (sigma,delta) not refuted
};

GradedTransferReport graded_transfer_check(const Ext& ext, size_t degree_bound,
                                           const SampleSpec& spec, Rng& rng);

}  // namespace skewx

#endif
