#ifndef SKEWX_SKEW_HPP
#define SKEWX_SKEW_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewx/rings.hpp"
#include "skewx/words.hpp"

namespace skewx {

/// Ring homomorphism sigma: R -> M_n(R), stored by generator images and
/// extended algorithmically. For Z, Q, Z/m the scalar map is the only
/// ring-law-compatible choice and is enforced at construction.
class SigmaHom {
public:
    static SigmaHom scalar(Ring ring, unsigned n);
    static SigmaHom from_images(Ring ring, unsigned n,
                                std::map<std::string, RingMatrix> gen_images);
    /// Shape checks only; the algebraic construction laws are skipped so that
    /// validate_hom can report a counterexample for untrusted data.
    static SigmaHom from_images_unchecked(Ring ring, unsigned n,
                                          std::map<std::string, RingMatrix> gen_images);

    const Ring& ring() const { return ring_; }
    unsigned n() const { return n_; }
    const std::map<std::string, RingMatrix>& gen_images() const { return gen_images_; }

    /// sigma(a), the multiplicative-additive extension of the generator images.
    RingMatrix eval(const RingElem& a) const;
    /// sigma_ij(a), 1-based indices.
    RingElem entry(const RingElem& a, unsigned i, unsigned j) const;

    bool is_scalar() const;
    bool upper_triangular() const;

    /// sigma_ii applied to a (1-based i); requires upper triangular sigma.
    RingElem diag_map(unsigned i, const RingElem& a) const;

    /// sigma^(r)(a): replace each entry of sigma^(r-1)(a) by its sigma image.
    /// Throws CapExceeded when n^r > cap.
    RingMatrix power_eval(const RingElem& a, unsigned r, size_t cap = kDefaultWordCap) const;

    /// sigma_w(a) = sigma_{j_r j_r}(... sigma_{j_1 j_1}(a)) for w = x_{j_1}...x_{j_r};
    /// the first letter's diagonal map is applied first. sigma_1 = Id.
    RingElem word_map(const Word& w, const RingElem& a) const;

private:
    SigmaHom(Ring ring, unsigned n) : ring_(std::move(ring)), n_(n) {}
    static SigmaHom build(Ring ring, unsigned n, std::map<std::string, RingMatrix> gen_images,
                          bool checked);
    Ring ring_;
    unsigned n_;
    std::map<std::string, RingMatrix> gen_images_;
};

/// Right sigma-derivation delta: R -> R^n with delta(rs) = delta(r)sigma(s) + r delta(s).
class SigmaDerivation {
public:
    static SigmaDerivation zero(std::shared_ptr<const SigmaHom> sigma);
    static SigmaDerivation from_images(std::shared_ptr<const SigmaHom> sigma,
                                       std::map<std::string, std::vector<RingElem>> gen_images);
    /// Shape checks only, for exercising validate_leibniz on untrusted data.
    static SigmaDerivation from_images_unchecked(
        std::shared_ptr<const SigmaHom> sigma,
        std::map<std::string, std::vector<RingElem>> gen_images);
    /// Inner derivation a -> a*c - c*sigma(a) for a fixed row vector c.
    static SigmaDerivation inner(std::shared_ptr<const SigmaHom> sigma,
                                 std::vector<RingElem> c);

    const Ring& ring() const { return sigma_->ring(); }
    unsigned n() const { return sigma_->n(); }
    const SigmaHom& sigma() const { return *sigma_; }
    std::shared_ptr<const SigmaHom> sigma_ptr() const { return sigma_; }
    const std::map<std::string, std::vector<RingElem>>& gen_images() const { return gen_images_; }
    const std::optional<std::vector<RingElem>>& inner_vector() const { return inner_c_; }

    /// delta(a) as a row vector in R^n.
    std::vector<RingElem> eval(const RingElem& a) const;
    /// delta_j(a), 1-based j.
    RingElem component(const RingElem& a, unsigned j) const;

    bool is_zero_map() const;

private:
    explicit SigmaDerivation(std::shared_ptr<const SigmaHom> sigma) : sigma_(std::move(sigma)) {}
    static SigmaDerivation build(std::shared_ptr<const SigmaHom> sigma,
                                 std::map<std::string, std::vector<RingElem>> gen_images,
                                 bool checked);
    std::shared_ptr<const SigmaHom> sigma_;
    std::map<std::string, std::vector<RingElem>> gen_images_;
    std::optional<std::vector<RingElem>> inner_c_;
};

struct ValidationReport {
    bool passed = true;
    size_t samples = 0;
    std::string law;
    std::optional<std::pair<RingElem, RingElem>> counterexample;
};

/// Sampled check of sigma(ab) = sigma(a)sigma(b) and additivity.
ValidationReport validate_hom(const SigmaHom& sigma, Rng& rng, size_t budget = 64);
/// Sampled check of delta(rs) = delta(r)sigma(s) + r delta(s).
ValidationReport validate_leibniz(const SigmaDerivation& delta, Rng& rng, size_t budget = 64);

/// Yes/no for the supported families (scalar coefficient rings; identity
/// diagonal maps; univariate Poly where sigma(t)_ii must be a*t+b with a a
/// unit); nullopt = Unknown. 1-based i. Throws NotTriangular.
std::optional<bool> diag_is_automorphism(const SigmaHom& sigma, unsigned i);

/// Smallest p <= cap such that every p-fold composition of the component maps
/// delta_j kills a (breadth-first, zero branches pruned); nullopt when the
/// search exceeds cap.
std::optional<size_t> nilpotence_bound(const SigmaDerivation& delta, const RingElem& a,
                                       size_t cap = 64);

struct ValidationRecord {
    ValidationReport hom;
    ValidationReport leibniz;
};

/// The data (R, n, sigma, delta) of a free skew extension R<x1..xn; sigma, delta>.
struct Extension {
    Ring ring;
    unsigned n = 0;
    std::shared_ptr<const SigmaHom> sigma;
    std::shared_ptr<const SigmaDerivation> delta;
    ValidationRecord validation;
};

using Ext = std::shared_ptr<const Extension>;

/// Cross-checks descriptors/arities and runs the law validators with the
/// given sample budget; throws DomainError on any failure.
Ext make_extension(std::shared_ptr<const SigmaHom> sigma,
                   std::shared_ptr<const SigmaDerivation> delta, uint64_t validation_seed = 0,
                   size_t validation_budget = 64);

bool same_extension(const Ext& a, const Ext& b);

}  // namespace skewx

#endif
