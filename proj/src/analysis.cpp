#include "skewx/analysis.hpp"

#include <algorithm>
#include <set>

namespace skewx {

namespace {

struct ElemLess {
    bool operator()(const RingElem& x, const RingElem& y) const {
        return RingElem::compare(x, y) < 0;
    }
};

void collect_coeffs(const RingMatrix& m, std::set<RingElem, ElemLess>& out) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) out.insert(m.at(i, j));
}

bool vector_is_zero(const std::vector<RingElem>& v) {
    return std::all_of(v.begin(), v.end(), [](const RingElem& e) { return e.is_zero(); });
}

DependenceWitness checked_witness(const Ext& ext, RingElem a, unsigned r,
                                  std::vector<RingElem> b, size_t dim_cap) {
    DependenceWitness w{std::move(a), r, std::move(b)};
    if (w.a.is_zero() || vector_is_zero(w.b))
        throw DomainError("internal: degenerate dependence witness");
    RingMatrix m = ext->sigma->power_eval(w.a, r, dim_cap);
    if (!vector_is_zero(m.mul_vector(w.b)))
        throw DomainError("internal: dependence witness failed verification");
    return w;
}

// nontrivial zero-divisor pair of a non-domain descriptor
std::pair<RingElem, RingElem> ring_zero_divisor_pair(const Ring& r) {
    if (r->kind == RingKind::IntegersMod && !is_probable_prime(r->modulus)) {
        Int d = 2;
        while (!mpz_divisible_p(r->modulus.get_mpz_t(), d.get_mpz_t())) ++d;
        return {RingElem::from_int(r, d), RingElem::from_int(r, r->modulus / d)};
    }
    if (r->kind == RingKind::TruncPoly) {
        RingElem t = RingElem::variable(r, r->var);
        return {t.pow(r->order - 1), t};
    }
    throw DomainError("ring has no known zero-divisor pair");
}

}  // namespace

std::vector<RingElem> analysis_samples(const Ext& ext, const SampleSpec& spec, Rng& rng) {
    std::vector<RingElem> out;
    std::set<RingElem, ElemLess> seen;
    auto keep = [&](const RingElem& e) {
        if (!e.is_zero() && seen.insert(e).second) out.push_back(e);
    };
    for (const auto& [name, gen] : ring_generators(ext->ring)) keep(gen);
    std::set<RingElem, ElemLess> image_coeffs;
    for (const auto& [name, img] : ext->sigma->gen_images()) collect_coeffs(img, image_coeffs);
    for (const auto& [name, row] : ext->delta->gen_images())
        for (const auto& e : row)
            if (!e.is_zero()) image_coeffs.insert(e);
    for (const auto& e : image_coeffs) keep(e);
    for (size_t i = 0; i < spec.random_count; ++i)
        keep(random_element(ext->ring, rng, spec.degree_bound, spec.coeff_bound));
    if (out.empty()) keep(RingElem::one(ext->ring));
    return out;
}

// ---------------------------------------------------------------------------
// megainjectivity
// ---------------------------------------------------------------------------

MegaCertificate megainjective_certificate(const Ext& ext) {
    MegaCertificate cert;
    if (!ring_is_domain(ext->ring)) {
        auto [u, v] = ring_zero_divisor_pair(ext->ring);
        cert.kind = MegaCertKind::Refuted;
        cert.reason = "coefficient ring is not a domain";
        RingMatrix sv = ext->sigma->eval(v);
        if (sv.is_zero()) {
            std::vector<RingElem> b(ext->n, RingElem::zero(ext->ring));
            b[0] = RingElem::one(ext->ring);
            cert.witness = checked_witness(ext, v, 1, std::move(b), kDefaultWordCap);
        } else {
            // sigma(u)sigma(v) = sigma(uv) = 0, so any nonzero column of
            // sigma(v) annihilates sigma(u)
            for (size_t j = 0; j < sv.cols(); ++j) {
                std::vector<RingElem> col;
                for (size_t i = 0; i < sv.rows(); ++i) col.push_back(sv.at(i, j));
                if (!vector_is_zero(col)) {
                    cert.witness = checked_witness(ext, u, 1, std::move(col), kDefaultWordCap);
                    break;
                }
            }
        }
        return cert;
    }
    if (ring_is_field(ext->ring)) {
        cert.kind = MegaCertKind::Certified;
        cert.reason = "division-ring coefficients: sigma^(r)(a) is invertible for a != 0";
        return cert;
    }
    if (ext->sigma->upper_triangular()) {
        if (ext->sigma->is_scalar()) {
            cert.kind = MegaCertKind::Certified;
            cert.reason = "domain with scalar sigma: identity diagonal maps";
            return cert;
        }
        if (ext->ring->kind == RingKind::Poly && ext->ring->vars.size() == 1) {
            bool all_nonconstant = true;
            for (const auto& [name, img] : ext->sigma->gen_images())
                for (unsigned i = 1; i <= ext->n; ++i) {
                    RingElem d = img.at(i - 1, i - 1);
                    if (d.is_zero() || d.poly_degree() < 1) all_nonconstant = false;
                }
            if (all_nonconstant) {
                cert.kind = MegaCertKind::Certified;
                cert.reason =
                    "domain with triangular sigma; diagonal maps substitute nonconstant "
                    "polynomials and preserve nonzeros";
                return cert;
            }
        }
    }
    cert.kind = MegaCertKind::Unknown;
    cert.reason = "no structural certificate applies";
    return cert;
}

MegaVerdict megainjective_probe(const Ext& ext, unsigned r_max, const SampleSpec& spec,
                                Rng& rng, size_t dim_cap) {
    MegaVerdict verdict;
    verdict.r_max = r_max;

    MegaCertificate cert = megainjective_certificate(ext);
    if (cert.kind == MegaCertKind::Refuted && cert.witness) {
        verdict.witness = cert.witness;
        verdict.sample_desc = "fast path: " + cert.reason;
        return verdict;
    }

    std::vector<RingElem> samples = analysis_samples(ext, spec, rng);
    verdict.sample_desc = "generators, image coefficients and " +
                          std::to_string(spec.random_count) + " random elements (degree <= " +
                          std::to_string(spec.degree_bound) + ")";

    for (const RingElem& a : samples) {
        for (unsigned r = 1; r <= r_max; ++r) {
            RingMatrix m = ext->sigma->power_eval(a, r, dim_cap);
            if (m.is_zero()) {
                std::vector<RingElem> b(m.cols(), RingElem::zero(ext->ring));
                b[0] = RingElem::one(ext->ring);
                verdict.witness = checked_witness(ext, a, r, std::move(b), dim_cap);
                return verdict;
            }
            DependenceResult dep = solve_right_dependence(m);
            if (dep.kind == DependenceKind::Witness) {
                verdict.witness = checked_witness(ext, a, r, std::move(dep.vec), dim_cap);
                return verdict;
            }
            if (dep.kind == DependenceKind::Unsupported) {
                // no decision procedure: bounded random vector search
                for (size_t t = 0; t < spec.random_count; ++t) {
                    std::vector<RingElem> b;
                    bool nonzero = false;
                    for (size_t c = 0; c < m.cols(); ++c) {
                        b.push_back(random_element(ext->ring, rng, spec.degree_bound,
                                                   spec.coeff_bound));
                        nonzero = nonzero || !b.back().is_zero();
                    }
                    if (nonzero && vector_is_zero(m.mul_vector(b))) {
                        verdict.witness = checked_witness(ext, a, r, std::move(b), dim_cap);
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

ZeroDivisorResult zero_divisor_from_witness(const Ext& ext, const DependenceWitness& w) {
    std::vector<Word> words = enumerate_words(w.r, ext->n);
    if (words.size() != w.b.size())
        throw DomainError("witness vector length does not match |<X>_r|");
    SkewPoly f = SkewPoly::constant(ext, w.a);
    TermMap gterms;
    for (size_t j = 0; j < words.size(); ++j) {
        if (!w.b[j].is_zero()) gterms.emplace(words[j], w.b[j]);
    }
    SkewPoly g = SkewPoly::from_terms(ext, std::move(gterms));
    if (f.is_zero() || g.is_zero())
        throw DomainError("zero_divisor_from_witness needs a nondegenerate witness");

    SkewPoly prod = f * g;
    ZeroDivisorResult out{std::move(f), std::move(g), false};
    if (ext->delta->is_zero_map()) {
        if (!prod.is_zero())
            throw DomainError("internal: witness product is nonzero despite delta = 0");
        out.product_zero = true;
    } else {
        // with a derivation present the construction only drops the degree below r
        auto d = prod.deg();
        if (d && *d >= w.r)
            throw DomainError("internal: witness product did not drop degree");
    }
    return out;
}

// ---------------------------------------------------------------------------
// degree additivity
// ---------------------------------------------------------------------------

AdditivityReport degree_additivity_check(const Ext& ext, const SampleSpec& spec, Rng& rng,
                                         size_t sample_pairs) {
    AdditivityReport rep;
    for (size_t s = 0; s < sample_pairs; ++s) {
        SkewPoly f = random_skew_poly(ext, rng, 3, spec.degree_bound, spec.coeff_bound);
        SkewPoly g = random_skew_poly(ext, rng, 3, spec.degree_bound, spec.coeff_bound);
        SkewPoly fg = f * g;
        ++rep.pairs;
        if (f.is_zero() || g.is_zero()) {
            if (!fg.is_zero()) rep.pseudo_valuation_ok = false;
            continue;
        }
        size_t expected = *f.deg() + *g.deg();
        auto actual = fg.deg();
        if (actual && *actual > expected) {
            rep.pseudo_valuation_ok = false;
            continue;
        }
        if (actual && *actual == expected) continue;

        // strict drop: the top components must produce a dependence witness
        ++rep.drops;
        unsigned r = static_cast<unsigned>(*g.deg());
        SkewPoly ftop = f.graded_component(*f.deg());
        SkewPoly gtop = g.graded_component(r);
        std::vector<Word> words = enumerate_words(r, ext->n);
        std::vector<RingElem> b;
        b.reserve(words.size());
        for (const Word& w : words) b.push_back(gtop.coeff(w));
        RingElem a = ftop.leading().second;
        try {
            DependenceWitness wit = checked_witness(ext, a, r, b, kDefaultWordCap);
            rep.records.push_back({f, g, expected, actual, std::move(wit)});
        } catch (const DomainError&) {
            rep.all_drops_witnessed = false;
            rep.records.push_back({f, g, expected, actual, DependenceWitness{a, r, b}});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// primeness
// ---------------------------------------------------------------------------

namespace {

// exact decision in the scalar-sigma / delta = 0 / commutative regime:
// aSb = 0 iff ab = 0
bool scalar_regime(const Ext& ext) {
    return ext->sigma->is_scalar() && ext->delta->is_zero_map();
}

bool verify_not_prime_pair(const Ext& ext, const RingElem& a, const RingElem& b, Rng& rng) {
    std::vector<RingElem> probes{RingElem::one(ext->ring)};
    for (const auto& [name, gen] : ring_generators(ext->ring)) {
        probes.push_back(gen);
        for (const auto& [name2, gen2] : ring_generators(ext->ring))
            probes.push_back(gen * gen2);
    }
    for (size_t i = 0; i < 16; ++i) probes.push_back(random_element(ext->ring, rng, 3));
    return std::all_of(probes.begin(), probes.end(), [&](const RingElem& c) {
        return (a * c * b).is_zero();
    });
}

}  // namespace

PrimeVerdict prime_probe(const Ext& ext, size_t degree_bound, const SampleSpec& spec, Rng& rng,
                         const RingMatrix* conjugator) {
    PrimeVerdict verdict;
    if (!ext->sigma->upper_triangular()) {
        verdict.kind = PrimeVerdict::Kind::Inconclusive;
        verdict.detail = "precondition unverified: sigma is not upper triangular";
        if (conjugator)
            verdict.detail +=
                "; a conjugator was supplied: an R-ring isomorphism onto a triangular "
                "presentation exists, re-run the probe on the conjugated extension";
        return verdict;
    }
    for (unsigned i = 1; i <= ext->n; ++i) {
        auto aut = diag_is_automorphism(*ext->sigma, i);
        if (!aut) {
            verdict.kind = PrimeVerdict::Kind::Inconclusive;
            verdict.detail = "precondition unverified: sigma_" + std::to_string(i) +
                             std::to_string(i) + " automorphism status unknown";
            return verdict;
        }
        if (!*aut) {
            verdict.kind = PrimeVerdict::Kind::Inconclusive;
            verdict.detail = "precondition failed: sigma_" + std::to_string(i) +
                             std::to_string(i) + " is not an automorphism";
            return verdict;
        }
    }

    std::vector<RingElem> samples = analysis_samples(ext, spec, rng);
    bool exact = scalar_regime(ext);
    size_t pairs = 0;
    std::vector<Word> search_words;
    for (size_t len = 0; len <= degree_bound; ++len) {
        auto ws = enumerate_words(len, ext->n);
        search_words.insert(search_words.end(), ws.begin(), ws.end());
    }

    for (const RingElem& a : samples) {
        for (const RingElem& b : samples) {
            if (pairs >= spec.pair_cap) break;
            ++pairs;
            std::optional<Word> found;
            for (const Word& w : search_words) {
                if (!(ext->sigma->word_map(w, a) * b).is_zero()) {
                    found = w;
                    break;
                }
            }
            if (found) {
                verdict.certified_words.emplace_back(a, b, *found);
                continue;
            }
            if (exact && (a * b).is_zero() && verify_not_prime_pair(ext, a, b, rng)) {
                // scalar sigma and delta = 0 over a commutative ring:
                // a*w*c*b = w*(a c b) so aSb = 0 iff ab = 0
                verdict.kind = PrimeVerdict::Kind::NotPrime;
                verdict.detail =
                    "scalar sigma, zero delta, commutative coefficients: aSb = 0 iff ab = 0";
                verdict.pair = {a, b};
                return verdict;
            }
            verdict.kind = PrimeVerdict::Kind::Inconclusive;
            verdict.detail = "pair (" + a.str() + ", " + b.str() +
                             ") has sigma_w(a)*b = 0 for every word up to degree " +
                             std::to_string(degree_bound) +
                             " and no exact decision path applies";
            return verdict;
        }
    }
    verdict.kind = PrimeVerdict::Kind::Certified;
    verdict.detail = "every sampled pair (a,b) has a word w with sigma_w(a)*b != 0";
    return verdict;
}

// ---------------------------------------------------------------------------
// units
// ---------------------------------------------------------------------------

UnitProbeResult unit_probe(const Ext& ext, const SkewPoly& f, size_t degree_bound) {
    UnitProbeResult res;
    if (f.is_zero()) {
        res.kind = UnitProbeResult::Kind::NotUnit;
        res.detail = "the zero polynomial is not a unit";
        return res;
    }
    MegaCertificate cert = megainjective_certificate(ext);

    if (*f.deg() == 0) {
        RingElem c = f.leading().second;
        if (auto inv = c.try_invert()) {
            res.kind = UnitProbeResult::Kind::Unit;
            res.inverse = SkewPoly::constant(ext, *inv);
            res.detail = "constant with a ring inverse";
            return res;
        }
        if (cert.kind == MegaCertKind::Certified) {
            res.kind = UnitProbeResult::Kind::NotUnit;
            res.detail = "U(S) = U(R) under megainjectivity and " + c.str() +
                         " is not a unit of R";
            return res;
        }
    } else if (cert.kind == MegaCertKind::Certified) {
        res.kind = UnitProbeResult::Kind::NotUnit;
        res.detail = "megainjective configuration: deg is a degree function, so units "
                     "have degree 0";
        return res;
    }

    // degree-by-degree: solve f*g = 1 as a linear system over R in the
    // coefficients of g on words of length <= degree_bound
    std::vector<Word> cols;
    for (size_t len = 0; len <= degree_bound; ++len) {
        auto ws = enumerate_words(len, ext->n);
        cols.insert(cols.end(), ws.begin(), ws.end());
    }
    std::vector<SkewPoly> fw;
    fw.reserve(cols.size());
    std::map<Word, size_t, DeglexLess> row_index;
    row_index.emplace(Word(ext->n), 0);
    for (const Word& w : cols) {
        fw.push_back(f * SkewPoly::monomial(ext, w, RingElem::one(ext->ring)));
        for (const auto& [u, c] : fw.back().terms())
            row_index.emplace(u, row_index.size());
    }
    RingMatrix a(ext->ring, row_index.size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [u, c] : fw[j].terms()) a.at(row_index.at(u), j) = c;
    std::vector<RingElem> rhs(row_index.size(), RingElem::zero(ext->ring));
    rhs[row_index.at(Word(ext->n))] = RingElem::one(ext->ring);

    if (auto sol = solve_linear_in_ring(a, rhs)) {
        TermMap gterms;
        for (size_t j = 0; j < cols.size(); ++j)
            if (!(*sol)[j].is_zero()) gterms.emplace(cols[j], (*sol)[j]);
        SkewPoly g = SkewPoly::from_terms(ext, std::move(gterms));
        if ((f * g) == SkewPoly::one(ext) && (g * f) == SkewPoly::one(ext)) {
            res.kind = UnitProbeResult::Kind::Unit;
            res.inverse = std::move(g);
            res.detail = "two-sided inverse found degree-by-degree";
            return res;
        }
    }
    res.kind = UnitProbeResult::Kind::NotUnitCertified;
    res.detail = "no inverse of degree <= " + std::to_string(degree_bound) +
                 " found; no degree function available to exclude larger ones";
    return res;
}

// ---------------------------------------------------------------------------
// graded transfer
// ---------------------------------------------------------------------------

GradedTransferReport graded_transfer_check(const Ext& ext, size_t degree_bound,
                                           const SampleSpec& spec, Rng& rng) {
    auto sigma = ext->sigma;
    auto zero_delta = std::make_shared<SigmaDerivation>(SigmaDerivation::zero(sigma));
    Ext graded = make_extension(sigma, zero_delta, rng.next());

    GradedTransferReport rep;
    rep.delta_zero = prime_probe(graded, degree_bound, spec, rng);
    rep.with_delta = prime_probe(ext, degree_bound, spec, rng);
    if (rep.delta_zero.kind == PrimeVerdict::Kind::Certified &&
        rep.with_delta.kind == PrimeVerdict::Kind::NotPrime)
        rep.implication_ok = false;
    return rep;
}

}  // namespace skewx
