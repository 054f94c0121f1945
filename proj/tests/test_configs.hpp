#ifndef SKEWX_TEST_CONFIGS_HPP
#define SKEWX_TEST_CONFIGS_HPP

// Shared extension configurations mirroring the fixture specs; constructed
// programmatically so unit tests need no file IO.

#include "skewx/skew.hpp"

namespace skewx::testcfg {

inline RingElem lit(const Ring& r, const std::string& s) { return parse_ring_literal(r, s); }

inline Ring qt() { return RingDescriptor::poly(RingDescriptor::rationals(), {"t"}); }

inline RingMatrix mat(const Ring& r, std::vector<std::vector<std::string>> rows) {
    RingMatrix m(r, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = lit(r, rows[i][j]);
    return m;
}

inline Ext build(Ring ring, unsigned n, std::map<std::string, RingMatrix> sigma_images,
                 std::map<std::string, std::vector<RingElem>> delta_images, uint64_t seed = 0) {
    auto sig = std::make_shared<SigmaHom>(
        sigma_images.empty() ? SigmaHom::scalar(ring, n)
                             : SigmaHom::from_images(ring, n, std::move(sigma_images)));
    auto del = std::make_shared<SigmaDerivation>(
        delta_images.empty() ? SigmaDerivation::zero(sig)
                             : SigmaDerivation::from_images(sig, std::move(delta_images)));
    return make_extension(sig, del, seed);
}

/// Q[t], n = 1, sigma = id, delta = d/dt (the Ore model tx = xt + 1).
inline Ext ore_ddt() {
    Ring r = qt();
    std::map<std::string, std::vector<RingElem>> d;
    d.emplace("t", std::vector<RingElem>{RingElem::one(r)});
    return build(r, 1, {}, std::move(d));
}

/// Q[t], n = 2, sigma(t) = diag(t, 0), delta = 0 (the zero-divisor example).
inline Ext diag_t0() {
    Ring r = qt();
    std::map<std::string, RingMatrix> s;
    s.emplace("t", mat(r, {{"t", "0"}, {"0", "0"}}));
    return build(r, 2, std::move(s), {});
}

/// Q[t], n = 2, sigma(t) = [[t,1],[0,t]], delta = 0 (megainjective, triangular).
inline Ext triangular_t1() {
    Ring r = qt();
    std::map<std::string, RingMatrix> s;
    s.emplace("t", mat(r, {{"t", "1"}, {"0", "t"}}));
    return build(r, 2, std::move(s), {});
}

/// Z/6, n = 2, scalar sigma, delta = 0.
inline Ext zmod6() { return build(RingDescriptor::integers_mod(6), 2, {}, {}); }

/// Q[t], n = 1, sigma(t) = t + 1, delta(t) = 1 (shift plus derivation).
inline Ext shift_inner() {
    Ring r = qt();
    std::map<std::string, RingMatrix> s;
    s.emplace("t", mat(r, {{"t + 1"}}));
    std::map<std::string, std::vector<RingElem>> d;
    d.emplace("t", std::vector<RingElem>{RingElem::one(r)});
    return build(r, 1, std::move(s), std::move(d));
}

/// Q[t], n = 1, sigma = id, delta = 2 d/dt.
inline Ext scale2_ddt() {
    Ring r = qt();
    std::map<std::string, std::vector<RingElem>> d;
    d.emplace("t", std::vector<RingElem>{lit(r, "2")});
    return build(r, 1, {}, std::move(d));
}

/// Q[t1,t2], n = 2, scalar sigma, delta_j = d/dt_j.
inline Ext partials2() {
    Ring r = RingDescriptor::poly(RingDescriptor::rationals(), {"t1", "t2"});
    std::map<std::string, std::vector<RingElem>> d;
    d.emplace("t1", std::vector<RingElem>{lit(r, "1"), lit(r, "0")});
    d.emplace("t2", std::vector<RingElem>{lit(r, "0"), lit(r, "1")});
    return build(r, 2, {}, std::move(d));
}

/// Q[t]/(t^2), n = 2, scalar sigma, delta = 0 (not prime: t S t = 0).
inline Ext trunc2_scalar() {
    return build(RingDescriptor::trunc_poly(RingDescriptor::rationals(), "t", 2), 2, {}, {});
}

/// Q[t], n = 2, diagonal sigma with sigma_11 = id and sigma_22: t -> t+1.
inline Ext diag_auto() {
    Ring r = qt();
    std::map<std::string, RingMatrix> s;
    s.emplace("t", mat(r, {{"t", "0"}, {"0", "t + 1"}}));
    return build(r, 2, std::move(s), {});
}

/// Q[t]/(t^3), n = 1, sigma(t) = t + t^2, inner delta from c = (1).
inline Ext nilpotent_inner() {
    Ring r = RingDescriptor::trunc_poly(RingDescriptor::rationals(), "t", 3);
    std::map<std::string, RingMatrix> s;
    s.emplace("t", mat(r, {{"t + t^2"}}));
    auto sig = std::make_shared<SigmaHom>(SigmaHom::from_images(r, 1, std::move(s)));
    auto del = std::make_shared<SigmaDerivation>(
        SigmaDerivation::inner(sig, {RingElem::one(r)}));
    return make_extension(sig, del, 0);
}

/// Q[t], n = 2, scalar sigma, delta = 0.
inline Ext scalar2_qt() { return build(qt(), 2, {}, {}); }

}  // namespace skewx::testcfg

#endif
