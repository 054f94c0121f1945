#ifndef SKEWX_SERIES_HPP
#define SKEWX_SERIES_HPP

#include <optional>

#include "skewx/poly.hpp"

namespace skewx {

/// Truncated skew power series: coefficients of words of length <= trunc are
/// exact, longer words are unspecified. Stored words never exceed trunc and
/// zero coefficients are never stored.
struct TruncSeries {
    Ext ext;
    size_t trunc = 0;
    TermMap terms;
};

TruncSeries make_series(Ext ext, size_t trunc, TermMap terms);
/// Treat a polynomial as a series exact up to `trunc` (drops longer words).
TruncSeries series_from_poly(const SkewPoly& p, size_t trunc);
/// Restrict to words of length <= q.
TruncSeries truncate(const TruncSeries& s, size_t q);

struct NqOptions {
    size_t composition_cap = 64;     // nilpotence search depth
    size_t word_cap = kDefaultWordCap;  // |<X>_N| enumeration guard
};

/// Inductive order bound: N_0(a) is the nilpotence bound of
/// a; N_{q+1} = p + N_q with p a joint nilpotence bound for all coefficients
/// of a*w over w of length N_q. Guarantees |w| >= N_q implies a*w = 0 or
/// ord(a*w) > q. nullopt when a nilpotence search exceeds the cap (delta not
/// certified locally nilpotent at a).
std::optional<size_t> nq_bound(const Ext& ext, const RingElem& a, size_t q,
                               const NqOptions& opts = {});

struct InsufficientTruncation : std::runtime_error {
    InsufficientTruncation(size_t have, size_t need)
        : std::runtime_error("series factor truncated at " + std::to_string(have) +
                             " but the product needs exact words up to " +
                             std::to_string(need - 1) + " (s(q) = " + std::to_string(need) + ")"),
          have(have),
          need(need) {}
    size_t have, need;
};

struct UnknownNilpotence : std::runtime_error {
    UnknownNilpotence()
        : std::runtime_error("delta could not be certified locally nilpotent within the cap") {}
};

/// Product coefficients for all words of length <= q, via the finite sum over
/// |v| <= q, |w| < s(q) evaluated by the polynomial engine. Requires
/// f.trunc >= q and g.trunc >= s(q).
TruncSeries series_mul_trunc(const TruncSeries& f, const TruncSeries& g, size_t q,
                             const NqOptions& opts = {});

/// Minimal stored word length; nullopt when no term is stored ("above truncation").
std::optional<size_t> ord_series(const TruncSeries& s);

std::string render_series(const TruncSeries& s);

}  // namespace skewx

#endif
