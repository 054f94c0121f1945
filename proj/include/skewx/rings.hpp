#ifndef SKEWX_RINGS_HPP
#define SKEWX_RINGS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skewx/errors.hpp"
#include "skewx/rand.hpp"

namespace skewx {

using Int = mpz_class;
using Rat = mpq_class;

enum class RingKind { Integers, Rationals, IntegersMod, Poly, TruncPoly };

struct RingDescriptor;

/// Descriptors are immutable and shared; structural equality via same_ring().
using Ring = std::shared_ptr<const RingDescriptor>;

struct RingDescriptor {
    RingKind kind;
    Int modulus;                     // IntegersMod: m >= 2
    Ring base;                       // Poly / TruncPoly coefficient field
    std::vector<std::string> vars;   // Poly variable names, distinct
    std::string var;                 // TruncPoly variable name
    unsigned order = 0;              // TruncPoly nilpotency order k >= 2

    static Ring integers();
    static Ring rationals();
    static Ring integers_mod(const Int& m);
    static Ring poly(Ring base, std::vector<std::string> vars);
    static Ring trunc_poly(Ring base, std::string var, unsigned k);
};

bool same_ring(const Ring& a, const Ring& b);
std::string ring_name(const Ring& r);

/// true for Z, Q, Z/p (p prime), Poly over a field; false for Z/m composite, TruncPoly.
bool ring_is_domain(const Ring& r);
bool ring_is_field(const Ring& r);
bool is_probable_prime(const Int& n);

/// Exponent vector of a Poly monomial, one entry per variable.
using Monomial = std::vector<uint32_t>;
int cmp_grlex(const Monomial& a, const Monomial& b);  // <0, 0, >0

/// Exact element of one of the supported rings, always in canonical form:
/// fractions reduced, residues in [0,m), no zero poly coefficients stored,
/// truncated polynomials hold exponents < k only. Equality of values is
/// equality of representations.
class RingElem {
public:
    struct PolyVal {
        // sorted descending graded-lex, coefficients nonzero, in the base field
        std::vector<std::pair<Monomial, RingElem>> terms;
    };
    struct TruncVal {
        // coeffs[e] is the coefficient of var^e; size <= k, trailing zeros trimmed
        std::vector<RingElem> coeffs;
    };

    static RingElem zero(const Ring& r);
    static RingElem one(const Ring& r);
    static RingElem from_int(const Ring& r, const Int& v);
    static RingElem from_rational(const Ring& r, const Rat& v);  // Rationals only
    /// The generator named `name` (a Poly variable or the TruncPoly variable).
    static RingElem variable(const Ring& r, const std::string& name);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    RingElem pow(uint64_t e) const;

    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    /// Total order consistent with equality; used for canonical sorting and memo keys.
    static int compare(const RingElem& a, const RingElem& b);

    /// Two-sided inverse, or nullopt if not a unit.
    std::optional<RingElem> try_invert() const;
    /// Exact quotient this/d, or nullopt when d does not divide exactly.
    std::optional<RingElem> div_exact(const RingElem& d) const;

    /// Canonical literal text (round-trips through parse_ring_literal).
    std::string str() const;

    // raw accessors (valid for the matching kind)
    const Int& int_value() const { return std::get<Int>(v_); }
    const Rat& rat_value() const { return std::get<Rat>(v_); }
    const PolyVal& poly_value() const { return std::get<PolyVal>(v_); }
    const TruncVal& trunc_value() const { return std::get<TruncVal>(v_); }

    /// Total degree for Poly (0 for constants); max exponent for TruncPoly.
    /// Zero and non-polynomial elements report 0.
    unsigned poly_degree() const;

    static RingElem make_poly(const Ring& r, std::vector<std::pair<Monomial, RingElem>> terms);
    static RingElem make_trunc(const Ring& r, std::vector<RingElem> coeffs);

private:
    RingElem(Ring r, std::variant<Int, Rat, PolyVal, TruncVal> v)
        : ring_(std::move(r)), v_(std::move(v)) {}

    Ring ring_;
    std::variant<Int, Rat, PolyVal, TruncVal> v_;
};

void require_same_ring(const RingElem& a, const RingElem& b, const char* op);

/// Named generators of the ring (Poly variables / the TruncPoly variable);
/// empty for Z, Q, Z/m.
std::vector<std::pair<std::string, RingElem>> ring_generators(const Ring& r);

/// Text -> element, full +,-,*,/,^ grammar over integers, fractions and
/// ring variable names. Throws ParseError / DomainError.
RingElem parse_ring_literal(const Ring& r, std::string_view text);

/// Deterministic sample with coefficients of bounded size and degree <= deg_bound.
RingElem random_element(const Ring& r, Rng& rng, int deg_bound = 3, int coeff_bound = 5);

class RingMatrix {
public:
    RingMatrix(Ring r, size_t rows, size_t cols);
    static RingMatrix identity(const Ring& r, size_t n);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    RingElem& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const RingElem& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator*(const RingMatrix& o) const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_upper_triangular() const;
    std::vector<RingElem> mul_vector(const std::vector<RingElem>& v) const;  // M * column
    std::string str() const;

private:
    Ring ring_;
    size_t rows_, cols_;
    std::vector<RingElem> e_;
};

/// Row-vector * matrix, as in delta(r) * sigma(s).
std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& row, const RingMatrix& m);

}  // namespace skewx

#endif
