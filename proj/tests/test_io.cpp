#include <doctest.h>

#include "skewx/io.hpp"
#include "skewx/oracle.hpp"
#include "test_configs.hpp"

using namespace skewx;
using namespace skewx::testcfg;

namespace {

const char* kDiagSpec = R"({
  "ring": {"kind": "poly", "base": {"kind": "rationals"}, "vars": ["t"]},
  "n": 2,
  "sigma": {"t": [["t", "0"], ["0", "0"]]}
})";

}  // namespace

TEST_CASE("loading the zero-divisor example spec") {
    Ext ext = load_ring_spec_text(kDiagSpec);
    CHECK(ext->n == 2);
    CHECK(ext->delta->is_zero_map());  // missing delta defaults to zero
    CHECK(ext->validation.hom.passed);
    CHECK(parse_skew_poly(ext, "t*x2").is_zero());
}

TEST_CASE("invalid specs are rejected with located errors") {
    CHECK_THROWS_AS(load_ring_spec_text("{"), SpecError);
    CHECK_THROWS_AS(load_ring_spec_text(R"({"n": 1})"), SpecError);
    CHECK_THROWS_AS(load_ring_spec_text(R"({"ring": {"kind": "frobnicator"}})"), SpecError);
    // arity mismatch in a sigma row
    CHECK_THROWS_AS(load_ring_spec_text(R"({
        "ring": {"kind": "poly", "base": {"kind": "rationals"}, "vars": ["t"]},
        "n": 2, "sigma": {"t": [["t", "0"], ["0"]]}})"),
                    SpecError);
    // delta row of the wrong length
    CHECK_THROWS_AS(load_ring_spec_text(R"({
        "ring": {"kind": "poly", "base": {"kind": "rationals"}, "vars": ["t"]},
        "n": 2, "delta": {"t": ["1"]}})"),
                    SpecError);
    // sigma(t)^k != 0 over a truncated ring is a load error
    CHECK_THROWS_AS(load_ring_spec_text(R"({
        "ring": {"kind": "trunc_poly", "base": {"kind": "rationals"}, "var": "t", "k": 2},
        "n": 1, "sigma": {"t": [["1 + t"]]}})"),
                    SpecError);
    // ring variables may not collide with the generator tokens
    CHECK_THROWS_AS(load_ring_spec_text(R"({
        "ring": {"kind": "poly", "base": {"kind": "rationals"}, "vars": ["x1"]},
        "n": 1})"),
                    SpecError);
}

TEST_CASE("inner delta section") {
    Ext ext = load_ring_spec_text(R"({
        "ring": {"kind": "trunc_poly", "base": {"kind": "rationals"}, "var": "t", "k": 3},
        "n": 1, "sigma": {"t": [["t + t^2"]]}, "delta": {"inner": ["1"]}})");
    CHECK(ext->delta->inner_vector().has_value());
    CHECK(ext->delta->component(lit(ext->ring, "t"), 1) == lit(ext->ring, "-t^2"));
}

TEST_CASE("expression parsing: worked examples") {
    Ext diag = load_ring_spec_text(kDiagSpec);
    CHECK(parse_skew_poly(diag, "t*x2").is_zero());

    Ext ore = ore_ddt();
    Ring r = ore->ring;
    SkewPoly p = parse_skew_poly(ore, "x1*t + t*x1");
    CHECK(p == SkewPoly::monomial(ore, Word(1, {1}), lit(r, "2*t")) +
                   SkewPoly::constant(ore, lit(r, "1")));

    Ext sc = scalar2_qt();
    SkewPoly sq = parse_skew_poly(sc, "(x1 + 1)^2");
    CHECK(sq == SkewPoly::monomial(sc, Word(2, {1, 1}), RingElem::one(sc->ring)) +
                    SkewPoly::monomial(sc, Word(2, {1}), lit(sc->ring, "2")) +
                    SkewPoly::one(sc));
}

TEST_CASE("expression grammar corners") {
    Ext ore = ore_ddt();
    Ring r = ore->ring;
    CHECK(parse_skew_poly(ore, "[t^2 + 1]*x1") ==
          push_left_coefficient(ore, lit(r, "t^2 + 1"), Word(1, {1})));
    CHECK(parse_skew_poly(ore, "1/2*x1") ==
          SkewPoly::monomial(ore, Word(1, {1}), lit(r, "1/2")));
    CHECK(parse_skew_poly(ore, "-x1 + x1").is_zero());
    CHECK(parse_skew_poly(ore, "x1^0") == SkewPoly::one(ore));
    CHECK(parse_skew_poly(ore, " ( t ) * ( x1 ) ") ==
          parse_skew_poly(ore, "t*x1"));
}

TEST_CASE("expression errors carry positions") {
    Ext ore = ore_ddt();
    CHECK_THROWS_AS(parse_skew_poly(ore, "x1 + "), ParseError);
    CHECK_THROWS_AS(parse_skew_poly(ore, "x2"), ParseError);   // arity 1
    CHECK_THROWS_AS(parse_skew_poly(ore, "u + 1"), ParseError);
    CHECK_THROWS_AS(parse_skew_poly(ore, "x1 ^ -1"), ParseError);
    CHECK_THROWS_AS(parse_skew_poly(ore, "[t"), ParseError);
    try {
        parse_skew_poly(ore, "x1 + %");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("grammar round trip on random normal forms") {
    Rng rng(2024);
    for (const Ext& ext : {ore_ddt(), diag_t0(), zmod6(), nilpotent_inner()}) {
        for (int i = 0; i < 40; ++i) {
            SkewPoly f = random_skew_poly(ext, rng, 3);
            SkewPoly reparsed = parse_skew_poly(ext, f.str());
            CHECK(reparsed == f);
            CHECK(reparsed.str() == f.str());
        }
    }
}

TEST_CASE("grammar round trip on a fixed corpus") {
    Ext ore = ore_ddt();
    for (const char* s : {"t*x1 + x1*t", "(x1 + t)^3", "x1*x1*[t^2 - 1/3] + [2]*x1",
                          "1 - x1", "t^2*x1 - x1*t^2", "((x1))*((t))"}) {
        SkewPoly f = parse_skew_poly(ore, s);
        CHECK(parse_skew_poly(ore, f.str()) == f);
    }
}

TEST_CASE("normalization agrees with the oracle on parsed input") {
    Ext ore = ore_ddt();
    SkewPoly f = parse_skew_poly(ore, "t^2 + x1*t");
    SkewPoly g = parse_skew_poly(ore, "x1^2 - t");
    CHECK(oracle_mul(f, g) == f * g);
}
