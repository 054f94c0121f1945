#include <doctest.h>

#include "skewx/linalg.hpp"
#include "skewx/rings.hpp"

using namespace skewx;

namespace {

Ring q() { return RingDescriptor::rationals(); }
Ring z() { return RingDescriptor::integers(); }
Ring zmod(long m) { return RingDescriptor::integers_mod(m); }
Ring qt() { return RingDescriptor::poly(q(), {"t"}); }
Ring trunc(unsigned k) { return RingDescriptor::trunc_poly(q(), "t", k); }

RingElem lit(const Ring& r, const std::string& s) { return parse_ring_literal(r, s); }

}  // namespace

TEST_CASE("descriptor invariants") {
    CHECK_THROWS_AS(RingDescriptor::integers_mod(1), DomainError);
    CHECK_THROWS_AS(RingDescriptor::trunc_poly(q(), "t", 1), DomainError);
    CHECK_THROWS_AS(RingDescriptor::poly(q(), {}), DomainError);
    CHECK_THROWS_AS(RingDescriptor::poly(q(), {"t", "t"}), DomainError);
    CHECK_THROWS_AS(RingDescriptor::poly(z(), {"t"}), DomainError);   // base must be a field
    CHECK_THROWS_AS(RingDescriptor::poly(zmod(6), {"t"}), DomainError);
    CHECK_NOTHROW(RingDescriptor::poly(zmod(7), {"t"}));
}

TEST_CASE("basic arithmetic examples") {
    CHECK(lit(q(), "1/2") + lit(q(), "1/3") == lit(q(), "5/6"));
    CHECK(lit(zmod(6), "4") * lit(zmod(6), "3") == RingElem::zero(zmod(6)));
    Ring t2 = trunc(2);
    CHECK(lit(t2, "t") * lit(t2, "t") == RingElem::zero(t2));
    CHECK(lit(qt(), "t + 1") * lit(qt(), "t - 1") == lit(qt(), "t^2 - 1"));
}

TEST_CASE("try_invert examples") {
    CHECK(*lit(q(), "2").try_invert() == lit(q(), "1/2"));
    CHECK_FALSE(lit(qt(), "t").try_invert().has_value());
    // geometric-series inverse, checked by multiplying back to 1
    Ring t3 = trunc(3);
    auto inv = lit(t3, "1 + t").try_invert();
    REQUIRE(inv.has_value());
    CHECK(*inv == lit(t3, "1 - t + t^2"));
    CHECK(*inv * lit(t3, "1 + t") == RingElem::one(t3));
    CHECK(lit(t3, "1 + t") * *inv == RingElem::one(t3));
    CHECK_FALSE(lit(t3, "t").try_invert().has_value());
    CHECK(*lit(zmod(6), "5").try_invert() == lit(zmod(6), "5"));
    CHECK_FALSE(lit(zmod(6), "2").try_invert().has_value());
    CHECK_FALSE(RingElem::zero(q()).try_invert().has_value());
}

TEST_CASE("try_invert two-sidedness on random units") {
    Rng rng(11);
    for (const Ring& r : {q(), z(), zmod(12), qt(), trunc(4)}) {
        for (int i = 0; i < 40; ++i) {
            RingElem a = random_element(r, rng);
            if (auto b = a.try_invert()) {
                CHECK(a * *b == RingElem::one(r));
                CHECK(*b * a == RingElem::one(r));
            }
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(7);
    for (const Ring& r : {q(), z(), zmod(6), qt(),
                          RingDescriptor::poly(zmod(5), {"u", "v"}), trunc(3)}) {
        for (int i = 0; i < 60; ++i) {
            RingElem a = random_element(r, rng);
            RingElem b = random_element(r, rng);
            RingElem c = random_element(r, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * RingElem::one(r) == a);
            CHECK(RingElem::one(r) * a == a);
            CHECK(a + (-a) == RingElem::zero(r));
        }
    }
}

TEST_CASE("canonical form round-trips through the literal grammar") {
    Rng rng(23);
    for (const Ring& r : {q(), z(), zmod(9), qt(), RingDescriptor::poly(q(), {"t1", "t2"}),
                          trunc(4)}) {
        for (int i = 0; i < 50; ++i) {
            RingElem a = random_element(r, rng);
            CHECK(parse_ring_literal(r, a.str()) == a);
            CHECK(parse_ring_literal(r, a.str()).str() == a.str());
        }
    }
}

TEST_CASE("ring_is_domain") {
    CHECK(ring_is_domain(q()));
    CHECK(ring_is_domain(z()));
    CHECK(ring_is_domain(zmod(7)));
    CHECK_FALSE(ring_is_domain(zmod(6)));
    CHECK(ring_is_domain(qt()));
    CHECK_FALSE(ring_is_domain(trunc(2)));
}

TEST_CASE("div_exact") {
    CHECK(*lit(z(), "12").div_exact(lit(z(), "4")) == lit(z(), "3"));
    CHECK_FALSE(lit(z(), "7").div_exact(lit(z(), "2")).has_value());
    CHECK(*lit(qt(), "t^2 - 1").div_exact(lit(qt(), "t - 1")) == lit(qt(), "t + 1"));
    CHECK_FALSE(lit(qt(), "t^2 + 1").div_exact(lit(qt(), "t")).has_value());
    Ring uv = RingDescriptor::poly(q(), {"u", "v"});
    CHECK(*lit(uv, "u^2 - v^2").div_exact(lit(uv, "u + v")) == lit(uv, "u - v"));
    Ring t3 = trunc(3);
    CHECK(*lit(t3, "t^2").div_exact(lit(t3, "t")) * lit(t3, "t") == lit(t3, "t^2"));
}

TEST_CASE("solve_right_dependence: the zero-divisor matrix of the motivating example") {
    Ring r = qt();
    RingMatrix m(r, 2, 2);
    m.at(0, 0) = lit(r, "t");
    // columns (t,0) and (0,0): second column is zero
    DependenceResult dep = solve_right_dependence(m);
    REQUIRE(dep.kind == DependenceKind::Witness);
    CHECK(dep.vec[0].is_zero());
    CHECK_FALSE(dep.vec[1].is_zero());
    auto mv = m.mul_vector(dep.vec);
    CHECK(mv[0].is_zero());
    CHECK(mv[1].is_zero());
}

TEST_CASE("solve_right_dependence: independence cases") {
    CHECK(solve_right_dependence(RingMatrix::identity(q(), 2)).kind ==
          DependenceKind::Independent);

    Ring r = qt();
    RingMatrix m(r, 2, 2);
    m.at(0, 0) = lit(r, "t");
    m.at(0, 1) = lit(r, "1");
    m.at(1, 1) = lit(r, "t");
    CHECK(solve_right_dependence(m).kind == DependenceKind::Independent);
    // independent route: the determinant t^2 is nonzero over the domain
    CHECK(determinant(m) == lit(r, "t^2"));
    CHECK_FALSE(determinant(m).is_zero());
}

TEST_CASE("solve_right_dependence: finite searches") {
    Ring r6 = zmod(6);
    RingMatrix m(r6, 1, 1);
    m.at(0, 0) = lit(r6, "2");
    DependenceResult dep = solve_right_dependence(m);
    REQUIRE(dep.kind == DependenceKind::Witness);
    CHECK((m.at(0, 0) * dep.vec[0]).is_zero());

    CHECK(solve_right_dependence(RingMatrix::identity(r6, 2)).kind ==
          DependenceKind::Independent);

    Ring t2 = trunc(2);
    RingMatrix mt(t2, 1, 1);
    mt.at(0, 0) = lit(t2, "t");
    DependenceResult dt = solve_right_dependence(mt);
    REQUIRE(dt.kind == DependenceKind::Witness);
    CHECK((mt.at(0, 0) * dt.vec[0]).is_zero());
    // degree-bounded candidates cannot certify independence over TruncPoly
    CHECK(solve_right_dependence(RingMatrix::identity(t2, 1)).kind ==
          DependenceKind::Unsupported);
}

TEST_CASE("solve_right_dependence over the integers clears denominators") {
    Ring r = z();
    RingMatrix m(r, 2, 2);
    m.at(0, 0) = lit(r, "2");
    m.at(0, 1) = lit(r, "4");
    m.at(1, 0) = lit(r, "3");
    m.at(1, 1) = lit(r, "6");
    DependenceResult dep = solve_right_dependence(m);
    REQUIRE(dep.kind == DependenceKind::Witness);
    auto mv = m.mul_vector(dep.vec);
    CHECK(mv[0].is_zero());
    CHECK(mv[1].is_zero());
    CHECK_FALSE((dep.vec[0].is_zero() && dep.vec[1].is_zero()));
}

TEST_CASE("matrix inverse over the ring itself") {
    Ring r = qt();
    RingMatrix m = RingMatrix::identity(r, 2);
    m.at(0, 1) = lit(r, "t");
    auto inv = invert_matrix(m);
    REQUIRE(inv.has_value());
    CHECK(inv->at(0, 1) == lit(r, "-t"));

    RingMatrix sing(r, 2, 2);
    sing.at(0, 0) = lit(r, "t");
    sing.at(1, 1) = lit(r, "t");
    CHECK_FALSE(invert_matrix(sing).has_value());  // det t^2 is not a unit of Q[t]

    Ring t2 = trunc(2);
    RingMatrix u = RingMatrix::identity(t2, 2);
    u.at(0, 0) = lit(t2, "1 + t");
    u.at(0, 1) = lit(t2, "t");
    auto uinv = invert_matrix(u);
    REQUIRE(uinv.has_value());
    CHECK(*uinv * u == RingMatrix::identity(t2, 2));
}

TEST_CASE("solve_linear_in_ring") {
    Ring r = qt();
    RingMatrix a(r, 2, 2);
    a.at(0, 0) = lit(r, "1");
    a.at(0, 1) = lit(r, "t");
    a.at(1, 1) = lit(r, "1");
    auto x = solve_linear_in_ring(a, {lit(r, "t^2 + 1"), lit(r, "t")});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == lit(r, "1"));
    CHECK((*x)[1] == lit(r, "t"));

    RingMatrix b(r, 1, 1);
    b.at(0, 0) = lit(r, "t");
    CHECK_FALSE(solve_linear_in_ring(b, {lit(r, "1")}).has_value());  // 1/t leaves R
}

TEST_CASE("literal parser errors") {
    CHECK_THROWS_AS(parse_ring_literal(q(), "1 +"), ParseError);
    CHECK_THROWS_AS(parse_ring_literal(q(), "(1"), ParseError);
    CHECK_THROWS_AS(parse_ring_literal(qt(), "s + 1"), ParseError);
    CHECK_THROWS_AS(parse_ring_literal(z(), "1/2"), DomainError);
    CHECK(parse_ring_literal(zmod(5), "1/2") == lit(zmod(5), "3"));
}

TEST_CASE("descriptor mismatch is a DomainError") {
    CHECK_THROWS_AS(RingElem::one(q()) + RingElem::one(z()), DomainError);
    CHECK_THROWS_AS(RingElem::one(zmod(5)) * RingElem::one(zmod(7)), DomainError);
}
