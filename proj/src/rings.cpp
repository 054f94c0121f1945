#include "skewx/rings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skewx {

// ---------------------------------------------------------------------------
// descriptors
// ---------------------------------------------------------------------------

Ring RingDescriptor::integers() {
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Integers;
    return d;
}

Ring RingDescriptor::rationals() {
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Rationals;
    return d;
}

Ring RingDescriptor::integers_mod(const Int& m) {
    if (m < 2) throw DomainError("IntegersMod modulus must be >= 2");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::IntegersMod;
    d->modulus = m;
    return d;
}

Ring RingDescriptor::poly(Ring base, std::vector<std::string> vars) {
    if (!base || !ring_is_field(base))
        throw DomainError("Poly base must be Rationals or IntegersMod with prime modulus");
    if (vars.empty()) throw DomainError("Poly needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty() || !seen.insert(v).second)
            throw DomainError("Poly variable names must be nonempty and distinct");
    }
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Poly;
    d->base = std::move(base);
    d->vars = std::move(vars);
    return d;
}

Ring RingDescriptor::trunc_poly(Ring base, std::string var, unsigned k) {
    if (!base || !ring_is_field(base))
        throw DomainError("TruncPoly base must be Rationals or IntegersMod with prime modulus");
    if (k < 2) throw DomainError("TruncPoly order must be >= 2");
    if (var.empty()) throw DomainError("TruncPoly variable name must be nonempty");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::TruncPoly;
    d->base = std::move(base);
    d->var = std::move(var);
    d->order = k;
    return d;
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RingKind::Integers:
        case RingKind::Rationals:
            return true;
        case RingKind::IntegersMod:
            return a->modulus == b->modulus;
        case RingKind::Poly:
            return a->vars == b->vars && same_ring(a->base, b->base);
        case RingKind::TruncPoly:
            return a->var == b->var && a->order == b->order && same_ring(a->base, b->base);
    }
    return false;
}

std::string ring_name(const Ring& r) {
    switch (r->kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::IntegersMod: return "Z/" + r->modulus.get_str();
        case RingKind::Poly: {
            std::string s = ring_name(r->base) + "[";
            for (size_t i = 0; i < r->vars.size(); ++i) {
                if (i) s += ",";
                s += r->vars[i];
            }
            return s + "]";
        }
        case RingKind::TruncPoly:
            return ring_name(r->base) + "[" + r->var + "]/(" + r->var + "^" +
                   std::to_string(r->order) + ")";
    }
    return "?";
}

bool is_probable_prime(const Int& n) {
    // deterministic for anything desk-scale; GMP's test is BPSW + Miller-Rabin
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool ring_is_field(const Ring& r) {
    switch (r->kind) {
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod: return is_probable_prime(r->modulus);
        default: return false;
    }
}

bool ring_is_domain(const Ring& r) {
    switch (r->kind) {
        case RingKind::Integers:
        case RingKind::Rationals:
            return true;
        case RingKind::IntegersMod: return is_probable_prime(r->modulus);
        case RingKind::Poly: return true;  // base is a field by construction
        case RingKind::TruncPoly: return false;
    }
    return false;
}

int cmp_grlex(const Monomial& a, const Monomial& b) {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// RingElem construction & canonical form
// ---------------------------------------------------------------------------

namespace {

Int mod_reduce(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_grlex(a, b) > 0; }
};

}  // namespace

RingElem RingElem::make_poly(const Ring& r, std::vector<std::pair<Monomial, RingElem>> terms) {
    std::map<Monomial, RingElem, GrlexGreater> acc;
    for (auto& [m, c] : terms) {
        if (m.size() != r->vars.size()) throw DomainError("monomial arity mismatch");
        if (c.is_zero()) continue;
        auto it = acc.find(m);
        if (it == acc.end()) {
            acc.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    PolyVal pv;
    pv.terms.reserve(acc.size());
    for (auto& [m, c] : acc) pv.terms.emplace_back(m, c);
    return RingElem(r, std::move(pv));
}

RingElem RingElem::make_trunc(const Ring& r, std::vector<RingElem> coeffs) {
    if (coeffs.size() > r->order)
        coeffs.erase(coeffs.begin() + static_cast<long>(r->order), coeffs.end());
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    TruncVal tv;
    tv.coeffs = std::move(coeffs);
    return RingElem(r, std::move(tv));
}

RingElem RingElem::zero(const Ring& r) { return from_int(r, 0); }
RingElem RingElem::one(const Ring& r) { return from_int(r, 1); }

RingElem RingElem::from_int(const Ring& r, const Int& v) {
    switch (r->kind) {
        case RingKind::Integers: return RingElem(r, v);
        case RingKind::Rationals: return RingElem(r, Rat(v));
        case RingKind::IntegersMod: return RingElem(r, mod_reduce(v, r->modulus));
        case RingKind::Poly: {
            RingElem c = from_int(r->base, v);
            if (c.is_zero()) return RingElem(r, PolyVal{});
            PolyVal pv;
            pv.terms.emplace_back(Monomial(r->vars.size(), 0), std::move(c));
            return RingElem(r, std::move(pv));
        }
        case RingKind::TruncPoly: {
            RingElem c = from_int(r->base, v);
            TruncVal tv;
            if (!c.is_zero()) tv.coeffs.push_back(std::move(c));
            return RingElem(r, std::move(tv));
        }
    }
    throw DomainError("bad ring kind");
}

RingElem RingElem::from_rational(const Ring& r, const Rat& v) {
    if (r->kind != RingKind::Rationals) throw DomainError("from_rational needs the rationals");
    Rat c = v;
    c.canonicalize();
    return RingElem(r, std::move(c));
}

RingElem RingElem::variable(const Ring& r, const std::string& name) {
    if (r->kind == RingKind::Poly) {
        for (size_t i = 0; i < r->vars.size(); ++i) {
            if (r->vars[i] == name) {
                Monomial m(r->vars.size(), 0);
                m[i] = 1;
                PolyVal pv;
                pv.terms.emplace_back(std::move(m), one(r->base));
                return RingElem(r, std::move(pv));
            }
        }
    } else if (r->kind == RingKind::TruncPoly && r->var == name) {
        TruncVal tv;
        tv.coeffs = {zero(r->base), one(r->base)};
        return RingElem(r, std::move(tv));
    }
    throw DomainError("unknown ring variable '" + name + "' in " + ring_name(r));
}

bool RingElem::is_zero() const {
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return std::get<Int>(v_) == 0;
        case RingKind::Rationals: return std::get<Rat>(v_) == 0;
        case RingKind::Poly: return std::get<PolyVal>(v_).terms.empty();
        case RingKind::TruncPoly: return std::get<TruncVal>(v_).coeffs.empty();
    }
    return false;
}

bool RingElem::is_one() const {
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return std::get<Int>(v_) == 1;
        case RingKind::Rationals: return std::get<Rat>(v_) == 1;
        case RingKind::Poly: {
            const auto& t = std::get<PolyVal>(v_).terms;
            return t.size() == 1 && t[0].second.is_one() &&
                   std::all_of(t[0].first.begin(), t[0].first.end(),
                               [](uint32_t e) { return e == 0; });
        }
        case RingKind::TruncPoly: {
            const auto& c = std::get<TruncVal>(v_).coeffs;
            return c.size() == 1 && c[0].is_one();
        }
    }
    return false;
}

void require_same_ring(const RingElem& a, const RingElem& b, const char* op) {
    if (!same_ring(a.ring(), b.ring()))
        throw DomainError(std::string(op) + ": ring descriptor mismatch (" +
                          ring_name(a.ring()) + " vs " + ring_name(b.ring()) + ")");
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(*this, o, "add");
    switch (ring_->kind) {
        case RingKind::Integers:
            return RingElem(ring_, Int(std::get<Int>(v_) + std::get<Int>(o.v_)));
        case RingKind::Rationals:
            return RingElem(ring_, Rat(std::get<Rat>(v_) + std::get<Rat>(o.v_)));
        case RingKind::IntegersMod:
            return RingElem(ring_, mod_reduce(std::get<Int>(v_) + std::get<Int>(o.v_), ring_->modulus));
        case RingKind::Poly: {
            std::vector<std::pair<Monomial, RingElem>> merged = std::get<PolyVal>(v_).terms;
            const auto& other = std::get<PolyVal>(o.v_).terms;
            merged.insert(merged.end(), other.begin(), other.end());
            return make_poly(ring_, std::move(merged));
        }
        case RingKind::TruncPoly: {
            const auto& a = std::get<TruncVal>(v_).coeffs;
            const auto& b = std::get<TruncVal>(o.v_).coeffs;
            std::vector<RingElem> out;
            size_t n = std::max(a.size(), b.size());
            out.reserve(n);
            for (size_t i = 0; i < n; ++i) {
                if (i < a.size() && i < b.size()) out.push_back(a[i] + b[i]);
                else out.push_back(i < a.size() ? a[i] : b[i]);
            }
            return make_trunc(ring_, std::move(out));
        }
    }
    throw DomainError("bad ring kind");
}

RingElem RingElem::operator-() const {
    switch (ring_->kind) {
        case RingKind::Integers: return RingElem(ring_, Int(-std::get<Int>(v_)));
        case RingKind::Rationals: return RingElem(ring_, Rat(-std::get<Rat>(v_)));
        case RingKind::IntegersMod:
            return RingElem(ring_, mod_reduce(-std::get<Int>(v_), ring_->modulus));
        case RingKind::Poly: {
            PolyVal pv = std::get<PolyVal>(v_);
            for (auto& [m, c] : pv.terms) c = -c;
            return RingElem(ring_, std::move(pv));
        }
        case RingKind::TruncPoly: {
            TruncVal tv = std::get<TruncVal>(v_);
            for (auto& c : tv.coeffs) c = -c;
            return RingElem(ring_, std::move(tv));
        }
    }
    throw DomainError("bad ring kind");
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(*this, o, "mul");
    switch (ring_->kind) {
        case RingKind::Integers: return RingElem(ring_, Int(std::get<Int>(v_) * std::get<Int>(o.v_)));
        case RingKind::Rationals: return RingElem(ring_, Rat(std::get<Rat>(v_) * std::get<Rat>(o.v_)));
        case RingKind::IntegersMod:
            return RingElem(ring_, mod_reduce(std::get<Int>(v_) * std::get<Int>(o.v_), ring_->modulus));
        case RingKind::Poly: {
            const auto& a = std::get<PolyVal>(v_).terms;
            const auto& b = std::get<PolyVal>(o.v_).terms;
            std::vector<std::pair<Monomial, RingElem>> prod;
            prod.reserve(a.size() * b.size());
            for (const auto& [ma, ca] : a) {
                for (const auto& [mb, cb] : b) {
                    Monomial m(ma.size());
                    for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                    prod.emplace_back(std::move(m), ca * cb);
                }
            }
            return make_poly(ring_, std::move(prod));
        }
        case RingKind::TruncPoly: {
            const auto& a = std::get<TruncVal>(v_).coeffs;
            const auto& b = std::get<TruncVal>(o.v_).coeffs;
            if (a.empty() || b.empty()) return zero(ring_);
            size_t k = ring_->order;
            std::vector<RingElem> out(std::min(a.size() + b.size() - 1, static_cast<size_t>(k)),
                                      zero(ring_->base));
            for (size_t i = 0; i < a.size(); ++i) {
                for (size_t j = 0; j < b.size() && i + j < k; ++j) {
                    out[i + j] = out[i + j] + a[i] * b[j];
                }
            }
            return make_trunc(ring_, std::move(out));
        }
    }
    throw DomainError("bad ring kind");
}

RingElem RingElem::pow(uint64_t e) const {
    RingElem acc = one(ring_);
    RingElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool RingElem::operator==(const RingElem& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    return compare(*this, o) == 0;
}

int RingElem::compare(const RingElem& a, const RingElem& b) {
    switch (a.ring_->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod: {
            int c = cmp(std::get<Int>(a.v_), std::get<Int>(b.v_));
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        case RingKind::Rationals: {
            int c = cmp(std::get<Rat>(a.v_), std::get<Rat>(b.v_));
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        case RingKind::Poly: {
            const auto& ta = std::get<PolyVal>(a.v_).terms;
            const auto& tb = std::get<PolyVal>(b.v_).terms;
            for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
                int c = cmp_grlex(ta[i].first, tb[i].first);
                if (c != 0) return c;
                c = compare(ta[i].second, tb[i].second);
                if (c != 0) return c;
            }
            if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
            return 0;
        }
        case RingKind::TruncPoly: {
            const auto& ca = std::get<TruncVal>(a.v_).coeffs;
            const auto& cb = std::get<TruncVal>(b.v_).coeffs;
            for (size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
                int c = compare(ca[i], cb[i]);
                if (c != 0) return c;
            }
            if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// inversion & exact division
// ---------------------------------------------------------------------------

std::optional<RingElem> RingElem::try_invert() const {
    switch (ring_->kind) {
        case RingKind::Integers: {
            const Int& v = std::get<Int>(v_);
            if (v == 1 || v == -1) return *this;
            return std::nullopt;
        }
        case RingKind::Rationals: {
            const Rat& v = std::get<Rat>(v_);
            if (v == 0) return std::nullopt;
            return RingElem(ring_, Rat(1 / v));
        }
        case RingKind::IntegersMod: {
            Int out;
            if (mpz_invert(out.get_mpz_t(), std::get<Int>(v_).get_mpz_t(),
                           ring_->modulus.get_mpz_t()) == 0)
                return std::nullopt;
            return RingElem(ring_, std::move(out));
        }
        case RingKind::Poly: {
            // units are the nonzero field constants
            const auto& t = std::get<PolyVal>(v_).terms;
            if (t.size() != 1) return std::nullopt;
            if (!std::all_of(t[0].first.begin(), t[0].first.end(),
                             [](uint32_t e) { return e == 0; }))
                return std::nullopt;
            auto ci = t[0].second.try_invert();
            if (!ci) return std::nullopt;
            PolyVal pv;
            pv.terms.emplace_back(t[0].first, *ci);
            return RingElem(ring_, std::move(pv));
        }
        case RingKind::TruncPoly: {
            // unit iff the constant term is; invert the series mod var^k
            const auto& c = std::get<TruncVal>(v_).coeffs;
            if (c.empty()) return std::nullopt;
            auto c0i = c[0].try_invert();
            if (!c0i) return std::nullopt;
            size_t k = ring_->order;
            std::vector<RingElem> b;
            b.reserve(k);
            b.push_back(*c0i);
            for (size_t i = 1; i < k; ++i) {
                RingElem s = RingElem::zero(ring_->base);
                for (size_t j = 1; j <= i; ++j) {
                    if (j < c.size()) s = s + c[j] * b[i - j];
                }
                b.push_back(-(*c0i * s));
            }
            return make_trunc(ring_, std::move(b));
        }
    }
    return std::nullopt;
}

std::optional<RingElem> RingElem::div_exact(const RingElem& d) const {
    require_same_ring(*this, d, "div_exact");
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return zero(ring_);
    switch (ring_->kind) {
        case RingKind::Integers: {
            const Int& a = std::get<Int>(v_);
            const Int& b = std::get<Int>(d.v_);
            if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
            Int q;
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return RingElem(ring_, std::move(q));
        }
        case RingKind::Rationals: {
            return RingElem(ring_, Rat(std::get<Rat>(v_) / std::get<Rat>(d.v_)));
        }
        case RingKind::IntegersMod: {
            if (auto inv = d.try_invert()) return *this * *inv;
            // general congruence q*d = a (mod m)
            const Int& a = std::get<Int>(v_);
            const Int& b = std::get<Int>(d.v_);
            Int g;
            mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), ring_->modulus.get_mpz_t());
            if (!mpz_divisible_p(a.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
            Int m2 = ring_->modulus / g, a2 = a / g, b2 = b / g, inv;
            if (mpz_invert(inv.get_mpz_t(), b2.get_mpz_t(), m2.get_mpz_t()) == 0)
                return std::nullopt;
            return RingElem(ring_, mod_reduce(a2 * inv, ring_->modulus));
        }
        case RingKind::Poly: {
            // leading-term reduction; succeeds exactly when d divides *this
            const auto& dt = std::get<PolyVal>(d.v_).terms;
            RingElem rem = *this;
            std::vector<std::pair<Monomial, RingElem>> quot;
            while (!rem.is_zero()) {
                const auto& rt = std::get<PolyVal>(rem.v_).terms;
                const Monomial& lm = rt[0].first;
                const Monomial& dm = dt[0].first;
                Monomial qm(lm.size());
                for (size_t i = 0; i < lm.size(); ++i) {
                    if (lm[i] < dm[i]) return std::nullopt;
                    qm[i] = lm[i] - dm[i];
                }
                auto lci = dt[0].second.try_invert();
                if (!lci) return std::nullopt;  // base is a field, so only if zero
                RingElem qc = rt[0].second * *lci;
                PolyVal mono;
                mono.terms.emplace_back(qm, qc);
                RingElem qterm(ring_, std::move(mono));
                quot.emplace_back(std::move(qm), std::move(qc));
                rem = rem - qterm * d;
            }
            return make_poly(ring_, std::move(quot));
        }
        case RingKind::TruncPoly: {
            const auto& dc = std::get<TruncVal>(d.v_).coeffs;
            size_t val = 0;
            while (val < dc.size() && dc[val].is_zero()) ++val;
            const auto& ac = std::get<TruncVal>(v_).coeffs;
            if (ac.size() <= val) return std::nullopt;
            for (size_t i = 0; i < val; ++i)
                if (!ac[i].is_zero()) return std::nullopt;
            // shift divisor and dividend down by the common valuation, then invert the unit
            std::vector<RingElem> unit(dc.begin() + static_cast<long>(val), dc.end());
            std::vector<RingElem> shifted(ac.begin() + static_cast<long>(val), ac.end());
            RingElem u = make_trunc(ring_, std::move(unit));
            RingElem h = make_trunc(ring_, std::move(shifted));
            auto ui = u.try_invert();
            if (!ui) return std::nullopt;
            RingElem q = h * *ui;
            if (q * d == *this) return q;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

unsigned RingElem::poly_degree() const {
    if (ring_->kind == RingKind::Poly) {
        const auto& t = std::get<PolyVal>(v_).terms;
        if (t.empty()) return 0;
        return static_cast<unsigned>(
            std::accumulate(t[0].first.begin(), t[0].first.end(), uint64_t{0}));
    }
    if (ring_->kind == RingKind::TruncPoly) {
        const auto& c = std::get<TruncVal>(v_).coeffs;
        return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

bool render_is_negative(const RingElem& c) {
    const Ring& r = c.ring();
    if (r->kind == RingKind::Integers) return c.int_value() < 0;
    if (r->kind == RingKind::Rationals) return c.rat_value() < 0;
    return false;  // residues render nonnegative
}

std::string render_field_coeff(const RingElem& c) {
    const Ring& r = c.ring();
    if (r->kind == RingKind::Rationals) return c.rat_value().get_str();
    return c.int_value().get_str();
}

// one poly term like "3*t1^2*t2" (sign stripped by caller)
std::string render_poly_term(const std::vector<std::string>& vars, const Monomial& m,
                             const RingElem& coeff) {
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    RingElem c = render_is_negative(coeff) ? -coeff : coeff;
    if (mono.empty()) return render_field_coeff(c);
    if (c.is_one()) return mono;
    return render_field_coeff(c) + "*" + mono;
}

std::string join_signed_terms(const std::vector<std::pair<bool, std::string>>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].first) out += "-";
        } else {
            out += parts[i].first ? " - " : " + ";
        }
        out += parts[i].second;
    }
    return out;
}

}  // namespace

std::string RingElem::str() const {
    if (is_zero()) return "0";
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return std::get<Int>(v_).get_str();
        case RingKind::Rationals: return std::get<Rat>(v_).get_str();
        case RingKind::Poly: {
            std::vector<std::pair<bool, std::string>> parts;
            for (const auto& [m, c] : std::get<PolyVal>(v_).terms)
                parts.emplace_back(render_is_negative(c), render_poly_term(ring_->vars, m, c));
            return join_signed_terms(parts);
        }
        case RingKind::TruncPoly: {
            // ascending powers, series style: "1 - t + t^2"
            std::vector<std::pair<bool, std::string>> parts;
            const auto& coeffs = std::get<TruncVal>(v_).coeffs;
            for (size_t e = 0; e < coeffs.size(); ++e) {
                if (coeffs[e].is_zero()) continue;
                Monomial m{static_cast<uint32_t>(e)};
                std::vector<std::string> vars{ring_->var};
                parts.emplace_back(render_is_negative(coeffs[e]),
                                   render_poly_term(vars, m, coeffs[e]));
            }
            return join_signed_terms(parts);
        }
    }
    return "?";
}

std::vector<std::pair<std::string, RingElem>> ring_generators(const Ring& r) {
    std::vector<std::pair<std::string, RingElem>> out;
    if (r->kind == RingKind::Poly) {
        for (const auto& v : r->vars) out.emplace_back(v, RingElem::variable(r, v));
    } else if (r->kind == RingKind::TruncPoly) {
        out.emplace_back(r->var, RingElem::variable(r, r->var));
    }
    return out;
}

// ---------------------------------------------------------------------------
// literal parsing
// ---------------------------------------------------------------------------

namespace {

class LiteralParser {
public:
    LiteralParser(const Ring& r, std::string_view text) : ring_(r), text_(text) {}

    RingElem run() {
        RingElem e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input in ring literal", pos_);
        return e;
    }

private:
    RingElem expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        RingElem acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RingElem term() {
        RingElem acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                RingElem d = factor();
                auto inv = d.try_invert();
                if (!inv) throw DomainError("ring literal divides by the non-unit " + d.str());
                acc = acc * *inv;
            } else {
                return acc;
            }
        }
    }

    RingElem factor() {
        RingElem base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) throw ParseError("expected exponent", pos_);
            uint64_t e = std::stoull(std::string(text_.substr(start, pos_ - start)));
            return base.pow(e);
        }
        return base;
    }

    RingElem atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RingElem e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Int v(std::string(text_.substr(start, pos_ - start)));
            return RingElem::from_int(ring_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            try {
                return RingElem::variable(ring_, name);
            } catch (const DomainError&) {
                throw ParseError("unknown name '" + name + "' in ring " + ring_name(ring_), start);
            }
        }
        throw ParseError("expected a ring literal atom", pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Ring ring_;
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

RingElem parse_ring_literal(const Ring& r, std::string_view text) {
    return LiteralParser(r, text).run();
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

RingElem random_element(const Ring& r, Rng& rng, int deg_bound, int coeff_bound) {
    switch (r->kind) {
        case RingKind::Integers:
            return RingElem::from_int(r, Int(rng.range(-coeff_bound, coeff_bound)));
        case RingKind::Rationals: {
            Int num(rng.range(-coeff_bound, coeff_bound));
            Int den(rng.range(1, std::max(1, coeff_bound)));
            Rat q(num, den);
            q.canonicalize();
            return RingElem::from_rational(r, q);
        }
        case RingKind::IntegersMod: {
            uint64_t span = r->modulus.fits_ulong_p() ? r->modulus.get_ui() : 4096;
            return RingElem::from_int(r, Int(static_cast<long>(rng.below(span))));
        }
        case RingKind::Poly: {
            size_t nterms = 1 + rng.below(3);
            std::vector<std::pair<Monomial, RingElem>> terms;
            for (size_t t = 0; t < nterms; ++t) {
                Monomial m(r->vars.size(), 0);
                int total = static_cast<int>(rng.below(static_cast<uint64_t>(deg_bound) + 1));
                for (int s = 0; s < total; ++s) ++m[rng.below(r->vars.size())];
                terms.emplace_back(std::move(m), random_element(r->base, rng, 0, coeff_bound));
            }
            return RingElem::make_poly(r, std::move(terms));
        }
        case RingKind::TruncPoly: {
            size_t len = 1 + rng.below(r->order);
            std::vector<RingElem> coeffs;
            for (size_t i = 0; i < len; ++i)
                coeffs.push_back(random_element(r->base, rng, 0, coeff_bound));
            return RingElem::make_trunc(r, std::move(coeffs));
        }
    }
    throw DomainError("bad ring kind");
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

RingMatrix::RingMatrix(Ring r, size_t rows, size_t cols)
    : ring_(std::move(r)), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    e_.assign(rows * cols, RingElem::zero(ring_));
}

RingMatrix RingMatrix::identity(const Ring& r, size_t n) {
    RingMatrix m(r, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(r);
    return m;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    RingMatrix out(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    RingMatrix out(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
    RingMatrix out(ring_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    }
    return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool RingMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const RingElem& x) { return x.is_zero(); });
}

bool RingMatrix::is_upper_triangular() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < std::min(i, cols_); ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

std::vector<RingElem> RingMatrix::mul_vector(const std::vector<RingElem>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<RingElem> out(rows_, RingElem::zero(ring_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

std::string RingMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& row, const RingMatrix& m) {
    if (row.size() != m.rows()) throw DomainError("row-matrix shape mismatch");
    std::vector<RingElem> out(m.cols(), RingElem::zero(m.ring()));
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero() && !m.at(i, j).is_zero())
                out[j] = out[j] + row[i] * m.at(i, j);
    return out;
}

}  // namespace skewx
