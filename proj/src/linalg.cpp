#include "skewx/linalg.hpp"

#include <algorithm>

namespace skewx {

namespace {

// Formal fraction over an integral domain. Denominators are kept nonzero;
// reduction is attempted opportunistically via exact division.
struct Frac {
    RingElem num;
    RingElem den;

    static Frac of(const RingElem& x) { return {x, RingElem::one(x.ring())}; }

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = RingElem::one(den.ring());
            return;
        }
        if (auto di = den.try_invert()) {
            num = num * *di;
            den = RingElem::one(den.ring());
            return;
        }
        if (auto q = num.div_exact(den)) {
            num = *q;
            den = RingElem::one(den.ring());
        }
    }

    Frac operator+(const Frac& o) const {
        Frac r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator-(const Frac& o) const {
        Frac r{num * o.den - o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator/(const Frac& o) const {
        if (o.num.is_zero()) throw DomainError("fraction division by zero");
        Frac r{num * o.den, den * o.num};
        r.reduce();
        return r;
    }
};

bool elimination_supported(const Ring& r) {
    switch (r->kind) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::Poly:
            return true;
        case RingKind::IntegersMod: return ring_is_field(r);
        case RingKind::TruncPoly: return false;
    }
    return false;
}

// Row-reduce a Frac matrix in place; returns pivot column per pivot row.
std::vector<size_t> row_reduce(std::vector<std::vector<Frac>>& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = rows;
        for (size_t i = prow; i < rows; ++i) {
            if (!a[i][col].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(a[prow], a[sel]);
        Frac inv = Frac::of(RingElem::one(a[prow][col].num.ring())) / a[prow][col];
        for (size_t j = col; j < cols; ++j) a[prow][j] = a[prow][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == prow || a[i][col].is_zero()) continue;
            Frac f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[prow][j];
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

// Enumerate candidate vectors over a finite candidate entry set (odometer
// order, zero vector skipped). Returns a witness if some M*b = 0.
std::optional<std::vector<RingElem>> enumerate_kernel_candidates(
    const RingMatrix& m, const std::vector<RingElem>& entries, size_t cap, bool& exhausted) {
    size_t cols = m.cols();
    std::vector<size_t> idx(cols, 0);
    size_t tried = 0;
    exhausted = false;
    for (;;) {
        // advance odometer
        size_t p = 0;
        while (p < cols) {
            if (++idx[p] < entries.size()) break;
            idx[p] = 0;
            ++p;
        }
        if (p == cols) {
            exhausted = true;
            return std::nullopt;  // wrapped around: all candidates tried
        }
        if (++tried > cap) return std::nullopt;
        std::vector<RingElem> b;
        b.reserve(cols);
        bool nonzero = false;
        for (size_t j = 0; j < cols; ++j) {
            b.push_back(entries[idx[j]]);
            nonzero = nonzero || !entries[idx[j]].is_zero();
        }
        if (!nonzero) continue;
        auto mv = m.mul_vector(b);
        if (std::all_of(mv.begin(), mv.end(), [](const RingElem& x) { return x.is_zero(); }))
            return b;
    }
}

}  // namespace

DependenceResult solve_right_dependence(const RingMatrix& m, const SolveOptions& opts) {
    const Ring& r = m.ring();

    if (elimination_supported(r)) {
        std::vector<std::vector<Frac>> a(m.rows(), std::vector<Frac>());
        for (size_t i = 0; i < m.rows(); ++i) {
            a[i].reserve(m.cols());
            for (size_t j = 0; j < m.cols(); ++j) a[i].push_back(Frac::of(m.at(i, j)));
        }
        std::vector<size_t> pivots = row_reduce(a);
        if (pivots.size() == m.cols()) return {DependenceKind::Independent, {}};

        // pick the first free column and back-substitute a kernel vector
        std::vector<bool> is_pivot(m.cols(), false);
        for (size_t c : pivots) is_pivot[c] = true;
        size_t free_col = 0;
        while (is_pivot[free_col]) ++free_col;

        std::vector<Frac> x(m.cols(), Frac::of(RingElem::zero(r)));
        x[free_col] = Frac::of(RingElem::one(r));
        for (size_t p = 0; p < pivots.size(); ++p)
            x[pivots[p]] = Frac::of(RingElem::zero(r)) - a[p][free_col];

        // clear denominators to land back inside R
        RingElem common = RingElem::one(r);
        for (const auto& f : x)
            if (!f.is_zero()) common = common * f.den;
        std::vector<RingElem> b;
        b.reserve(x.size());
        for (const auto& f : x) {
            auto q = common.div_exact(f.den);
            b.push_back(f.num * *q);
        }
        auto check = m.mul_vector(b);
        if (!std::all_of(check.begin(), check.end(),
                         [](const RingElem& e) { return e.is_zero(); }))
            throw DomainError("internal: dependence witness failed verification");
        return {DependenceKind::Witness, std::move(b)};
    }

    if (r->kind == RingKind::IntegersMod) {
        // composite modulus: the candidate set (all residues) is complete
        if (!r->modulus.fits_ulong_p()) return {DependenceKind::Unsupported, {}};
        std::vector<RingElem> entries;
        for (unsigned long v = 0; v < r->modulus.get_ui(); ++v)
            entries.push_back(RingElem::from_int(r, Int(static_cast<long>(v))));
        bool exhausted = false;
        auto b = enumerate_kernel_candidates(m, entries, opts.enumeration_cap, exhausted);
        if (b) return {DependenceKind::Witness, std::move(*b)};
        if (exhausted) return {DependenceKind::Independent, {}};
        return {DependenceKind::Unsupported, {}};
    }

    if (r->kind == RingKind::TruncPoly) {
        // degree-bounded monomial candidates; not a complete set, so a miss
        // is Unsupported rather than Independent
        std::vector<RingElem> entries{RingElem::zero(r)};
        RingElem t = RingElem::variable(r, r->var);
        for (unsigned e = 0; e < r->order; ++e) entries.push_back(t.pow(e));
        bool exhausted = false;
        auto b = enumerate_kernel_candidates(m, entries, opts.enumeration_cap, exhausted);
        if (b) return {DependenceKind::Witness, std::move(*b)};
        return {DependenceKind::Unsupported, {}};
    }

    return {DependenceKind::Unsupported, {}};
}

RingElem determinant(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    RingElem acc = RingElem::zero(m.ring());
    // cofactor expansion along the first row
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RingMatrix minor(m.ring(), n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cj = 0;
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cj++) = m.at(i, k);
            }
        }
        RingElem term = m.at(0, j) * determinant(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

std::optional<RingMatrix> invert_by_adjugate(const RingMatrix& m) {
    size_t n = m.rows();
    RingElem det = determinant(m);
    auto di = det.try_invert();
    if (!di) return std::nullopt;
    RingMatrix inv(m.ring(), n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (n == 1) {
                inv.at(0, 0) = *di;
                continue;
            }
            RingMatrix minor(m.ring(), n - 1, n - 1);
            size_t ri = 0;
            for (size_t a = 0; a < n; ++a) {
                if (a == j) continue;  // adjugate transposes the cofactor matrix
                size_t ci = 0;
                for (size_t b = 0; b < n; ++b) {
                    if (b == i) continue;
                    minor.at(ri, ci++) = m.at(a, b);
                }
                ++ri;
            }
            RingElem c = determinant(minor) * *di;
            inv.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return inv;
}

std::optional<RingMatrix> invert_by_elimination(const RingMatrix& m) {
    if (!elimination_supported(m.ring())) return std::nullopt;
    size_t n = m.rows();
    std::vector<std::vector<Frac>> a(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i].push_back(Frac::of(m.at(i, j)));
        for (size_t j = 0; j < n; ++j)
            a[i].push_back(Frac::of(i == j ? RingElem::one(m.ring()) : RingElem::zero(m.ring())));
    }
    auto pivots = row_reduce(a);
    if (pivots.size() != n) return std::nullopt;
    RingMatrix inv(m.ring(), n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Frac f = a[i][n + j];
            f.reduce();
            if (!f.den.is_one()) return std::nullopt;  // inverse exists over Frac(R) only
            inv.at(i, j) = f.num;
        }
    }
    return inv;
}

}  // namespace

std::optional<RingMatrix> invert_matrix(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    auto inv = m.rows() <= 4 ? invert_by_adjugate(m) : invert_by_elimination(m);
    if (!inv) return std::nullopt;
    if (!((*inv) * m == RingMatrix::identity(m.ring(), m.rows())) ||
        !(m * (*inv) == RingMatrix::identity(m.ring(), m.rows())))
        throw DomainError("internal: matrix inverse failed verification");
    return inv;
}

std::optional<std::vector<RingElem>> solve_linear_in_ring(const RingMatrix& a,
                                                          const std::vector<RingElem>& rhs) {
    if (rhs.size() != a.rows()) throw DomainError("solve: rhs size mismatch");
    if (!elimination_supported(a.ring())) return std::nullopt;
    std::vector<std::vector<Frac>> w(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) w[i].push_back(Frac::of(a.at(i, j)));
        w[i].push_back(Frac::of(rhs[i]));
    }
    auto pivots = row_reduce(w);
    // consistency: no pivot may land in the rhs column
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    for (size_t i = pivots.size(); i < a.rows(); ++i)
        if (!w[i][a.cols()].is_zero()) return std::nullopt;

    std::vector<RingElem> x(a.cols(), RingElem::zero(a.ring()));
    for (size_t p = 0; p < pivots.size(); ++p) {
        Frac f = w[p][a.cols()];
        f.reduce();
        if (!f.den.is_one()) {
            auto q = f.num.div_exact(f.den);
            if (!q) return std::nullopt;  // fraction-field solution leaves R
            x[pivots[p]] = *q;
        } else {
            x[pivots[p]] = f.num;
        }
    }
    auto check = a.mul_vector(x);
    for (size_t i = 0; i < check.size(); ++i)
        if (check[i] != rhs[i]) return std::nullopt;
    return x;
}

}  // namespace skewx
