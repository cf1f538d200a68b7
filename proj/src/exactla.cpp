#include "mdade/exactla.hpp"

#include <stdexcept>

namespace mdade {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

namespace {

void check_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
    if (a.field() != b.field() || a.prime() != b.prime())
        throw std::logic_error(std::string(op) + ": field mismatch");
}

Rat mod_reduce(const Rat& v, long p) {
    if (v.get_den() != 1)
        throw std::logic_error("F_p entry with non-trivial denominator");
    mpz_class r = v.get_num() % p;
    if (r < 0) r += p;
    return Rat(r);
}

Rat mod_inverse(const Rat& v, long p) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw std::logic_error("F_p inverse of zero");
    mpz_class r = inv % p;
    if (r < 0) r += p;
    return Rat(r);
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols, Field f, long p)
    : rows_(rows), cols_(cols), field_(f), prime_(p), e_(size_t(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
    if (f == Field::Fp && p < 2) throw std::invalid_argument("ExactMatrix: invalid prime");
    if (f == Field::Q) prime_ = 0;
}

ExactMatrix ExactMatrix::identity(int n, Field f, long p) {
    ExactMatrix m(n, n, f, p);
    for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

Rat ExactMatrix::reduce(Rat v) const {
    if (field_ == Field::Fp) return mod_reduce(v, prime_);
    return v;
}

const Rat& ExactMatrix::get(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("ExactMatrix::get");
    return e_[size_t(i) * cols_ + j];
}

void ExactMatrix::set(int i, int j, Rat v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("ExactMatrix::set");
    e_[size_t(i) * cols_ + j] = reduce(std::move(v));
}

void ExactMatrix::add_to(int i, int j, const Rat& v) { set(i, j, get(i, j) + v); }

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_, prime_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const Rat& v : e_)
        if (v != 0) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           prime_ == o.prime_ && e_ == o.e_;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (int j = 0; j < cols_; ++j) out[i].push_back(get(i, j).get_str());
    }
    return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_field(a, b, "multiply");
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    ExactMatrix c(a.rows(), b.cols(), a.field(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.get(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.get(k, j);
                if (bkj == 0) continue;
                c.e_[size_t(i) * c.cols_ + j] += aik * bkj;
            }
        }
    if (c.field_ == Field::Fp)
        for (Rat& v : c.e_) v = mod_reduce(v, c.prime_);
    return c;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_field(a, b, "add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: dimension mismatch");
    ExactMatrix c = a;
    for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = c.reduce(c.e_[i] + b.e_[i]);
    return c;
}

ExactMatrix subtract(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_field(a, b, "subtract");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("subtract: dimension mismatch");
    ExactMatrix c = a;
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) c.set(i, j, c.get(i, j) - b.get(i, j));
    return c;
}

ExactMatrix scale(const ExactMatrix& a, const Rat& c) {
    ExactMatrix m = a;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.set(i, j, m.get(i, j) * c);
    return m;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_field(a, b, "vstack");
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    ExactMatrix c(a.rows() + b.rows(), a.cols(), a.field(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.get(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.set(a.rows() + i, j, b.get(i, j));
    return c;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_field(a, b, "hstack");
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    ExactMatrix c(a.rows(), a.cols() + b.cols(), a.field(), a.prime());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.get(i, j));
        for (int j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.get(i, j));
    }
    return c;
}

std::vector<Rat> matvec(const ExactMatrix& a, const std::vector<Rat>& v) {
    if (int(v.size()) != a.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<Rat> out(a.rows(), Rat(0));
    for (int i = 0; i < a.rows(); ++i) {
        Rat s(0);
        for (int j = 0; j < a.cols(); ++j) s += a.get(i, j) * v[j];
        if (a.field() == Field::Fp) s = mod_reduce(s, a.prime());
        out[i] = s;
    }
    return out;
}

namespace {

// Row-reduce in place to reduced row echelon form. Returns pivot columns.
// Pivot selection: first row with a nonzero entry, scanning columns left to
// right -- deterministic by construction.
std::vector<int> rref_in_place(ExactMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) {
                Rat tmp = m.get(r, j);
                m.set(r, j, m.get(piv, j));
                m.set(piv, j, tmp);
            }
        Rat inv = (m.field() == Field::Fp) ? mod_inverse(m.get(r, c), m.prime())
                                           : Rat(1) / m.get(r, c);
        for (int j = c; j < m.cols(); ++j) m.set(r, j, m.get(r, j) * inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Rat f = m.get(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols(); ++j)
                m.set(i, j, m.get(i, j) - f * m.get(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_bareiss_q(const ExactMatrix& input) {
    const int nr = input.rows(), nc = input.cols();
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
    for (int i = 0; i < nr; ++i) {
        mpz_class l(1);
        for (int j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), input.get(i, j).get_den().get_mpz_t());
        for (int j = 0; j < nc; ++j) {
            Rat v = input.get(i, j) * Rat(l);
            m[i][j] = v.get_num();
        }
    }
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

int rank_gauss_fp(const ExactMatrix& input) {
    ExactMatrix m = input;
    return int(rref_in_place(m).size());
}

}  // namespace

int rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.field() == Field::Q ? rank_bareiss_q(m) : rank_gauss_fp(m);
}

ExactMatrix nullspace(const ExactMatrix& input) {
    ExactMatrix m = input;
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    int nfree = m.cols() - int(pivots.size());
    ExactMatrix basis(m.cols(), nfree, m.field(), m.prime());
    int col = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, col, Rat(1));
        for (size_t i = 0; i < pivots.size(); ++i)
            basis.set(pivots[i], col, -m.get(int(i), f));
        ++col;
    }
    // Canonicalize to reduced column echelon form (leading entries 1).
    ExactMatrix t = basis.transpose();
    rref_in_place(t);
    return t.transpose();
}

std::optional<std::vector<Rat>> solve(const ExactMatrix& a, const std::vector<Rat>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1, a.field(), a.prime());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.get(int(i), a.cols());
    return x;
}

QuotientSpace quotient_by_columns(const ExactMatrix& span) {
    const int n = span.rows();
    // Reduced column echelon form of the span; its leading rows are the
    // pivot coordinates, the remaining coordinates represent the quotient.
    ExactMatrix t = span.transpose();
    std::vector<int> pivot_rows;
    {
        ExactMatrix copy = t;
        pivot_rows = rref_in_place(copy);
        t = copy;
    }
    ExactMatrix rcef = t.transpose();  // n x k, first r columns nonzero
    const int r = int(pivot_rows.size());

    std::vector<bool> is_pivot(n, false);
    for (int p : pivot_rows) is_pivot[p] = true;
    std::vector<int> free_rows;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) free_rows.push_back(i);

    QuotientSpace q;
    q.dim = int(free_rows.size());
    q.proj = ExactMatrix(q.dim, n, span.field(), span.prime());
    q.sect = ExactMatrix(n, q.dim, span.field(), span.prime());
    for (int j = 0; j < q.dim; ++j) {
        q.proj.set(j, free_rows[j], Rat(1));
        q.sect.set(free_rows[j], j, Rat(1));
        for (int i = 0; i < r; ++i)
            q.proj.set(j, pivot_rows[i], -rcef.get(free_rows[j], i));
    }
    return q;
}

std::optional<ExactMatrix> solve_matrix(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: dimension mismatch");
    ExactMatrix x(a.cols(), b.cols(), a.field(), a.prime());
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<Rat> col(b.rows());
        for (int i = 0; i < b.rows(); ++i) col[i] = b.get(i, j);
        auto sol = solve(a, col);
        if (!sol) return std::nullopt;
        for (int i = 0; i < a.cols(); ++i) x.set(i, j, (*sol)[i]);
    }
    return x;
}

}  // namespace mdade
