#ifndef MDADE_EXACTLA_HPP
#define MDADE_EXACTLA_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mdade {

/// Exact rational scalar. Always kept in canonical form (lowest terms,
/// positive denominator).
using Rat = mpq_class;

Rat rat(long num, long den = 1);
std::string rat_str(const Rat& r);

enum class Field { Q, Fp };

/// Dense matrix over Q (arbitrary-precision rationals) or over a prime
/// field F_p. F_p entries are stored as least non-negative residues.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, Field f = Field::Q, long p = 0);

    static ExactMatrix identity(int n, Field f = Field::Q, long p = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }
    long prime() const { return prime_; }

    const Rat& get(int i, int j) const;
    void set(int i, int j, Rat v);
    void add_to(int i, int j, const Rat& v);

    ExactMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    std::vector<std::vector<std::string>> to_strings() const;

private:
    int rows_ = 0, cols_ = 0;
    Field field_ = Field::Q;
    long prime_ = 0;
    std::vector<Rat> e_;

    Rat reduce(Rat v) const;
    friend ExactMatrix multiply(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix add(const ExactMatrix&, const ExactMatrix&);
    friend ExactMatrix subtract(const ExactMatrix&, const ExactMatrix&);
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix subtract(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const ExactMatrix& a, const Rat& c);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
std::vector<Rat> matvec(const ExactMatrix& a, const std::vector<Rat>& v);

/// Rank by fraction-free (Bareiss) elimination over Q, standard Gaussian
/// elimination over F_p. Pivoting is deterministic: first nonzero entry in
/// row-major scan order.
int rank(const ExactMatrix& m);

/// Nullspace basis, as columns, in reduced column echelon form with leading
/// entry 1. The basis is unique, so results can be compared literally.
ExactMatrix nullspace(const ExactMatrix& m);

/// One solution of A x = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rat>> solve(const ExactMatrix& a, const std::vector<Rat>& b);

/// Solve A X = B column by column; nullopt if any column is inconsistent.
std::optional<ExactMatrix> solve_matrix(const ExactMatrix& a, const ExactMatrix& b);

/// A quotient of a coordinate space by a column span, presented by a
/// projection and a section with proj * sect = id and proj * span = 0.
struct QuotientSpace {
    ExactMatrix proj;  // dim x n
    ExactMatrix sect;  // n x dim
    int dim = 0;
};

QuotientSpace quotient_by_columns(const ExactMatrix& span);

}  // namespace mdade

#endif
