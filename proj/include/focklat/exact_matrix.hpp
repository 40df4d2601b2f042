#pragma once

#include <utility>
#include <vector>

#include "focklat/partition.hpp"
#include "focklat/rational.hpp"

namespace focklat {

// Dense matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), Rational(0))
    {
    }
    // Row-major initialization.
    ExactMatrix(long rows, long cols, std::vector<Rational> data);

    static ExactMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(long i, long j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& at(long i, long j) const
    {
        return data_[static_cast<size_t>(i * cols_ + j)];
    }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;

    bool is_symmetric() const;
    bool is_integer() const;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<Rational> data_;
};

// Exact determinant: denominators are cleared row by row, then Bareiss
// fraction-free elimination runs on the integer matrix, with full pivoting
// whenever a zero pivot appears.
Rational det(const ExactMatrix& m);

// Solves A X = B exactly; throws internal_error if A is singular.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix inverse(const ExactMatrix& a);

// Kronecker product, first factor slowest.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

// The monomial basis of S^n(V) for dim V = k: nondecreasing index tuples
// (i_1 <= ... <= i_n), 0-based, in lexicographic order.
std::vector<std::vector<long>> sym_monomial_basis(long k, long n);

// Gram matrix of the monomial basis of S^n(V) for a symmetric form G:
// (v_{i_1}...v_{i_n}, v_{j_1}...v_{j_n}) = sum over permutations sigma of
// prod_a G(i_a, j_{sigma(a)}).
ExactMatrix sym_power_gram(const ExactMatrix& g, long n);

// Gram of S^mu V = tensor over part values r of S^{m_r}(V[r]), where V[r]
// carries the form (-1)^{r-1} r (-,-).  Factors are ordered by ascending r;
// the Kronecker index runs first factor slowest.
ExactMatrix mu_gram(const ExactMatrix& g, const Partition& mu);

struct SymPowerCheck {
    Rational constant;       // det(S^n Gram) / (det G)^C(n+k-1,k)
    bool constant_across_samples = false;
};

// Samples random symmetric integer forms with pairwise distinct nonzero
// |det| (fixed seed, reproducible) and checks that the ratio above does not
// depend on the form.
SymPowerCheck verify_sympower_det(long k, long n, int samples, unsigned seed = 20240811);

struct MuGramCheck {
    Rational constant;
    long exponent = -1;      // the d with det(mu_gram) = c (det G)^d
    bool ok = false;
};

// Checks det(mu_gram(G, mu)) = c (det G)^d with c independent of the form:
// G plus extra sampled forms of the same rank, distinct nonzero |det|.
MuGramCheck verify_iden(const ExactMatrix& g, const Partition& mu, int extra_samples = 3,
                        unsigned seed = 20240811);

// sum_{m=0}^{n} C(n-m+k-2, k-1) = sum_{m=0}^{n} m C(n-m+k-2, k-2) = C(n+k-1, k)
bool comb_identity(long n, long k);

} // namespace focklat
