#pragma once

#include <map>
#include <vector>

#include "focklat/exact_matrix.hpp"
#include "focklat/partition.hpp"
#include "focklat/rational.hpp"

namespace focklat {

// Basis labels for symmetric functions: power sums, monomial functions,
// and the forgotten functions f_lambda = omega(m_lambda).
enum class SymBasis { P, M, F };

// A degree-homogeneous symmetric function, stored as a sparse map from
// partitions of the degree to rational coefficients.  No zero coefficient
// is ever stored.  The power-sum basis is the internal workhorse: the Hall
// pairing is diagonal there, and every operator formula routes through it.
class SymFunc {
public:
    using CoeffMap = std::map<Partition, Rational, PartitionLess>;

    SymFunc(long degree, SymBasis basis) : degree_(degree), basis_(basis) {}

    static SymFunc power_sum(const Partition& lambda);
    static SymFunc monomial(const Partition& lambda);

    long degree() const { return degree_; }
    SymBasis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    Rational coeff(const Partition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Partition& lambda, const Rational& c);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const Rational& c) const;
    bool operator==(const SymFunc& o) const;

private:
    long degree_ = 0;
    SymBasis basis_ = SymBasis::P;
    CoeffMap coeffs_;
};

// Row lambda expresses the row basis element in the column basis; rows and
// columns are indexed by enumerate_partitions(degree).
struct TransitionMatrix {
    long degree = 0;
    bool p_to_m = true;
    std::vector<Partition> index;
    ExactMatrix mat;
};

// p_lambda in the m basis, built by iterating the Pieri products
// p_i m_mu = sum a_{mu,nu} m_nu.  Entries are nonnegative integers and the
// matrix is dominance-triangular with diagonal prod_r m_r(lambda)!.
// Memoized per degree; safe for concurrent readers.  When the environment
// variable FOCKLAT_CACHE_DIR is set, computed matrices are also kept on
// disk there.
const TransitionMatrix& p_to_m_matrix(long n);

// Exact inverse of p_to_m_matrix(n).
const TransitionMatrix& m_to_p_matrix(long n);

// Position of lambda in enumerate_partitions order; the list must be that
// enumeration.
long partition_index(const Partition& lambda, const std::vector<Partition>& index);

SymFunc to_p(const SymFunc& f);
SymFunc to_m(const SymFunc& f);

// Coefficients d_mu of m_lambda = sum d_mu p_mu.
SymFunc::CoeffMap m_in_p(const Partition& lambda);

// omega(p_mu) = (-1)^{|mu|-ell(mu)} p_mu; input must be in the P basis.
SymFunc omega(const SymFunc& f);

// f_lambda = omega(m_lambda), returned in the M basis.  The coefficients
// are provably integers; a non-integer coefficient raises internal_error.
SymFunc forgotten(const Partition& lambda);

// Bilinear extension of (p_lambda, p_mu) = delta z_lambda.
Rational hall_pairing(const SymFunc& f, const SymFunc& g);

// Gram matrix of {m_lambda : lambda |- n} under the Hall pairing.  The
// entries are integers and the determinant is +-1.
ExactMatrix monomial_gram(long n);
Integer monomial_gram_det(long n);

// det(p_to_m_matrix(n))^2 = prod_{lambda |- n} z_lambda.
bool verify_detTn(long n);

} // namespace focklat
