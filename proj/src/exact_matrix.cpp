#include "focklat/exact_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "focklat/errors.hpp"

namespace focklat {

ExactMatrix::ExactMatrix(long rows, long cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != static_cast<size_t>(rows * cols))
        throw std::invalid_argument("ExactMatrix: data size does not match shape");
}

ExactMatrix ExactMatrix::identity(long n)
{
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (long j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool ExactMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool ExactMatrix::is_integer() const
{
    for (const Rational& q : data_)
        if (!focklat::is_integer(q))
            return false;
    return true;
}

Rational det(const ExactMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("det: matrix must be square");
    long n = m.rows();
    if (n == 0)
        return 1;

    // Clear denominators row by row, remembering the scale factor.
    std::vector<std::vector<Integer>> a(static_cast<size_t>(n),
                                        std::vector<Integer>(static_cast<size_t>(n)));
    Integer scale = 1;
    for (long i = 0; i < n; ++i) {
        Integer l = 1;
        for (long j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (long j = 0; j < n; ++j) {
            Rational q = m.at(i, j) * Rational(l);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.get_num();
        }
        scale *= l;
    }

    int sign = 1;
    Integer prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            // Full pivot search over the remaining submatrix.
            long pi = -1, pj = -1;
            for (long i = k; i < n && pi < 0; ++i)
                for (long j = k; j < n; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0)
                return 0;
            if (pi != k) {
                std::swap(a[static_cast<size_t>(pi)], a[static_cast<size_t>(k)]);
                sign = -sign;
            }
            if (pj != k) {
                for (long i = 0; i < n; ++i)
                    std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(pj)],
                              a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
                sign = -sign;
            }
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Integer t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                            a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Rational d(sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)], scale);
    d.canonicalize();
    return d;
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b)
{
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve: shape mismatch");
    long n = a.rows(), w = b.cols();
    ExactMatrix m = a;
    ExactMatrix x = b;
    // Gauss-Jordan with exact rationals; the first nonzero entry in the
    // column is a valid pivot.
    for (long k = 0; k < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            throw internal_error("solve: singular matrix");
        if (p != k) {
            for (long j = 0; j < n; ++j)
                std::swap(m.at(p, j), m.at(k, j));
            for (long j = 0; j < w; ++j)
                std::swap(x.at(p, j), x.at(k, j));
        }
        Rational piv = m.at(k, k);
        for (long j = 0; j < n; ++j)
            m.at(k, j) /= piv;
        for (long j = 0; j < w; ++j)
            x.at(k, j) /= piv;
        for (long i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0)
                continue;
            Rational f = m.at(i, k);
            for (long j = 0; j < n; ++j)
                m.at(i, j) -= f * m.at(k, j);
            for (long j = 0; j < w; ++j)
                x.at(i, j) -= f * x.at(k, j);
        }
    }
    return x;
}

ExactMatrix inverse(const ExactMatrix& a)
{
    return solve(a, ExactMatrix::identity(a.rows()));
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b)
{
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            for (long p = 0; p < b.rows(); ++p)
                for (long q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    return r;
}

namespace {

void emit_tuples(long k, long n, long min_index, std::vector<long>& acc,
                 std::vector<std::vector<long>>& out)
{
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (long i = min_index; i < k; ++i) {
        acc.push_back(i);
        emit_tuples(k, n - 1, i, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<long>> sym_monomial_basis(long k, long n)
{
    std::vector<std::vector<long>> out;
    std::vector<long> acc;
    emit_tuples(k, n, 0, acc, out);
    return out;
}

ExactMatrix sym_power_gram(const ExactMatrix& g, long n)
{
    if (!g.is_symmetric())
        throw std::invalid_argument("sym_power_gram: form must be symmetric");
    long k = g.rows();
    auto basis = sym_monomial_basis(k, n);
    long dim = static_cast<long>(basis.size());
    ExactMatrix out(dim, dim);
    std::vector<long> sigma(static_cast<size_t>(n));
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) {
            const auto& lhs = basis[static_cast<size_t>(r)];
            const auto& rhs = basis[static_cast<size_t>(c)];
            // Permanent over S_n; n stays tiny here.
            std::iota(sigma.begin(), sigma.end(), 0L);
            Rational sum = 0;
            do {
                Rational term = 1;
                for (long a = 0; a < n; ++a)
                    term *= g.at(lhs[static_cast<size_t>(a)],
                                 rhs[static_cast<size_t>(sigma[static_cast<size_t>(a)])]);
                sum += term;
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            out.at(r, c) = sum;
        }
    return out;
}

ExactMatrix mu_gram(const ExactMatrix& g, const Partition& mu)
{
    if (!g.is_symmetric())
        throw std::invalid_argument("mu_gram: form must be symmetric");
    ExactMatrix out(1, 1);
    out.at(0, 0) = 1;
    std::vector<long> values = mu.distinct_parts();
    std::sort(values.begin(), values.end());
    for (long r : values) {
        Rational s((r % 2 == 1) ? r : -r); // (-1)^{r-1} r
        ExactMatrix scaled = g;
        for (long i = 0; i < g.rows(); ++i)
            for (long j = 0; j < g.cols(); ++j)
                scaled.at(i, j) = g.at(i, j) * s;
        out = kronecker(out, sym_power_gram(scaled, mu.multiplicity(r)));
    }
    return out;
}

namespace {

// Random symmetric integer matrices with pairwise distinct nonzero |det|.
std::vector<ExactMatrix> sample_forms(long k, int count, unsigned seed,
                                      const ExactMatrix* include)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::vector<ExactMatrix> forms;
    std::vector<Rational> seen;
    auto push_if_fresh = [&](const ExactMatrix& g) {
        Rational d = det(g);
        if (d == 0)
            return; // discard degenerate samples
        Rational ad = abs(d);
        if (std::find(seen.begin(), seen.end(), ad) != seen.end())
            return;
        seen.push_back(ad);
        forms.push_back(g);
    };
    if (include)
        push_if_fresh(*include);
    int guard = 0;
    while (static_cast<int>(forms.size()) < count && guard++ < 10000) {
        ExactMatrix g(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = i; j < k; ++j) {
                long v = entry(rng);
                g.at(i, j) = v;
                g.at(j, i) = v;
            }
        push_if_fresh(g);
    }
    if (static_cast<int>(forms.size()) < count)
        throw internal_error("sample_forms: could not find enough distinct forms");
    return forms;
}

} // namespace

namespace {

Rational rational_pow(const Rational& q, unsigned long e)
{
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

} // namespace

SymPowerCheck verify_sympower_det(long k, long n, int samples, unsigned seed)
{
    if (samples < 2)
        throw std::invalid_argument("verify_sympower_det: need at least 2 samples");
    auto forms = sample_forms(k, samples, seed, nullptr);
    Integer expo = binomial(static_cast<unsigned long>(n + k - 1),
                            static_cast<unsigned long>(k));
    SymPowerCheck res;
    bool first = true;
    for (const ExactMatrix& g : forms) {
        Rational dg = det(g);
        Rational ratio = det(sym_power_gram(g, n)) / rational_pow(dg, expo.get_ui());
        ratio.canonicalize();
        if (first) {
            res.constant = ratio;
            res.constant_across_samples = true;
            first = false;
        } else if (ratio != res.constant) {
            res.constant_across_samples = false;
        }
    }
    return res;
}

MuGramCheck verify_iden(const ExactMatrix& g, const Partition& mu, int extra_samples,
                        unsigned seed)
{
    auto forms = sample_forms(g.rows(), extra_samples + 1, seed, &g);
    std::vector<Rational> dets, mudets;
    for (const ExactMatrix& f : forms) {
        dets.push_back(det(f));
        mudets.push_back(det(mu_gram(f, mu)));
    }
    MuGramCheck res;
    // With pairwise distinct |det G| at most one exponent can work.
    for (long d = 0; d <= 64; ++d) {
        Rational c;
        bool match = true;
        for (size_t i = 0; i < forms.size(); ++i) {
            Rational ratio = mudets[i] / rational_pow(dets[i], static_cast<unsigned long>(d));
            ratio.canonicalize();
            if (i == 0)
                c = ratio;
            else if (ratio != c)
                match = false;
        }
        if (match) {
            res.constant = c;
            res.exponent = d;
            res.ok = true;
            return res;
        }
    }
    return res;
}

bool comb_identity(long n, long k)
{
    if (n < 0 || k < 2)
        throw std::invalid_argument("comb_identity: need n >= 0, k >= 2");
    Integer lhs1 = 0, lhs2 = 0;
    for (long m = 0; m <= n; ++m) {
        lhs1 += binomial(static_cast<unsigned long>(n - m + k - 2),
                         static_cast<unsigned long>(k - 1));
        lhs2 += Integer(m) * binomial(static_cast<unsigned long>(n - m + k - 2),
                                      static_cast<unsigned long>(k - 2));
    }
    Integer rhs = binomial(static_cast<unsigned long>(n + k - 1),
                           static_cast<unsigned long>(k));
    return lhs1 == rhs && lhs2 == rhs;
}

} // namespace focklat
