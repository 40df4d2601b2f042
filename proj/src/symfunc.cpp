#include "focklat/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "focklat/errors.hpp"

namespace focklat {

SymFunc SymFunc::power_sum(const Partition& lambda)
{
    SymFunc f(lambda.size(), SymBasis::P);
    f.add_term(lambda, 1);
    return f;
}

SymFunc SymFunc::monomial(const Partition& lambda)
{
    SymFunc f(lambda.size(), SymBasis::M);
    f.add_term(lambda, 1);
    return f;
}

Rational SymFunc::coeff(const Partition& lambda) const
{
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c)
{
    if (lambda.size() != degree_)
        throw std::invalid_argument("SymFunc: term degree mismatch");
    Rational& slot = coeffs_[lambda];
    slot += c;
    if (slot == 0)
        coeffs_.erase(lambda);
}

SymFunc SymFunc::operator+(const SymFunc& o) const
{
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: mixed degree or basis in sum");
    SymFunc r = *this;
    for (const auto& [lambda, c] : o.coeffs_)
        r.add_term(lambda, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const
{
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc: mixed degree or basis in difference");
    SymFunc r = *this;
    for (const auto& [lambda, c] : o.coeffs_)
        r.add_term(lambda, -c);
    return r;
}

SymFunc SymFunc::operator*(const Rational& c) const
{
    SymFunc r(degree_, basis_);
    if (c == 0)
        return r;
    for (const auto& [lambda, v] : coeffs_)
        r.coeffs_[lambda] = v * c;
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const
{
    return degree_ == o.degree_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

long partition_index(const Partition& lambda, const std::vector<Partition>& index)
{
    auto it = std::lower_bound(index.begin(), index.end(), lambda, partition_less);
    if (it == index.end() || !(*it == lambda))
        throw internal_error("partition_index: partition not in index");
    return static_cast<long>(it - index.begin());
}

namespace {

// -------- disk cache for transition matrices (FOCKLAT_CACHE_DIR) --------

std::filesystem::path cache_file(long n)
{
    const char* dir = std::getenv("FOCKLAT_CACHE_DIR");
    if (!dir || !*dir)
        return {};
    return std::filesystem::path(dir) / ("p_to_m_" + std::to_string(n) + ".txt");
}

bool load_cached(long n, long dim, ExactMatrix& mat)
{
    auto path = cache_file(n);
    if (path.empty())
        return false;
    std::ifstream in(path);
    if (!in)
        return false;
    std::string tag;
    long fn = -1, fdim = -1;
    in >> tag >> fn >> fdim;
    if (tag != "focklat-p-to-m" || fn != n || fdim != dim)
        return false;
    ExactMatrix m(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            std::string s;
            if (!(in >> s))
                return false;
            m.at(i, j) = rational_from_string(s);
        }
    mat = std::move(m);
    return true;
}

void store_cached(long n, const ExactMatrix& mat)
{
    auto path = cache_file(n);
    if (path.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (!out)
        return;
    out << "focklat-p-to-m " << n << " " << mat.rows() << "\n";
    for (long i = 0; i < mat.rows(); ++i) {
        for (long j = 0; j < mat.cols(); ++j)
            out << (j ? " " : "") << rational_to_string(mat.at(i, j));
        out << "\n";
    }
}

ExactMatrix build_p_to_m(long n, const std::vector<Partition>& index)
{
    long dim = static_cast<long>(index.size());
    ExactMatrix mat(dim, dim);
    if (load_cached(n, dim, mat))
        return mat;
    for (long r = 0; r < dim; ++r) {
        const Partition& lambda = index[static_cast<size_t>(r)];
        // Multiply m_{empty} by p_{lambda_1}, p_{lambda_2}, ... via the
        // Pieri products.
        std::map<Partition, Rational, PartitionLess> acc;
        acc[Partition{}] = 1;
        for (long part : lambda.parts()) {
            std::map<Partition, Rational, PartitionLess> next;
            for (const auto& [mu, c] : acc)
                for (const auto& [nu, a] : add_part(mu, part)) {
                    Rational& slot = next[nu];
                    slot += c * a;
                }
            acc = std::move(next);
        }
        for (const auto& [mu, c] : acc)
            mat.at(r, partition_index(mu, index)) = c;
    }
    store_cached(n, mat);
    return mat;
}

std::mutex cache_mutex;
std::map<long, TransitionMatrix> ptm_cache;
std::map<long, TransitionMatrix> mtp_cache;

} // namespace

const TransitionMatrix& p_to_m_matrix(long n)
{
    if (n < 0)
        throw std::invalid_argument("p_to_m_matrix: n must be >= 0");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = ptm_cache.find(n);
    if (it != ptm_cache.end())
        return it->second;
    TransitionMatrix t;
    t.degree = n;
    t.p_to_m = true;
    t.index = enumerate_partitions(n);
    t.mat = build_p_to_m(n, t.index);
    return ptm_cache.emplace(n, std::move(t)).first->second;
}

const TransitionMatrix& m_to_p_matrix(long n)
{
    const TransitionMatrix& ptm = p_to_m_matrix(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = mtp_cache.find(n);
    if (it != mtp_cache.end())
        return it->second;
    TransitionMatrix t;
    t.degree = n;
    t.p_to_m = false;
    t.index = ptm.index;
    t.mat = inverse(ptm.mat);
    return mtp_cache.emplace(n, std::move(t)).first->second;
}

namespace {

SymFunc convert(const SymFunc& f, const TransitionMatrix& t, SymBasis target)
{
    SymFunc out(f.degree(), target);
    for (const auto& [lambda, c] : f.coeffs()) {
        long r = partition_index(lambda, t.index);
        for (long j = 0; j < t.mat.cols(); ++j) {
            const Rational& e = t.mat.at(r, j);
            if (e != 0)
                out.add_term(t.index[static_cast<size_t>(j)], c * e);
        }
    }
    return out;
}

} // namespace

SymFunc to_p(const SymFunc& f)
{
    switch (f.basis()) {
    case SymBasis::P:
        return f;
    case SymBasis::M:
        return convert(f, m_to_p_matrix(f.degree()), SymBasis::P);
    case SymBasis::F: {
        // f_lambda = omega(m_lambda)
        SymFunc out(f.degree(), SymBasis::P);
        for (const auto& [lambda, c] : f.coeffs()) {
            SymFunc m = to_p(SymFunc::monomial(lambda));
            out = out + omega(m) * c;
        }
        return out;
    }
    }
    throw internal_error("to_p: bad basis");
}

SymFunc to_m(const SymFunc& f)
{
    if (f.basis() == SymBasis::M)
        return f;
    return convert(to_p(f), p_to_m_matrix(f.degree()), SymBasis::M);
}

SymFunc::CoeffMap m_in_p(const Partition& lambda)
{
    return to_p(SymFunc::monomial(lambda)).coeffs();
}

SymFunc omega(const SymFunc& f)
{
    if (f.basis() != SymBasis::P)
        throw std::invalid_argument("omega: input must be in the P basis");
    SymFunc out(f.degree(), SymBasis::P);
    for (const auto& [mu, c] : f.coeffs()) {
        bool flip = (mu.size() - mu.length()) % 2 != 0;
        out.add_term(mu, flip ? Rational(-c) : c);
    }
    return out;
}

SymFunc forgotten(const Partition& lambda)
{
    SymFunc f = to_m(omega(to_p(SymFunc::monomial(lambda))));
    for (const auto& [mu, c] : f.coeffs())
        if (!is_integer(c))
            throw internal_error("forgotten: non-integer coefficient");
    return f;
}

Rational hall_pairing(const SymFunc& f, const SymFunc& g)
{
    if (f.degree() != g.degree())
        throw std::invalid_argument("hall_pairing: degree mismatch");
    SymFunc fp = to_p(f), gp = to_p(g);
    Rational sum = 0;
    for (const auto& [lambda, c] : fp.coeffs()) {
        Rational d = gp.coeff(lambda);
        if (d != 0)
            sum += c * d * Rational(z_of(lambda));
    }
    return sum;
}

ExactMatrix monomial_gram(long n)
{
    const TransitionMatrix& mtp = m_to_p_matrix(n);
    long dim = static_cast<long>(mtp.index.size());
    // C Z C^t with Z = diag(z_lambda); C = m-to-p coefficients.
    ExactMatrix cz = mtp.mat;
    for (long j = 0; j < dim; ++j) {
        Rational z(z_of(mtp.index[static_cast<size_t>(j)]));
        for (long i = 0; i < dim; ++i)
            cz.at(i, j) *= z;
    }
    ExactMatrix gram = cz * mtp.mat.transpose();
    if (!gram.is_integer())
        throw internal_error("monomial_gram: non-integer entry");
    return gram;
}

Integer monomial_gram_det(long n)
{
    Rational d = det(monomial_gram(n));
    if (!is_integer(d))
        throw internal_error("monomial_gram_det: non-integer determinant");
    return d.get_num();
}

bool verify_detTn(long n)
{
    Rational d = det(p_to_m_matrix(n).mat);
    Integer prod = 1;
    for (const Partition& lambda : enumerate_partitions(n))
        prod *= z_of(lambda);
    return d * d == Rational(prod);
}

} // namespace focklat
