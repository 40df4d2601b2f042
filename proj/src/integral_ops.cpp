#include "focklat/integral_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "focklat/errors.hpp"

namespace focklat {

namespace {

CreationWord creation_word(const Partition& mu, const ClassVector& v)
{
    CreationWord w;
    for (long r : mu.parts())
        w.push_back({r, v});
    return w;
}

FockState annihilate_word(const Partition& mu, const ClassVector& v, FockState s)
{
    for (long r : mu.parts()) {
        if (s.is_zero())
            break;
        s = annihilate(s, r, v);
    }
    return s;
}

} // namespace

FockState m_operator(const Partition& lambda, const ClassVector& v, const FockState& s)
{
    FockState out(s.model());
    for (const auto& [mu, d] : m_in_p(lambda))
        out = out + apply_creation_word(s, creation_word(mu, v)) * d;
    return out;
}

FockState adjoint_m_operator(const Partition& lambda, const ClassVector& v,
                             const FockState& s)
{
    FockState out(s.model());
    bool odd = lambda.size() % 2 != 0;
    for (const auto& [mu, d] : m_in_p(lambda))
        out = out + annihilate_word(mu, v, s) * (odd ? Rational(-d) : d);
    return out;
}

LClass l_class(const ModelPtr& model, const Partition& lambda, const ClassVector& v)
{
    return LClass{lambda, v, m_operator(lambda, v, vacuum(model))};
}

bool verify_pieri(const ModelPtr& model, const Partition& lambda, long i,
                  const ClassVector& v)
{
    FockState lhs = create(l_class(model, lambda, v).value, i, v);
    FockState rhs(model);
    for (const auto& [mu, a] : add_part(lambda, i))
        rhs = rhs + l_class(model, mu, v).value * Rational(a);
    return lhs == rhs;
}

namespace {

// All ordered pairs (lambda1, lambda2) with lambda1 union lambda2 = lambda:
// distribute each group of equal parts independently.
void emit_splits(const std::vector<std::pair<long, long>>& groups, size_t g,
                 std::vector<long>& left, std::vector<long>& right,
                 std::vector<std::pair<Partition, Partition>>& out)
{
    if (g == groups.size()) {
        out.push_back({Partition(left), Partition(right)});
        return;
    }
    auto [value, count] = groups[g];
    for (long take = 0; take <= count; ++take) {
        size_t lmark = left.size(), rmark = right.size();
        for (long t = 0; t < take; ++t)
            left.push_back(value);
        for (long t = take; t < count; ++t)
            right.push_back(value);
        emit_splits(groups, g + 1, left, right, out);
        left.resize(lmark);
        right.resize(rmark);
    }
}

std::vector<std::pair<Partition, Partition>> union_splits(const Partition& lambda)
{
    std::vector<std::pair<long, long>> groups;
    for (long v : lambda.distinct_parts())
        groups.push_back({v, lambda.multiplicity(v)});
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<long> left, right;
    emit_splits(groups, 0, left, right, out);
    return out;
}

} // namespace

bool verify_split(const ModelPtr& model, const Partition& lambda, const ClassVector& v1,
                  const ClassVector& v2)
{
    FockState lhs = l_class(model, lambda, v1 + v2).value;
    FockState rhs(model);
    for (const auto& [l1, l2] : union_splits(lambda))
        rhs = rhs + m_operator(l1, v1, m_operator(l2, v2, vacuum(model)));
    return lhs == rhs;
}

std::map<Partition, Integer, PartitionLess> negate_class(const ModelPtr& model,
                                                         const Partition& lambda,
                                                         const ClassVector& v)
{
    // [L^lambda(-v)] = (-1)^{|lambda|} sum_mu f-coeff(mu) [L^mu v].
    SymFunc f = forgotten(lambda);
    bool odd = lambda.size() % 2 != 0;
    std::map<Partition, Integer, PartitionLess> expansion;
    FockState recombined(model);
    for (const auto& [mu, c] : f.coeffs()) {
        if (!is_integer(c))
            throw internal_error("negate_class: non-integer coefficient");
        Rational signed_c = odd ? Rational(-c) : c;
        expansion[mu] = signed_c.get_num();
        recombined = recombined + l_class(model, mu, v).value * signed_c;
    }
    if (!(recombined == l_class(model, lambda, -v).value))
        throw internal_error("negate_class: expansion does not match [L^lambda(-v)]");
    return expansion;
}

FockState tuple_class(const ModelPtr& model, const std::vector<Partition>& nus)
{
    if (static_cast<long>(nus.size()) != model->mid_rank)
        throw std::invalid_argument("tuple_class: expected one partition per middle class");
    FockState s = vacuum(model);
    for (long i = 0; i < model->mid_rank; ++i)
        s = m_operator(nus[static_cast<size_t>(i)], mid_class(*model, i), s);
    return s;
}

namespace {

ExactMatrix gram_of(const std::vector<FockState>& states)
{
    long dim = static_cast<long>(states.size());
    ExactMatrix g(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = i; j < dim; ++j) {
            Rational p = pairing(states[static_cast<size_t>(i)],
                                 states[static_cast<size_t>(j)]);
            g.at(i, j) = p;
            g.at(j, i) = p;
        }
    return g;
}

} // namespace

ExactMatrix mid_gram(const ModelPtr& model, long n)
{
    std::vector<FockState> states;
    for (const MultiPartition& t : enumerate_multipartitions(model->mid_rank, n))
        states.push_back(tuple_class(model, t.slots()));
    return gram_of(states);
}

Rational mid_gram_det(const ModelPtr& model, long n)
{
    return det(mid_gram(model, n));
}

bool basis_label_less(const BasisLabel& a, const BasisLabel& b)
{
    if (!(a.lambda == b.lambda))
        return partition_less(a.lambda, b.lambda);
    if (!(a.mu == b.mu))
        return partition_less(a.mu, b.mu);
    for (size_t i = 0; i < std::min(a.nus.size(), b.nus.size()); ++i)
        if (!(a.nus[i] == b.nus[i]))
            return partition_less(a.nus[i], b.nus[i]);
    return a.nus.size() < b.nus.size();
}

BasisManifest full_basis(const ModelPtr& model, long n)
{
    BasisManifest out;
    out.n = n;
    out.model = model;
    for (const MultiPartition& t : enumerate_multipartitions(model->dim(), n)) {
        BasisLabel label;
        label.lambda = t.slot(0);
        label.mu = t.slot(1);
        for (long i = 0; i < model->mid_rank; ++i)
            label.nus.push_back(t.slot(2 + i));
        FockState s = tuple_class(model, label.nus);
        s = apply_creation_word(s, creation_word(label.mu, point_class(*model)));
        s = apply_creation_word(s, creation_word(label.lambda, unit_class(*model)));
        s = s * (Rational(1) / Rational(z_of(label.lambda)));
        out.labels.push_back(std::move(label));
        out.states.push_back(std::move(s));
    }
    return out;
}

ExactMatrix full_gram(const BasisManifest& basis)
{
    return gram_of(basis.states);
}

Rational full_gram_det(const ModelPtr& model, long n)
{
    return det(full_gram(full_basis(model, n)));
}

ChernExpansion chern_expansion(const ModelPtr& model, long n, long i)
{
    if (n < 0 || i < 0)
        throw std::invalid_argument("chern_expansion: need n, i >= 0");
    ChernExpansion out{FockState(model), {}};
    bool odd = i % 2 != 0;
    for (const Partition& nu : enumerate_partitions(n)) {
        if (nu.length() == n - i) {
            MultiPartition key = empty_key(*model);
            for (long r : nu.parts())
                key = key.with_part_added(model->unit_slot(), r);
            Rational c = Rational(odd ? -1 : 1) / Rational(z_of(nu));
            out.state.add_term(key, c);
            out.coords.push_back(odd ? -1 : 1);
        } else {
            out.coords.push_back(0);
        }
    }
    return out;
}

bool sector_key_less(const SectorKey& a, const SectorKey& b)
{
    if (!(a.lambda == b.lambda))
        return partition_less(a.lambda, b.lambda);
    return partition_less(a.mu, b.mu);
}

namespace {

bool supported_on_mids(const FockState& s)
{
    const FrobeniusModel& model = *s.model();
    for (const auto& [key, c] : s.terms())
        if (!key.slot(model.unit_slot()).empty() || !key.slot(model.point_slot()).empty())
            return false;
    return true;
}

} // namespace

SectorDecomposition sector_decompose(const FockState& state)
{
    auto deg = state.homogeneous_degree();
    if (!deg && !state.is_zero())
        throw std::invalid_argument("sector_decompose: state must be degree-homogeneous");
    SectorDecomposition out;
    if (state.is_zero())
        return out;
    const ModelPtr& model = state.model();
    ClassVector one = unit_class(*model);
    ClassVector x = point_class(*model);
    FockState residual = state;
    for (long s = *deg; s >= 0; --s) {
        for (long a = 0; a <= s; ++a)
            for (const Partition& lambda : enumerate_partitions(a))
                for (const Partition& mu : enumerate_partitions(s - a)) {
                    // ((1/z_mu) a_{-mu}(1) a_{-lambda}(x))^dagger with the
                    // lemma's sign reduces to
                    // (-1)^{ell(lambda)+ell(mu)} / z_mu * a_mu(1) a_lambda(x).
                    FockState comp = annihilate_word(mu, one, residual);
                    comp = annihilate_word(lambda, x, comp);
                    if (comp.is_zero())
                        continue;
                    bool odd = (lambda.length() + mu.length()) % 2 != 0;
                    comp = comp * (Rational(odd ? -1 : 1) / Rational(z_of(mu)));
                    if (!supported_on_mids(comp))
                        throw internal_error("sector_decompose: component leaks outside "
                                             "the middle slots");
                    // Subtract (1/z_lambda) a_{-lambda}(1) a_{-mu}(x) comp.
                    FockState back = apply_creation_word(comp, creation_word(mu, x));
                    back = apply_creation_word(back, creation_word(lambda, one));
                    residual = residual - back * (Rational(1) / Rational(z_of(lambda)));
                    out.emplace(SectorKey{lambda, mu}, std::move(comp));
                }
    }
    if (!residual.is_zero())
        throw internal_error("sector_decompose: nonzero residual");
    return out;
}

FockState sector_recompose(const ModelPtr& model, const SectorDecomposition& parts)
{
    FockState out(model);
    ClassVector one = unit_class(*model);
    ClassVector x = point_class(*model);
    for (const auto& [key, comp] : parts) {
        FockState s = apply_creation_word(comp, creation_word(key.mu, x));
        s = apply_creation_word(s, creation_word(key.lambda, one));
        out = out + s * (Rational(1) / Rational(z_of(key.lambda)));
    }
    return out;
}

bool blowup_key_less(const BlowupKey& a, const BlowupKey& b)
{
    if (!(a.lambda == b.lambda))
        return partition_less(a.lambda, b.lambda);
    if (!(a.mu == b.mu))
        return partition_less(a.mu, b.mu);
    return partition_less(a.nu, b.nu);
}

namespace {

// Solves gram * x = rhs where the unknowns and right-hand sides are states.
std::vector<FockState> solve_states(ExactMatrix gram, std::vector<FockState> rhs)
{
    long n = gram.rows();
    for (long k = 0; k < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (gram.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            throw internal_error("solve_states: singular Gram matrix");
        if (p != k) {
            for (long j = 0; j < n; ++j)
                std::swap(gram.at(p, j), gram.at(k, j));
            std::swap(rhs[static_cast<size_t>(p)], rhs[static_cast<size_t>(k)]);
        }
        Rational piv = gram.at(k, k);
        for (long j = 0; j < n; ++j)
            gram.at(k, j) /= piv;
        rhs[static_cast<size_t>(k)] = rhs[static_cast<size_t>(k)] * (Rational(1) / piv);
        for (long i = 0; i < n; ++i) {
            if (i == k)
                continue;
            Rational f = gram.at(i, k);
            if (f == 0)
                continue;
            for (long j = 0; j < n; ++j)
                gram.at(i, j) -= f * gram.at(k, j);
            rhs[static_cast<size_t>(i)] =
                rhs[static_cast<size_t>(i)] - rhs[static_cast<size_t>(k)] * f;
        }
    }
    return rhs;
}

bool free_of_slot(const FockState& s, long slot)
{
    for (const auto& [key, c] : s.terms())
        if (!key.slot(slot).empty())
            return false;
    return true;
}

// Decomposes a middle-supported state as sum_nu m_{nu,E}(A_nu) with each
// A_nu free of the E slot, descending in |nu| as in the extraction of the
// blow-up components.
std::map<Partition, FockState, PartitionLess> e_decompose(const FockState& mid_state,
                                                          long e_slot)
{
    std::map<Partition, FockState, PartitionLess> out;
    if (mid_state.is_zero())
        return out;
    const ModelPtr& model = mid_state.model();
    ClassVector e = mid_class(*model, e_slot);
    long deg = *mid_state.homogeneous_degree();
    FockState residual = mid_state;
    for (long n0 = deg; n0 >= 0; --n0) {
        std::vector<Partition> rhos = enumerate_partitions(n0);
        std::vector<FockState> mstates;
        for (const Partition& rho : rhos)
            mstates.push_back(m_operator(rho, e, vacuum(model)));
        ExactMatrix gram = gram_of(mstates);
        std::vector<FockState> rhs;
        for (const Partition& rho : rhos)
            rhs.push_back(adjoint_m_operator(rho, e, residual));
        std::vector<FockState> comps = solve_states(std::move(gram), std::move(rhs));
        for (size_t i = 0; i < rhos.size(); ++i) {
            if (comps[i].is_zero())
                continue;
            if (!free_of_slot(comps[i], 1 + e_slot))
                throw internal_error("blowup_decompose: component retains the E slot");
            residual = residual - m_operator(rhos[i], e, comps[i]);
            out.emplace(rhos[i], std::move(comps[i]));
        }
    }
    if (!residual.is_zero())
        throw internal_error("blowup_decompose: nonzero residual in the E sector");
    return out;
}

} // namespace

BlowupDecomposition blowup_decompose(const FockState& state)
{
    const ModelPtr& model = state.model();
    if (!model->exceptional_slot)
        throw std::invalid_argument("blowup_decompose: model has no exceptional slot");
    long e_slot = *model->exceptional_slot;
    BlowupDecomposition out;
    for (auto& [sector, comp] : sector_decompose(state))
        for (auto& [nu, part] : e_decompose(comp, e_slot))
            out.emplace(BlowupKey{sector.lambda, sector.mu, nu}, std::move(part));
    return out;
}

FockState blowup_recompose(const ModelPtr& model, const BlowupDecomposition& parts)
{
    if (!model->exceptional_slot)
        throw std::invalid_argument("blowup_recompose: model has no exceptional slot");
    ClassVector one = unit_class(*model);
    ClassVector x = point_class(*model);
    ClassVector e = mid_class(*model, *model->exceptional_slot);
    FockState out(model);
    for (const auto& [key, comp] : parts) {
        FockState s = m_operator(key.nu, e, comp);
        s = apply_creation_word(s, creation_word(key.mu, x));
        s = apply_creation_word(s, creation_word(key.lambda, one));
        out = out + s * (Rational(1) / Rational(z_of(key.lambda)));
    }
    return out;
}

std::map<MultiPartition, Rational, MultiPartitionLess>
mid_expand_in_tuples(const FockState& mid_state, const std::vector<ClassVector>& alphas)
{
    std::map<MultiPartition, Rational, MultiPartitionLess> out;
    if (mid_state.is_zero())
        return out;
    if (!supported_on_mids(mid_state))
        throw std::invalid_argument("mid_expand_in_tuples: state touches unit or point slots");
    const ModelPtr& model = mid_state.model();
    long k = static_cast<long>(alphas.size());
    if (k != model->mid_rank)
        throw std::invalid_argument("mid_expand_in_tuples: need one class per middle slot");
    auto deg = mid_state.homogeneous_degree();
    if (!deg)
        throw std::invalid_argument("mid_expand_in_tuples: state must be homogeneous");

    std::vector<MultiPartition> labels = enumerate_multipartitions(k, *deg);
    std::vector<FockState> tuples;
    for (const MultiPartition& t : labels) {
        FockState s = vacuum(model);
        for (long i = 0; i < k; ++i)
            s = m_operator(t.slot(i), alphas[static_cast<size_t>(i)], s);
        tuples.push_back(std::move(s));
    }

    // Index the middle-supported keys of this degree.
    std::map<MultiPartition, long, MultiPartitionLess> key_index;
    for (const MultiPartition& t : labels) {
        MultiPartition key = empty_key(*model);
        for (long i = 0; i < k; ++i)
            for (long r : t.slot(i).parts())
                key = key.with_part_added(1 + i, r);
        key_index.emplace(std::move(key), static_cast<long>(key_index.size()));
    }

    long dim = static_cast<long>(labels.size());
    ExactMatrix m(dim, dim);
    for (long c = 0; c < dim; ++c)
        for (const auto& [key, v] : tuples[static_cast<size_t>(c)].terms()) {
            auto it = key_index.find(key);
            if (it == key_index.end())
                throw internal_error("mid_expand_in_tuples: unexpected key in tuple class");
            m.at(it->second, c) = v;
        }
    ExactMatrix rhs(dim, 1);
    for (const auto& [key, v] : mid_state.terms()) {
        auto it = key_index.find(key);
        if (it == key_index.end())
            throw std::invalid_argument("mid_expand_in_tuples: state has a key outside "
                                        "the expected degree");
        rhs.at(it->second, 0) = v;
    }
    ExactMatrix x = solve(m, rhs);
    for (long i = 0; i < dim; ++i)
        if (x.at(i, 0) != 0)
            out[labels[static_cast<size_t>(i)]] = x.at(i, 0);
    return out;
}

std::map<MultiPartition, Rational, MultiPartitionLess>
mid_coordinates(const FockState& mid_state)
{
    const ModelPtr& model = mid_state.model();
    std::vector<ClassVector> alphas;
    for (long i = 0; i < model->mid_rank; ++i)
        alphas.push_back(mid_class(*model, i));
    return mid_expand_in_tuples(mid_state, alphas);
}

std::map<BasisLabel, Rational, BasisLabelLess>
full_basis_coordinates(const FockState& state)
{
    std::map<BasisLabel, Rational, BasisLabelLess> out;
    for (const auto& [sector, comp] : sector_decompose(state))
        for (const auto& [tuple, c] : mid_coordinates(comp)) {
            BasisLabel label;
            label.lambda = sector.lambda;
            label.mu = sector.mu;
            label.nus = tuple.slots();
            out[label] = c;
        }
    return out;
}

} // namespace focklat
