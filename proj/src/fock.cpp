#include "focklat/fock.hpp"

#include <stdexcept>

#include "focklat/errors.hpp"

namespace focklat {

Rational FrobeniusModel::pair_slots(long i, long j) const
{
    if (i > j)
        std::swap(i, j);
    if (i == unit_slot())
        return j == point_slot() ? Rational(1) : Rational(0);
    if (j == point_slot())
        return Rational(0); // (x, x) and (x, mid)
    return gram.at(i - 1, j - 1);
}

void FrobeniusModel::validate() const
{
    if (mid_rank < 0)
        throw input_error("model '" + name + "': negative middle rank");
    if (gram.rows() != mid_rank || gram.cols() != mid_rank)
        throw input_error("model '" + name + "': gram must be " +
                          std::to_string(mid_rank) + "x" + std::to_string(mid_rank));
    if (!gram.is_integer())
        throw input_error("model '" + name + "': gram entries must be integers");
    if (!gram.is_symmetric())
        throw input_error("model '" + name + "': gram must be symmetric");
    if (exceptional_slot) {
        long e = *exceptional_slot;
        if (e < 0 || e >= mid_rank)
            throw input_error("model '" + name + "': exceptional slot out of range");
        if (gram.at(e, e) != -1)
            throw input_error("model '" + name + "': exceptional class needs self-pairing -1");
        for (long j = 0; j < mid_rank; ++j)
            if (j != e && gram.at(e, j) != 0)
                throw input_error("model '" + name +
                                  "': exceptional class must be orthogonal to the rest");
    }
}

bool FrobeniusModel::operator==(const FrobeniusModel& o) const
{
    return name == o.name && mid_rank == o.mid_rank && gram == o.gram &&
           exceptional_slot == o.exceptional_slot;
}

ModelPtr make_model(std::string name, ExactMatrix gram, std::optional<long> exceptional_slot)
{
    auto m = std::make_shared<FrobeniusModel>();
    m->name = std::move(name);
    m->mid_rank = gram.rows();
    m->gram = std::move(gram);
    m->exceptional_slot = exceptional_slot;
    m->validate();
    return m;
}

ClassVector ClassVector::operator+(const ClassVector& o) const
{
    if (dim() != o.dim())
        throw std::invalid_argument("ClassVector: dimension mismatch");
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords_[i];
    return ClassVector(std::move(c));
}

ClassVector ClassVector::operator-(const ClassVector& o) const
{
    return *this + (o * Rational(-1));
}

ClassVector ClassVector::operator*(const Rational& c) const
{
    std::vector<Rational> r = coords_;
    for (Rational& x : r)
        x *= c;
    return ClassVector(std::move(r));
}

ClassVector slot_class(const FrobeniusModel& model, long slot)
{
    std::vector<Rational> c(static_cast<size_t>(model.dim()), Rational(0));
    c[static_cast<size_t>(slot)] = 1;
    return ClassVector(std::move(c));
}

ClassVector unit_class(const FrobeniusModel& model)
{
    return slot_class(model, model.unit_slot());
}

ClassVector point_class(const FrobeniusModel& model)
{
    return slot_class(model, model.point_slot());
}

ClassVector mid_class(const FrobeniusModel& model, long i)
{
    if (i < 0 || i >= model.mid_rank)
        throw std::invalid_argument("mid_class: index out of range");
    return slot_class(model, 1 + i);
}

Rational pair_classes(const FrobeniusModel& model, const ClassVector& a,
                      const ClassVector& b)
{
    if (a.dim() != model.dim() || b.dim() != model.dim())
        throw std::invalid_argument("pair_classes: dimension mismatch");
    Rational sum = 0;
    for (long i = 0; i < model.dim(); ++i) {
        if (a[i] == 0)
            continue;
        for (long j = 0; j < model.dim(); ++j) {
            if (b[j] == 0)
                continue;
            Rational g = model.pair_slots(i, j);
            if (g != 0)
                sum += a[i] * b[j] * g;
        }
    }
    return sum;
}

Rational FockState::coeff(const MultiPartition& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FockState::add_term(const MultiPartition& key, const Rational& c)
{
    if (key.slot_count() != model_->dim())
        throw std::invalid_argument("FockState: key slot count mismatch");
    Rational& slot = terms_[key];
    slot += c;
    if (slot == 0)
        terms_.erase(key);
}

std::optional<long> FockState::homogeneous_degree() const
{
    std::optional<long> deg;
    for (const auto& [key, c] : terms_) {
        long d = key.total_size();
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

long FockState::max_degree() const
{
    long d = 0;
    for (const auto& [key, c] : terms_)
        d = std::max(d, key.total_size());
    return d;
}

namespace {

void require_same_model(const FockState& a, const FockState& b)
{
    if (!(*a.model() == *b.model()))
        throw std::invalid_argument("FockState: model mismatch");
}

} // namespace

FockState FockState::operator+(const FockState& o) const
{
    require_same_model(*this, o);
    FockState r = *this;
    for (const auto& [key, c] : o.terms_)
        r.add_term(key, c);
    return r;
}

FockState FockState::operator-(const FockState& o) const
{
    require_same_model(*this, o);
    FockState r = *this;
    for (const auto& [key, c] : o.terms_)
        r.add_term(key, -c);
    return r;
}

FockState FockState::operator*(const Rational& c) const
{
    FockState r(model_);
    if (c == 0)
        return r;
    for (const auto& [key, v] : terms_)
        r.terms_[key] = v * c;
    return r;
}

bool FockState::operator==(const FockState& o) const
{
    return *model_ == *o.model_ && terms_ == o.terms_;
}

MultiPartition empty_key(const FrobeniusModel& model)
{
    return MultiPartition(std::vector<Partition>(static_cast<size_t>(model.dim())));
}

FockState vacuum(ModelPtr model)
{
    FockState s(std::move(model));
    s.add_term(empty_key(*s.model()), 1);
    return s;
}

FockState create(const FockState& s, long r, const ClassVector& v)
{
    if (r < 1)
        throw std::invalid_argument("create: r must be >= 1");
    const FrobeniusModel& model = *s.model();
    if (v.dim() != model.dim())
        throw std::invalid_argument("create: class vector dimension mismatch");
    FockState out(s.model());
    for (const auto& [key, c] : s.terms())
        for (long j = 0; j < model.dim(); ++j) {
            if (v[j] == 0)
                continue;
            out.add_term(key.with_part_added(j, r), c * v[j]);
        }
    return out;
}

FockState annihilate(const FockState& s, long r, const ClassVector& v)
{
    if (r < 1)
        throw std::invalid_argument("annihilate: r must be >= 1");
    const FrobeniusModel& model = *s.model();
    if (v.dim() != model.dim())
        throw std::invalid_argument("annihilate: class vector dimension mismatch");
    // w_j = (v, e_j)
    std::vector<Rational> w(static_cast<size_t>(model.dim()), Rational(0));
    for (long j = 0; j < model.dim(); ++j)
        w[static_cast<size_t>(j)] = pair_classes(model, v, slot_class(model, j));
    FockState out(s.model());
    for (const auto& [key, c] : s.terms())
        for (long j = 0; j < model.dim(); ++j) {
            if (w[static_cast<size_t>(j)] == 0)
                continue;
            long m = key.slot(j).multiplicity(r);
            if (m == 0)
                continue;
            out.add_term(key.with_part_removed(j, r),
                         c * w[static_cast<size_t>(j)] * Rational(-r * m));
        }
    return out;
}

Rational pairing(const FockState& a, const FockState& b)
{
    require_same_model(a, b);
    const FrobeniusModel& model = *a.model();
    const MultiPartition vac_key = empty_key(model);
    Rational total = 0;
    for (const auto& [key, c] : a.terms()) {
        FockState cur = b;
        for (long j = 0; j < model.dim() && !cur.is_zero(); ++j) {
            ClassVector ej = slot_class(model, j);
            for (long r : key.slot(j).parts()) {
                cur = annihilate(cur, r, ej);
                if (cur.is_zero())
                    break;
            }
        }
        Rational vc = cur.coeff(vac_key);
        if (vc != 0) {
            // a_{-n}^dagger = (-1)^n a_n, so the word contributes (-1)^{|key|}.
            Rational t = c * vc;
            total += (key.total_size() % 2 == 0) ? t : Rational(-t);
        }
    }
    return total;
}

FockState vertical_unit(long n, const FockState& s)
{
    if (n < 0)
        return FockState(s.model());
    FockState out = s;
    ClassVector one = unit_class(*s.model());
    for (long i = 0; i < n; ++i)
        out = create(out, 1, one);
    return out * (Rational(1) / Rational(factorial(static_cast<unsigned long>(n))));
}

FockState degree_component(const FockState& s, long n)
{
    FockState out(s.model());
    for (const auto& [key, c] : s.terms())
        if (key.total_size() == n)
            out.add_term(key, c);
    return out;
}

FockState apply_creation_word(const FockState& s, const CreationWord& word)
{
    FockState out = s;
    for (const auto& [r, v] : word)
        out = create(out, r, v);
    return out;
}

} // namespace focklat
