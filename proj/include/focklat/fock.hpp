#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focklat/exact_matrix.hpp"
#include "focklat/partition.hpp"
#include "focklat/rational.hpp"

namespace focklat {

// The even-cohomology pairing of a surface, reduced to its combinatorial
// content: a distinguished unit class 1 and point class x spanning a
// hyperbolic block ((1,1) = (x,x) = 0, (1,x) = 1), plus a rank-k middle
// lattice with symmetric integer Gram matrix, orthogonal to both.
//
// Slot layout everywhere in this library: 0 = unit, 1..k = middle classes,
// k+1 = point.
struct FrobeniusModel {
    std::string name;
    long mid_rank = 0;              // k
    ExactMatrix gram;               // k x k, symmetric, integer
    std::optional<long> exceptional_slot; // 0-based middle index of E, if any

    long dim() const { return mid_rank + 2; }
    long unit_slot() const { return 0; }
    long point_slot() const { return mid_rank + 1; }

    // Pairing of the slot basis classes.
    Rational pair_slots(long i, long j) const;

    // Throws input_error when the invariants fail (asymmetric gram,
    // non-integer entries, bad exceptional slot).
    void validate() const;

    bool operator==(const FrobeniusModel& o) const;
};

using ModelPtr = std::shared_ptr<const FrobeniusModel>;

ModelPtr make_model(std::string name, ExactMatrix gram,
                    std::optional<long> exceptional_slot = std::nullopt);

// A rational class vector over the k+2 slot basis.
class ClassVector {
public:
    ClassVector() = default;
    explicit ClassVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    long dim() const { return static_cast<long>(coords_.size()); }
    const Rational& operator[](long i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    ClassVector operator+(const ClassVector& o) const;
    ClassVector operator-(const ClassVector& o) const;
    ClassVector operator*(const Rational& c) const;
    ClassVector operator-() const { return *this * Rational(-1); }
    bool operator==(const ClassVector& o) const { return coords_ == o.coords_; }

private:
    std::vector<Rational> coords_;
};

ClassVector slot_class(const FrobeniusModel& model, long slot);
ClassVector unit_class(const FrobeniusModel& model);
ClassVector point_class(const FrobeniusModel& model);
// i is the 0-based middle index (slot 1+i).
ClassVector mid_class(const FrobeniusModel& model, long i);

Rational pair_classes(const FrobeniusModel& model, const ClassVector& a,
                      const ClassVector& b);

// An element of the Heisenberg Fock space over a model.  Keys are
// (k+2)-tuples of partitions recording the creation monomial
// prod_{slot j} prod_{parts r} a_{-r}(e_j) applied to the vacuum; this is
// well defined because all classes here are even and the creation
// operators commute.  States may mix degrees; no zero coefficient is
// stored.  States are immutable values once built.
class FockState {
public:
    using TermMap = std::map<MultiPartition, Rational, MultiPartitionLess>;

    explicit FockState(ModelPtr model) : model_(std::move(model)) {}

    const ModelPtr& model() const { return model_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const MultiPartition& key) const;

    void add_term(const MultiPartition& key, const Rational& c);

    // Degree of a homogeneous state; nullopt for mixed degrees or zero.
    std::optional<long> homogeneous_degree() const;
    long max_degree() const;

    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState operator*(const Rational& c) const;
    bool operator==(const FockState& o) const;

private:
    ModelPtr model_;
    TermMap terms_;
};

MultiPartition empty_key(const FrobeniusModel& model);

// |0>
FockState vacuum(ModelPtr model);

// a_{-r}(v): appends part r, linearly over the slots of v.
FockState create(const FockState& s, long r, const ClassVector& v);

// a_{r}(v), computed from the commutation relation
// [a_m(alpha), a_n(beta)] = -m delta_{m,-n} (alpha, beta) Id together with
// a_r(v)|0> = 0: every key loses one part r per slot, weighted by
// -r (v, e_j) m_r(slot j).
FockState annihilate(const FockState& s, long r, const ClassVector& v);

// <A, B>, evaluated by converting A's creation words to annihilation words
// via a_{-n}^dagger = (-1)^n a_n and applying them to B.
Rational pairing(const FockState& a, const FockState& b);

// 1_{-n} = a_{-1}(1)^n / n!; the zero operator for n < 0.
FockState vertical_unit(long n, const FockState& s);

FockState degree_component(const FockState& s, long n);

using CreationWord = std::vector<std::pair<long, ClassVector>>;

FockState apply_creation_word(const FockState& s, const CreationWord& word);

} // namespace focklat
