#pragma once

#include <map>
#include <optional>
#include <vector>

#include "focklat/fock.hpp"
#include "focklat/symfunc.hpp"

namespace focklat {

// The operator m_{lambda,v}: m_lambda = sum d_mu p_mu with p_i replaced by
// a_{-i}(v).
FockState m_operator(const Partition& lambda, const ClassVector& v, const FockState& s);

// Adjoint (m_{lambda,v})^dagger: annihilation words with sign (-1)^{|lambda|}.
FockState adjoint_m_operator(const Partition& lambda, const ClassVector& v,
                             const FockState& s);

// [L^lambda v] = m_{lambda,v}|0>.
struct LClass {
    Partition lambda;
    ClassVector v;
    FockState value;
};

LClass l_class(const ModelPtr& model, const Partition& lambda, const ClassVector& v);

// a_{-i}(v) [L^lambda v] = sum over add_part(lambda, i) of a_{lambda,mu} [L^mu v].
bool verify_pieri(const ModelPtr& model, const Partition& lambda, long i,
                  const ClassVector& v);

// [L^lambda (v1+v2)] = sum over ordered pairs with union lambda of
// m_{lambda1,v1} m_{lambda2,v2} |0>.
bool verify_split(const ModelPtr& model, const Partition& lambda, const ClassVector& v1,
                  const ClassVector& v2);

// Expansion [L^lambda (-v)] = sum c_mu [L^mu v]; the coefficients are
// (-1)^{|lambda|} times the M coefficients of the forgotten function and
// are always integers (internal_error otherwise).  The returned expansion
// is also checked exactly against the FockState identity.
std::map<Partition, Integer, PartitionLess> negate_class(const ModelPtr& model,
                                                         const Partition& lambda,
                                                         const ClassVector& v);

// m_{nu^1,alpha_1} ... m_{nu^k,alpha_k} |0> over the model's middle basis.
FockState tuple_class(const ModelPtr& model, const std::vector<Partition>& nus);

// Gram matrix / determinant of all tuple classes of total size n, indexed
// by enumerate_multipartitions(k, n).
ExactMatrix mid_gram(const ModelPtr& model, long n);
Rational mid_gram_det(const ModelPtr& model, long n);

// Label of a full-basis class: (1/z_lambda) a_{-lambda}(1) a_{-mu}(x)
// m_{nu^1,alpha_1} ... m_{nu^k,alpha_k} |0>.
struct BasisLabel {
    Partition lambda;              // unit-slot partition
    Partition mu;                  // point-slot partition
    std::vector<Partition> nus;    // middle tuples
};

bool basis_label_less(const BasisLabel& a, const BasisLabel& b);

struct BasisLabelLess {
    bool operator()(const BasisLabel& a, const BasisLabel& b) const
    {
        return basis_label_less(a, b);
    }
};

struct BasisManifest {
    long n = 0;
    ModelPtr model;
    std::vector<BasisLabel> labels;
    std::vector<FockState> states;  // parallel to labels
    std::optional<Rational> gram_det;
};

// All labels with |lambda|+|mu|+sum|nu^i| = n, in the product order of
// enumerate_multipartitions (lambda outermost), with their states.
BasisManifest full_basis(const ModelPtr& model, long n);
ExactMatrix full_gram(const BasisManifest& basis);
Rational full_gram_det(const ModelPtr& model, long n);

// c_i(O^[n]) = (-1)^i sum_{|nu|=n, ell(nu)=n-i} a_{-nu}(1)|0> / z_nu,
// together with its coordinates over the unit-sector lattice basis
// {(1/z_lambda) a_{-lambda}(1)|0>}, indexed by enumerate_partitions(n).
struct ChernExpansion {
    FockState state;
    std::vector<Integer> coords;
};

ChernExpansion chern_expansion(const ModelPtr& model, long n, long i);

// ---- sector decomposition -------------------------------------------------

struct SectorKey {
    Partition lambda; // unit partition
    Partition mu;     // point partition
};

bool sector_key_less(const SectorKey& a, const SectorKey& b);

struct SectorKeyLess {
    bool operator()(const SectorKey& a, const SectorKey& b) const
    {
        return sector_key_less(a, b);
    }
};

using SectorDecomposition = std::map<SectorKey, FockState, SectorKeyLess>;

// Unique components A_{lambda,mu}, supported on the middle slots only, with
// state = sum (1/z_lambda) a_{-lambda}(1) a_{-mu}(x) (A_{lambda,mu}).
// Extracted stratum by stratum, |lambda|+|mu| descending, by the adjoint
// word with sign (-1)^{|lambda|-ell(lambda)+|mu|-ell(mu)}.  The input must
// be degree-homogeneous.
SectorDecomposition sector_decompose(const FockState& state);
FockState sector_recompose(const ModelPtr& model, const SectorDecomposition& parts);

// ---- blow-up decomposition ------------------------------------------------

struct BlowupKey {
    Partition lambda;
    Partition mu;
    Partition nu; // exceptional-class partition
};

bool blowup_key_less(const BlowupKey& a, const BlowupKey& b);

struct BlowupKeyLess {
    bool operator()(const BlowupKey& a, const BlowupKey& b) const
    {
        return blowup_key_less(a, b);
    }
};

using BlowupDecomposition = std::map<BlowupKey, FockState, BlowupKeyLess>;

// Components with state = sum (1/z_lambda) a_{-lambda}(1) a_{-mu}(x)
// m_{nu,E} (A_{lambda,mu,nu}) and every component free of the unit, point
// and E slots.  The E extraction solves against the unimodular Gram of
// {m_{rho,E}|0>}, descending in |nu|.  The model must designate an
// exceptional slot.
BlowupDecomposition blowup_decompose(const FockState& state);
FockState blowup_recompose(const ModelPtr& model, const BlowupDecomposition& parts);

// ---- coordinates ----------------------------------------------------------

// Expands a middle-supported homogeneous state in the tuple classes built
// from the given middle class vectors (defaulting to the model's middle
// basis).  Keys are the k-tuples of enumerate_multipartitions(k, degree).
std::map<MultiPartition, Rational, MultiPartitionLess>
mid_expand_in_tuples(const FockState& mid_state, const std::vector<ClassVector>& alphas);

std::map<MultiPartition, Rational, MultiPartitionLess>
mid_coordinates(const FockState& mid_state);

// Coordinates of a homogeneous state in the full basis of its degree,
// computed through the sector decomposition.
std::map<BasisLabel, Rational, BasisLabelLess>
full_basis_coordinates(const FockState& state);

} // namespace focklat
