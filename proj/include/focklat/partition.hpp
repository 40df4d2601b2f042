#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "focklat/rational.hpp"

namespace focklat {

// An integer partition: weakly decreasing positive parts.  Construction
// normalizes (sorts descending, drops zeros) and rejects negative parts.
// Values are immutable once built.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long> parts);
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    // |lambda|
    long size() const { return size_; }
    // ell(lambda)
    long length() const { return static_cast<long>(parts_.size()); }
    // m_r(lambda)
    long multiplicity(long r) const;
    // Distinct part values, descending.
    std::vector<long> distinct_parts() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<long> parts_;
    long size_ = 0;
};

// Canonical total order: by |lambda| ascending, then reverse lexicographic
// within a size class ((n) first, (1^n) last).  enumerate_partitions emits
// exactly this order; every matrix in the library is indexed by it.
bool partition_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const
    {
        return partition_less(a, b);
    }
};

// z_lambda = prod_r r^{m_r} m_r!
Integer z_of(const Partition& lambda);

// All partitions of n, reverse lexicographic.
std::vector<Partition> enumerate_partitions(long n);

// Multiset union of the parts.
Partition union_of(const Partition& a, const Partition& b);

// Standard dominance order on partitions of equal size; throws
// std::invalid_argument otherwise.
bool dominance_leq(const Partition& a, const Partition& b);

// The mu = lambda with i added to one part (a zero part is always
// available), together with the Pieri coefficient
// a_{lambda,mu} = #{l : mu_l = lambda_k + i}.  Results are keyed by
// distinct mu, in canonical order.
std::vector<std::pair<Partition, long>> add_part(const Partition& lambda, long i);

// A fixed-length tuple of partitions.  Fock-space keys use length k+2
// (unit slot, k middle slots, point slot); tuple-class labels use length k.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> slots) : slots_(std::move(slots)) {}

    long slot_count() const { return static_cast<long>(slots_.size()); }
    const Partition& slot(long i) const { return slots_[static_cast<size_t>(i)]; }
    const std::vector<Partition>& slots() const { return slots_; }
    long total_size() const;

    MultiPartition with_part_added(long slot, long r) const;
    // Removes one copy of part r from the given slot; the part must exist.
    MultiPartition with_part_removed(long slot, long r) const;

    bool operator==(const MultiPartition& o) const { return slots_ == o.slots_; }

private:
    std::vector<Partition> slots_;
};

// Total size ascending, then slotwise by partition_less.
bool multipartition_less(const MultiPartition& a, const MultiPartition& b);

struct MultiPartitionLess {
    bool operator()(const MultiPartition& a, const MultiPartition& b) const
    {
        return multipartition_less(a, b);
    }
};

// All k-tuples of partitions with total size n, ordered slot 0 outermost
// (its size ascending, partitions reverse lexicographic within a size).
std::vector<MultiPartition> enumerate_multipartitions(long k_total, long n);

} // namespace focklat
