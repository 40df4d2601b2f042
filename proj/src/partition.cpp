#include "focklat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace focklat {

namespace {

void normalize(std::vector<long>& parts)
{
    for (long p : parts)
        if (p < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

} // namespace

Partition::Partition(std::initializer_list<long> parts)
    : Partition(std::vector<long>(parts))
{
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts))
{
    normalize(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::multiplicity(long r) const
{
    return static_cast<long>(std::count(parts_.begin(), parts_.end(), r));
}

std::vector<long> Partition::distinct_parts() const
{
    std::vector<long> out;
    for (long p : parts_)
        if (out.empty() || out.back() != p)
            out.push_back(p);
    return out;
}

bool partition_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    // Reverse lexicographic: a precedes b iff a.parts() > b.parts().
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

Integer z_of(const Partition& lambda)
{
    Integer z = 1;
    for (long r : lambda.distinct_parts()) {
        long m = lambda.multiplicity(r);
        for (long j = 0; j < m; ++j)
            z *= r;
        z *= factorial(static_cast<unsigned long>(m));
    }
    return z;
}

namespace {

void emit_partitions(long n, long max_part, std::vector<long>& acc,
                     std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<long> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

Partition union_of(const Partition& a, const Partition& b)
{
    std::vector<long> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(parts);
}

bool dominance_leq(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq requires partitions of equal size");
    long sa = 0, sb = 0;
    size_t rows = std::max(a.parts().size(), b.parts().size());
    for (size_t i = 0; i < rows; ++i) {
        sa += i < a.parts().size() ? a.parts()[i] : 0;
        sb += i < b.parts().size() ? b.parts()[i] : 0;
        if (sa > sb)
            return false;
    }
    return true;
}

std::vector<std::pair<Partition, long>> add_part(const Partition& lambda, long i)
{
    if (i < 1)
        throw std::invalid_argument("add_part: i must be >= 1");
    std::map<Partition, long, PartitionLess> out;
    std::vector<long> values = lambda.distinct_parts();
    values.push_back(0); // the implicit zero part
    for (long j : values) {
        std::vector<long> parts = lambda.parts();
        if (j == 0) {
            parts.push_back(i);
        } else {
            auto it = std::find(parts.begin(), parts.end(), j);
            *it += i;
        }
        Partition mu(parts);
        out[mu] = mu.multiplicity(i + j);
    }
    return {out.begin(), out.end()};
}

long MultiPartition::total_size() const
{
    long t = 0;
    for (const Partition& p : slots_)
        t += p.size();
    return t;
}

MultiPartition MultiPartition::with_part_added(long slot, long r) const
{
    std::vector<Partition> s = slots_;
    std::vector<long> parts = s[static_cast<size_t>(slot)].parts();
    parts.push_back(r);
    s[static_cast<size_t>(slot)] = Partition(parts);
    return MultiPartition(std::move(s));
}

MultiPartition MultiPartition::with_part_removed(long slot, long r) const
{
    std::vector<Partition> s = slots_;
    std::vector<long> parts = s[static_cast<size_t>(slot)].parts();
    auto it = std::find(parts.begin(), parts.end(), r);
    if (it == parts.end())
        throw std::invalid_argument("with_part_removed: part not present");
    parts.erase(it);
    s[static_cast<size_t>(slot)] = Partition(parts);
    return MultiPartition(std::move(s));
}

bool multipartition_less(const MultiPartition& a, const MultiPartition& b)
{
    if (a.total_size() != b.total_size())
        return a.total_size() < b.total_size();
    size_t slots = std::min(a.slots().size(), b.slots().size());
    for (size_t i = 0; i < slots; ++i) {
        if (!(a.slots()[i] == b.slots()[i]))
            return partition_less(a.slots()[i], b.slots()[i]);
    }
    return a.slots().size() < b.slots().size();
}

namespace {

void emit_multipartitions(long k, long n, std::vector<Partition>& acc,
                          std::vector<MultiPartition>& out)
{
    if (k == 1) {
        for (const Partition& p : enumerate_partitions(n)) {
            acc.push_back(p);
            out.push_back(MultiPartition(acc));
            acc.pop_back();
        }
        return;
    }
    for (long s = 0; s <= n; ++s) {
        for (const Partition& p : enumerate_partitions(s)) {
            acc.push_back(p);
            emit_multipartitions(k - 1, n - s, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<MultiPartition> enumerate_multipartitions(long k_total, long n)
{
    if (k_total < 0)
        throw std::invalid_argument("enumerate_multipartitions: k_total must be >= 0");
    if (n < 0)
        throw std::invalid_argument("enumerate_multipartitions: n must be >= 0");
    std::vector<MultiPartition> out;
    if (k_total == 0) {
        if (n == 0)
            out.push_back(MultiPartition(std::vector<Partition>{}));
        return out;
    }
    std::vector<Partition> acc;
    emit_multipartitions(k_total, n, acc, out);
    return out;
}

} // namespace focklat
