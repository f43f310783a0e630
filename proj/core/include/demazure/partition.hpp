/**
 * @file partition.hpp
 * @brief Integer partitions indexing the graded modules, and the named
 *        partition families (Weyl, Demazure, truncated Weyl, hooks).
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace demazure {

struct SingletonPartition : std::domain_error {
    using std::domain_error::domain_error;
};

/// Weakly decreasing sequence of positive integers; the empty sequence is
/// the zero partition.
class Partition {
public:
    Partition() = default;
    /// Sorts descending and drops zeros; negative entries are rejected.
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts)
        : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long size() const;            ///< |xi| = sum of parts
    long part(size_t i) const { return parts_.at(i); }  ///< 0-based
    long largest() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_text() const;  ///< "2,2,1"; "" for the zero partition
    static Partition from_text(const std::string& s);

private:
    std::vector<long> parts_;
};

/// Result of splitting off the smallest part through the short exact
/// sequence: V(xi) sits between tau_shift V(minus) and V(plus).
struct SesTransforms {
    Partition plus;
    Partition minus;
    long shift = 0;
};

/// plus = (n_1,..,n_{k-2}, n_{k-1}+1, n_k-1), minus = (n_1,..,n_{k-1}-n_k),
/// shift = (k-1) n_k, both canonicalized. Requires at least two parts.
SesTransforms ses_transforms(const Partition& xi);

Partition weyl_partition(long m);                       ///< (1^m)
Partition demazure_partition(long level, long n);       ///< (l^a, n0), n = l a + n0
Partition truncated_weyl_partition(long m, long N);     ///< ((k+1)^r, k^{N-r}), m = N k + r
Partition hook_partition(long k, long r);               ///< (k-r+1, 1^{r-1}), k >= r >= 1

}  // namespace demazure
