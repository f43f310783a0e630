#include "demazure/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace demazure {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_)
        if (p < 0) throw std::domain_error("Partition: negative part");
    std::sort(parts_.begin(), parts_.end(), std::greater<long>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::from_text(const std::string& s) {
    std::vector<long> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Partition: empty part in \"" + s + "\"");
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("Partition: bad part \"" + tok + "\"");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

SesTransforms ses_transforms(const Partition& xi) {
    const auto& p = xi.parts();
    const size_t k = p.size();
    if (k < 2) throw SingletonPartition("ses_transforms: need at least two parts");
    std::vector<long> plus(p.begin(), p.end() - 2);
    plus.push_back(p[k - 2] + 1);
    plus.push_back(p[k - 1] - 1);
    std::vector<long> minus(p.begin(), p.end() - 2);
    minus.push_back(p[k - 2] - p[k - 1]);
    return SesTransforms{Partition(std::move(plus)), Partition(std::move(minus)),
                         static_cast<long>(k - 1) * p[k - 1]};
}

Partition weyl_partition(long m) {
    if (m < 0) throw std::domain_error("weyl_partition: m < 0");
    return Partition(std::vector<long>(m, 1));
}

Partition demazure_partition(long level, long n) {
    if (level < 1) throw std::domain_error("demazure_partition: level < 1");
    if (n < 0) throw std::domain_error("demazure_partition: n < 0");
    std::vector<long> parts(n / level, level);
    parts.push_back(n % level);
    return Partition(std::move(parts));
}

Partition truncated_weyl_partition(long m, long N) {
    if (m < 0 || N < 0) throw std::domain_error("truncated_weyl_partition: negative argument");
    if (N == 0) {
        if (m != 0) throw std::domain_error("truncated_weyl_partition: N = 0 with m > 0");
        return Partition();
    }
    long k = m / N, r = m % N;
    std::vector<long> parts(r, k + 1);
    parts.insert(parts.end(), N - r, k);
    return Partition(std::move(parts));
}

Partition hook_partition(long k, long r) {
    if (r < 1 || k < r) throw std::domain_error("hook_partition: need k >= r >= 1");
    std::vector<long> parts{k - r + 1};
    parts.insert(parts.end(), r - 1, 1);
    return Partition(std::move(parts));
}

}  // namespace demazure
