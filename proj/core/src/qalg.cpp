#include "demazure/qalg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace demazure {

namespace {
std::mutex g_qbinom_mutex;
std::map<std::pair<int, int>, QPoly> g_qbinom_memo;
const QPoly g_zero;
const QPoly g_one(1);

const QPoly& qbinom_locked(int n, int r) {
    if (r == 0 || r == n) return g_one;
    auto key = std::make_pair(n, r);
    auto it = g_qbinom_memo.find(key);
    if (it != g_qbinom_memo.end()) return it->second;
    QPoly v = qbinom_locked(n - 1, r).shifted(r) + qbinom_locked(n - 1, r - 1);
    return g_qbinom_memo.emplace(key, std::move(v)).first->second;
}
}  // namespace

const QPoly& qbinom(int n, int r) {
    if (n < 0 || r < 0 || n - r < 0) return g_zero;
    std::lock_guard<std::mutex> lock(g_qbinom_mutex);
    return qbinom_locked(n, r);
}

QPoly qbinom_by_division(int n, int r) {
    if (n < 0 || r < 0 || n - r < 0) return {};
    QPoly num(1), den(1);
    for (int j = 0; j < r; ++j) {
        // (1 - q^{n-j}) / (1 - q^{j+1})
        num *= QPoly(1) - QPoly::monomial(n - j);
        den *= QPoly(1) - QPoly::monomial(j + 1);
    }
    return num.divide_exact(den);
}

QPoly qpochhammer(int n) {
    if (n < 0) throw std::domain_error("qpochhammer: negative n");
    QPoly p(1);
    for (int j = 1; j <= n; ++j) p *= QPoly(1) - QPoly::monomial(j);
    return p;
}

}  // namespace demazure
