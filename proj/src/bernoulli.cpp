#include "zident/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "zident/binomial.hpp"

namespace zident {

namespace {
std::mutex table_mutex;
std::vector<Rat>& table() {
    static std::vector<Rat> t{Rat(1)};
    return t;
}
} // namespace

Rat bernoulli(int n) {
    if (n < 0)
        throw DomainError("bernoulli: negative index");
    std::lock_guard lock(table_mutex);
    auto& t = table();
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    while (static_cast<int>(t.size()) <= n) {
        unsigned long m = t.size();
        Rat s(0);
        for (unsigned long j = 0; j < m; ++j)
            s += Rat(binomial(m + 1, j)) * t[j];
        t.push_back(-s / Rat(Int(m + 1)));
    }
    return t[static_cast<std::size_t>(n)];
}

} // namespace zident
