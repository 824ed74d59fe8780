#include "zident/binomial.hpp"

#include <mutex>
#include <vector>

namespace zident {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Int factorial(unsigned long k) {
    Int r;
    mpz_fac_ui(r.backend().data(), k);
    return r;
}

namespace {
std::mutex table_mutex;
std::vector<Int>& table() {
    static std::vector<Int> t{Int(1)};
    return t;
}
} // namespace

Int central_binomial(long k) {
    if (k < 0)
        throw DomainError("central_binomial: negative index");
    std::lock_guard lock(table_mutex);
    auto& t = table();
    while (static_cast<long>(t.size()) <= k) {
        unsigned long m = t.size() - 1; // extend from C(2m, m)
        Int next = t.back() * Int(2 * (2 * m + 1));
        Int q, r;
        mpz_fdiv_qr_ui(q.backend().data(), r.backend().data(),
                       next.backend().data(), m + 1);
        if (r != 0)
            throw std::logic_error("central_binomial: inexact update step");
        t.push_back(q);
    }
    return t[static_cast<std::size_t>(k)];
}

} // namespace zident
