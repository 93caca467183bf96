#include "hankelforge/binomial.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hankelforge {

namespace {

unsigned read_cap() {
    if (const char* env = std::getenv("HANKELFORGE_FACTORIAL_CAP")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 0) return static_cast<unsigned>(v);
    }
    return 512;
}

const std::vector<mpz_class>& factorial_table() {
    static std::once_flag once;
    static std::vector<mpz_class> table;
    std::call_once(once, [] {
        unsigned cap = read_cap();
        table.resize(cap + 1);
        table[0] = 1;
        for (unsigned i = 1; i <= cap; ++i) table[i] = table[i - 1] * i;
    });
    return table;
}

}  // namespace

unsigned factorial_cap() {
    return static_cast<unsigned>(factorial_table().size() - 1);
}

mpz_class factorial(unsigned n) {
    const auto& table = factorial_table();
    if (n < table.size()) return table[n];
    mpz_class r = table.back();
    for (unsigned i = static_cast<unsigned>(table.size()); i <= n; ++i) r *= i;
    return r;
}

mpz_class binom_int(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) throw std::invalid_argument("binom: negative upper index unsupported");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    const auto& table = factorial_table();
    if (static_cast<unsigned long>(n) < table.size()) {
        mpz_class r = table[n] / table[k];
        return r / table[n - k];
    }
    mpz_class r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational binom(long n, long k) {
    return Rational(binom_int(n, k));
}

mpz_class falling(const mpz_class& e, unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= e - i;
    return r;
}

}  // namespace hankelforge
