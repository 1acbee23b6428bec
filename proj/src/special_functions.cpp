#include "cvqkd/special_functions.hpp"

#include <array>
#include <string>

#include "cvqkd/errors.hpp"

namespace cvqkd {

namespace {

std::array<double, kMaxFactorialOrder + 1> build_factorials() {
    std::array<double, kMaxFactorialOrder + 1> table{};
    table[0] = 1.0;
    for (int n = 1; n <= kMaxFactorialOrder; ++n) {
        table[n] = table[n - 1] * static_cast<double>(n);
    }
    return table;
}

const std::array<double, kMaxFactorialOrder + 1> kFactorials = build_factorials();

}  // namespace

double factorial(int n) {
    if (n < 0 || n > kMaxFactorialOrder) {
        throw DomainError("factorial: order " + std::to_string(n) +
                          " outside table bound [0, " +
                          std::to_string(kMaxFactorialOrder) + "]");
    }
    return kFactorials[static_cast<std::size_t>(n)];
}

double laguerre(int n, double x) {
    if (n < 0) {
        throw DomainError("laguerre: negative order");
    }
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next =
            ((2.0 * k + 1.0 - x) * cur - static_cast<double>(k) * prev) /
            static_cast<double>(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> bivariate_hermite(int p, int q, std::complex<double> e1,
                                       std::complex<double> e2) {
    if (p < 0 || q < 0) {
        throw DomainError("bivariate_hermite: negative index");
    }
    const double pf = factorial(p);
    const double qf = factorial(q);
    const int rmax = p < q ? p : q;
    std::complex<double> sum{0.0, 0.0};
    for (int r = rmax; r >= 0; --r) {
        const double coeff = pf * qf /
                             (factorial(r) * factorial(p - r) * factorial(q - r));
        std::complex<double> term{coeff, 0.0};
        for (int j = 0; j < p - r; ++j) term *= e1;
        for (int j = 0; j < q - r; ++j) term *= e2;
        sum += (r % 2 == 0) ? term : -term;
    }
    return sum;
}

double hermite_phys(int n, double x) {
    if (n < 0) {
        throw DomainError("hermite_phys: negative order");
    }
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace cvqkd
