#include "hhint/symmetric.hpp"

#include <stdexcept>

namespace hhint {

namespace {

// Expand the current weakly decreasing part list into exponent form.
Partition to_exponent_form(const std::vector<int>& expanded) {
    Partition out;
    size_t i = 0;
    while (i < expanded.size()) {
        size_t j = i;
        while (j < expanded.size() && expanded[j] == expanded[i]) ++j;
        out.parts.push_back(expanded[i]);
        out.mults.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

void emit(std::vector<int>& prefix, int remaining, int cap, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(to_exponent_form(prefix));
        return;
    }
    // Largest next part first gives reverse-lexicographic order overall.
    for (int part = cap < remaining ? cap : remaining; part >= 1; --part) {
        prefix.push_back(part);
        emit(prefix, remaining - part, part, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit(prefix, n, n, out);
    return out;
}

int64_t hh1_contribution(const Partition& lambda, uint32_t p) {
    int64_t total = 0;
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        if (lambda.parts[i] % static_cast<int>(p) == 0) ++total;
        if (p == 2 && lambda.mults[i] >= 2) ++total;
    }
    return total;
}

int64_t hh1_dim_sym(int n, uint32_t p) {
    int64_t total = 0;
    for (const Partition& lambda : partitions(n)) total += hh1_contribution(lambda, p);
    return total;
}

std::vector<int64_t> series_coeffs(uint32_t p, int nmax) {
    if (nmax < 0) throw std::invalid_argument("series_coeffs: negative length");
    const size_t len = static_cast<size_t>(nmax) + 1;
    // prod_{k=1..nmax} 1/(1 - t^k): the classical partition-number recurrence.
    std::vector<int64_t> prod(len, 0);
    prod[0] = 1;
    for (int k = 1; k <= nmax; ++k)
        for (int i = k; i <= nmax; ++i)
            prod[static_cast<size_t>(i)] += prod[static_cast<size_t>(i - k)];
    // numerator t^p (1 + t^p + t^{2p} + ...), doubled when p = 2
    std::vector<int64_t> out(len, 0);
    for (int i = 0; i <= nmax; ++i) {
        int64_t acc = 0;
        for (int j = static_cast<int>(p); j <= i; j += static_cast<int>(p))
            acc += prod[static_cast<size_t>(i - j)];
        out[static_cast<size_t>(i)] = p == 2 ? 2 * acc : acc;
    }
    return out;
}

LemmaCounts lemma_counts(int n, uint32_t p) {
    LemmaCounts out;
    for (const Partition& lambda : partitions(n))
        for (size_t i = 0; i < lambda.parts.size(); ++i) {
            if (lambda.parts[i] % static_cast<int>(p) == 0) ++out.without_mult;
            if (lambda.parts[i] == static_cast<int>(p)) out.with_mult += lambda.mults[i];
        }
    return out;
}

int64_t singular_count(int n, uint32_t p) {
    int64_t total = 0;
    for (const Partition& lambda : partitions(n))
        for (size_t i = 0; i < lambda.parts.size(); ++i)
            if (lambda.parts[i] % static_cast<int>(p) == 0) {
                ++total;
                break;
            }
    return total;
}

}  // namespace hhint
