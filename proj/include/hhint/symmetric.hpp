#pragma once

#include <cstdint>
#include <vector>

namespace hhint {

// Partition of n in exponent form: parts strictly decreasing, mults[i] the
// multiplicity of parts[i], so n = sum parts[i] * mults[i].
struct Partition {
    std::vector<int> parts;
    std::vector<int> mults;
    int n() const {
        int s = 0;
        for (size_t i = 0; i < parts.size(); ++i) s += parts[i] * mults[i];
        return s;
    }
};

// All partitions of n in reverse-lexicographic order of the expanded part
// lists, from (n) down to (1^n); partitions(0) is the single empty partition.
std::vector<Partition> partitions(int n);

// Dimension contributed by the conjugacy class of cycle type lambda to
// HH^1(kS_n) over F_p: one for every distinct part divisible by p, plus (for
// p = 2 only) one for every distinct part occurring at least twice. These
// are the dimensions of Hom(C_m, k) and Hom(S_e / A_e, k) for the cyclic
// and symmetric factors of the centralizer's abelianization.
int64_t hh1_contribution(const Partition& lambda, uint32_t p);

// dim HH^1(kS_n) over F_p: the sum of the contributions over all partitions.
int64_t hh1_dim_sym(int n, uint32_t p);

// Coefficients 0..nmax of the generating series for hh1_dim_sym(n, p):
//   p >= 3:  t^p / (1 - t^p) * prod_{k >= 1} 1 / (1 - t^k)
//   p  = 2:  2 t^2 / (1 - t^2) * prod_{k >= 1} 1 / (1 - t^k)
// computed by exact integer truncated-polynomial arithmetic.
std::vector<int64_t> series_coeffs(uint32_t p, int nmax);

struct LemmaCounts {
    int64_t without_mult = 0;  // parts divisible by p, counted once per partition
    int64_t with_mult = 0;     // occurrences of the part equal to p
};

// Both counts over all partitions of n; the two agree for every n and p.
LemmaCounts lemma_counts(int n, uint32_t p);

// Number of p-singular partitions of n: those with some part divisible by p.
int64_t singular_count(int n, uint32_t p);

}  // namespace hhint
