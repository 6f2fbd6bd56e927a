#pragma once

#include <cstdint>
#include <vector>

#include "amub/errors.hpp"

namespace amub {

// d x d grid with entries in {1,...,d}; every row and column is a
// permutation. Validated at construction.
class LatinSquare {
public:
    LatinSquare(int order, std::vector<int> grid); // row-major

    int order() const { return order_; }
    int at(int row, int col) const { return grid_[static_cast<std::size_t>(row) * order_ + col]; }
    const std::vector<int>& grid() const { return grid_; }

private:
    int order_ = 0;
    std::vector<int> grid_;
};

// True iff superimposing the two squares yields all d^2 ordered pairs.
bool mols_check(const LatinSquare& a, const LatinSquare& b);

// The q-1 squares L_a(i,j) = a*i + j over F_q, pairwise orthogonal.
std::vector<LatinSquare> mols_prime_power(long long q);

// Product family on index pairs; output size = min of the input sizes,
// entries flattened as (e1 - 1) * d2 + e2.
std::vector<LatinSquare> mols_macneish(const std::vector<LatinSquare>& fam1,
                                       const std::vector<LatinSquare>& fam2);

// min over prime-power factors of (p^e - 1), with the known overrides:
// 1 for d in {2, 6}, at least 2 for every other d == 2 (mod 4).
long long mols_lower_bound(long long d);

// +-1 matrix with H H^T = d I. Entries are validated always; the full
// integer product check runs at construction up to kAutoCheckOrder and is
// available explicitly through check() at any order.
class HadamardMatrix {
public:
    static constexpr int kAutoCheckOrder = 1024;

    HadamardMatrix(int order, std::vector<std::int8_t> entries); // row-major

    int order() const { return order_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * order_ + col]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }

    // Exact integer verification of H H^T = d I.
    bool check() const;

private:
    int order_ = 0;
    std::vector<std::int8_t> entries_;
};

// k-fold tensor power of the order-2 matrix [[1,1],[1,-1]]; order 2^k.
HadamardMatrix hadamard_sylvester(int k);

// Type-I quadratic-residue construction, order q+1, for prime q == 3 (mod 4).
HadamardMatrix hadamard_paley(long long q);

// Criterion for n = inputs.size() + 1 pairwise-unbiased real bases: every
// scaled pairwise product H_i H_j^T / sqrt(d) must again be a Hadamard
// matrix. Vacuously true for a single input.
bool real_mub_hadamard_criterion(const std::vector<HadamardMatrix>& mats);

} // namespace amub
