#pragma once

// Permutation-tuple presentation of branched covers of a genus-g curve, and
// the finite group computations that decide connectivity, Galois-ness and
// genuine ramification.
//
// Genuine ramification. Let G be the monodromy group acting on the fibre
// {1..d}, H = Stab(1) the image of pi_1(Y) and N the normal closure of the
// branch cycles in G. The cover is genuinely ramified iff pi_1(Y) -> pi_1(X)
// is onto, which in the finite quotient reads H.N = G. Since H fixes 1, the
// orbit of 1 under NH equals the orbit of 1 under N, so H.N = G iff N acts
// transitively. The N-orbits are blocks for G; the induced action on them is
// the maximal etale subcover X^ -> X, whose degree is the number of orbits.

#include "orbifold/orbicore.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbifold {

/// A bijection of {0..d-1}; rendered 1-based in cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// Parses "(1 2)(3 4)" (1-based). "()" or "" is the identity.
    static Permutation parse_cycles(std::string_view text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    /// Composition with the right factor applied first: (p * q)(i) = p(q(i)).
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Cycle lengths, descending, fixed points included.
    std::vector<int> cycle_type() const;
    std::string to_cycles() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

struct BranchCycle {
    PointLabel point;
    Permutation sigma;

    bool operator==(const BranchCycle&) const = default;
};

class MonodromyDatum {
public:
    /// Validates degrees, the product relation
    /// prod [alpha_i, beta_i] * prod sigma_j = 1, non-identity branch cycles and
    /// tameness of every cycle length.
    static MonodromyDatum create(int base_genus, int degree, int characteristic,
                                 std::vector<std::pair<Permutation, Permutation>> handles,
                                 std::vector<BranchCycle> branch_cycles);

    int base_genus() const { return base_genus_; }
    int degree() const { return degree_; }
    int characteristic() const { return characteristic_; }
    const std::vector<std::pair<Permutation, Permutation>>& handles() const { return handles_; }
    const std::vector<BranchCycle>& branch_cycles() const { return branch_cycles_; }

    /// Handle permutations followed by branch cycles.
    std::vector<Permutation> generators() const;

private:
    int base_genus_ = 0;
    int degree_ = 1;
    int characteristic_ = 0;
    std::vector<std::pair<Permutation, Permutation>> handles_;
    std::vector<BranchCycle> branch_cycles_;
};

inline constexpr std::uint64_t kDefaultGroupCap = 10'000'000;
inline constexpr int kDefaultOracleDegree = 8;

/// Orbits of the subgroup generated by gens, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree);

/// All elements of <gens>, by closure. Throws CapExceeded past cap elements.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& gens, int degree,
                                         std::uint64_t cap = kDefaultGroupCap);

bool is_connected(const MonodromyDatum& M);

RamificationProfile ramification_profile_of(const MonodromyDatum& M,
                                            std::uint64_t cap = kDefaultGroupCap);

std::uint64_t group_order(const MonodromyDatum& M, std::uint64_t cap = kDefaultGroupCap);

/// Regular action: |G| = d.
bool is_galois(const MonodromyDatum& M, std::uint64_t cap = kDefaultGroupCap);

/// G-conjugates of all branch cycles; they generate N.
std::vector<Permutation> normal_closure_generators(const MonodromyDatum& M);

/// Orbits (0-based) of the normal closure N of the branch cycles.
std::vector<std::vector<int>> normal_closure_orbits(const MonodromyDatum& M);

bool is_genuinely_ramified(const MonodromyDatum& M);

struct EtaleSubcover {
    int degree = 1;                // number of N-orbits = deg(X^ -> X)
    int residual_degree = 1;       // deg(Y -> X^)
    MonodromyDatum block_datum;    // induced action on the N-orbits, etale
    std::vector<std::vector<int>> blocks;
};

EtaleSubcover max_etale_subcover(const MonodromyDatum& M);

/// Brute force: enumerate G, take Schreier generators of Stab(1) and every
/// G-conjugate of every branch cycle, close <H u N> and compare with |G|.
bool oracle_is_genuinely_ramified(const MonodromyDatum& M,
                                  int max_degree = kDefaultOracleDegree,
                                  std::uint64_t cap = kDefaultGroupCap);

} // namespace orbifold
