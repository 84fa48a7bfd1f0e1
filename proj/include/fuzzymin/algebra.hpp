#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fuzzymin/degree.hpp"

namespace fuzzymin {

enum class Family { Godel, Product, Lukasiewicz, FiniteChain };

/// Operation tables of a finite linear lattice 0 = e_0 < e_1 < ... < e_{N-1} = 1.
/// Entries are element indices.
struct ChainTables {
    std::size_t length = 0;
    std::vector<std::vector<std::uint32_t>> tnorm;
    std::vector<std::vector<std::uint32_t>> snorm;
    std::vector<std::vector<std::uint32_t>> residuum;
    std::vector<std::uint32_t> negation;
};

/// An algebra of fuzzy truth values over a linear lattice.
///
/// The three continuous t-norm families work on all rationals in [0,1]. A
/// finite chain of length N works on the N degrees k/(N-1); passing any other
/// degree to its operations is a usage error. The Baaz projection is fixed for
/// every backend and never read from a table.
///
/// Values are cheap to copy and immutable.
class Algebra {
public:
    static Algebra godel();
    static Algebra product();
    static Algebra lukasiewicz();
    /// Validates table shapes and index ranges only; use check_axioms for the laws.
    static Algebra finite_chain(ChainTables tables);
    /// Gödel operations restricted to an N-chain (min, max, Gödel residuum).
    static Algebra finite_godel(std::size_t length);
    /// Łukasiewicz operations on {0, 1/(N-1), ..., 1}.
    static Algebra finite_lukasiewicz(std::size_t length);

    Family family() const { return family_; }
    std::string name() const;

    bool is_finite() const { return family_ == Family::FiniteChain; }
    std::size_t chain_length() const;
    const ChainTables &tables() const;

    bool contains(const Degree &d) const;
    Degree element(std::size_t index) const;
    std::size_t index_of(const Degree &d) const;
    /// All elements in increasing order; finite chains only.
    std::vector<Degree> carrier() const;

    Degree tnorm(const Degree &a, const Degree &b) const;
    Degree snorm(const Degree &a, const Degree &b) const;
    Degree residuum(const Degree &a, const Degree &b) const;
    Degree negation(const Degree &a) const;
    Degree baaz(const Degree &a) const;
    /// Fold of tnorm with identity 1; the empty fold is 1.
    Degree big_otimes(std::span<const Degree> values) const;

    friend bool operator==(const Algebra &a, const Algebra &b);

private:
    Algebra(Family family, std::shared_ptr<const ChainTables> tables)
        : family_(family), tables_(std::move(tables)) {}

    void require_member(const Degree &d) const;

    Family family_;
    std::shared_ptr<const ChainTables> tables_;
};

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};

/// Exhaustive check of the algebra laws over a finite chain; the three
/// families satisfy them analytically and yield an empty report.
std::vector<AxiomViolation> check_axioms(const Algebra &algebra);

/// Checks every law instance that the four given degrees can witness:
/// commutativity and identity on (x,y), associativity on (x,y,z), the two
/// monotonicity laws with (x,y) against (z,t), and the residuum order law.
std::vector<AxiomViolation> check_axioms_at(const Algebra &algebra, const Degree &x, const Degree &y,
                                            const Degree &z, const Degree &t);

/// True iff (1 => x) = x for all x and (y (+) z = 0 iff y = z = 0).
bool supports_tbox_minimality(const Algebra &algebra);

} // namespace fuzzymin
