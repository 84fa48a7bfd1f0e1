#include "fuzzymin/algebra.hpp"

#include <algorithm>
#include <set>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

void require_square(const std::vector<std::vector<std::uint32_t>> &table, std::size_t n, const char *what) {
    if (table.size() != n) throw UsageError(std::string(what) + " table must have " + std::to_string(n) + " rows");
    for (const auto &row : table) {
        if (row.size() != n) throw UsageError(std::string(what) + " table rows must have " + std::to_string(n) + " entries");
        for (auto v : row)
            if (v >= n) throw UsageError(std::string(what) + " table entry " + std::to_string(v) + " out of range");
    }
}

template <typename F>
std::vector<std::vector<std::uint32_t>> tabulate(std::size_t n, F f) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<std::uint32_t>(f(i, j));
    return t;
}

} // namespace

Algebra Algebra::godel() { return Algebra(Family::Godel, nullptr); }
Algebra Algebra::product() { return Algebra(Family::Product, nullptr); }
Algebra Algebra::lukasiewicz() { return Algebra(Family::Lukasiewicz, nullptr); }

Algebra Algebra::finite_chain(ChainTables tables) {
    const std::size_t n = tables.length;
    if (n < 2) throw UsageError("a finite chain needs at least 2 elements");
    require_square(tables.tnorm, n, "tnorm");
    require_square(tables.snorm, n, "snorm");
    require_square(tables.residuum, n, "residuum");
    if (tables.negation.size() != n) throw UsageError("neg table must have " + std::to_string(n) + " entries");
    for (auto v : tables.negation)
        if (v >= n) throw UsageError("neg table entry out of range");
    return Algebra(Family::FiniteChain, std::make_shared<const ChainTables>(std::move(tables)));
}

Algebra Algebra::finite_godel(std::size_t length) {
    const std::size_t top = length - 1;
    ChainTables t;
    t.length = length;
    t.tnorm = tabulate(length, [](auto i, auto j) { return std::min(i, j); });
    t.snorm = tabulate(length, [](auto i, auto j) { return std::max(i, j); });
    t.residuum = tabulate(length, [top](auto i, auto j) { return i <= j ? top : j; });
    t.negation.resize(length);
    for (std::size_t i = 0; i < length; ++i) t.negation[i] = static_cast<std::uint32_t>(i == 0 ? top : 0);
    return finite_chain(std::move(t));
}

Algebra Algebra::finite_lukasiewicz(std::size_t length) {
    const std::size_t top = length - 1;
    ChainTables t;
    t.length = length;
    t.tnorm = tabulate(length, [top](auto i, auto j) { return i + j > top ? i + j - top : 0; });
    t.snorm = tabulate(length, [top](auto i, auto j) { return std::min(top, i + j); });
    t.residuum = tabulate(length, [top](auto i, auto j) { return std::min(top, top - i + j); });
    t.negation.resize(length);
    for (std::size_t i = 0; i < length; ++i) t.negation[i] = static_cast<std::uint32_t>(top - i);
    return finite_chain(std::move(t));
}

std::string Algebra::name() const {
    switch (family_) {
    case Family::Godel: return "godel";
    case Family::Product: return "product";
    case Family::Lukasiewicz: return "lukasiewicz";
    case Family::FiniteChain: return "chain-" + std::to_string(tables_->length);
    }
    return "?";
}

std::size_t Algebra::chain_length() const {
    if (!is_finite()) throw UsageError("algebra " + name() + " is not a finite chain");
    return tables_->length;
}

const ChainTables &Algebra::tables() const {
    if (!is_finite()) throw UsageError("algebra " + name() + " has no operation tables");
    return *tables_;
}

bool Algebra::contains(const Degree &d) const {
    if (!is_finite()) return true;
    mpq_class scaled = d.value() * static_cast<unsigned long>(tables_->length - 1);
    scaled.canonicalize();
    return scaled.get_den() == 1;
}

Degree Algebra::element(std::size_t index) const {
    const std::size_t n = chain_length();
    if (index >= n) throw UsageError("chain element index " + std::to_string(index) + " out of range");
    mpq_class v(static_cast<unsigned long>(index), static_cast<unsigned long>(n - 1));
    v.canonicalize();
    return Degree(std::move(v));
}

std::size_t Algebra::index_of(const Degree &d) const {
    const std::size_t n = chain_length();
    mpq_class scaled = d.value() * static_cast<unsigned long>(n - 1);
    scaled.canonicalize();
    if (scaled.get_den() != 1)
        throw UsageError("degree " + d.to_string() + " is not an element of " + name());
    return scaled.get_num().get_ui();
}

std::vector<Degree> Algebra::carrier() const {
    std::vector<Degree> out;
    for (std::size_t i = 0; i < chain_length(); ++i) out.push_back(element(i));
    return out;
}

void Algebra::require_member(const Degree &d) const {
    if (!contains(d)) throw UsageError("degree " + d.to_string() + " is not an element of " + name());
}

Degree Algebra::tnorm(const Degree &a, const Degree &b) const {
    switch (family_) {
    case Family::Godel: return min_degree(a, b);
    case Family::Product: return Degree(a.value() * b.value());
    case Family::Lukasiewicz: {
        mpq_class s = a.value() + b.value() - 1;
        return sgn(s) > 0 ? Degree(std::move(s)) : Degree();
    }
    case Family::FiniteChain:
        return element(tables_->tnorm[index_of(a)][index_of(b)]);
    }
    return Degree();
}

Degree Algebra::snorm(const Degree &a, const Degree &b) const {
    switch (family_) {
    case Family::Godel: return max_degree(a, b);
    case Family::Product: return Degree(a.value() + b.value() - a.value() * b.value());
    case Family::Lukasiewicz: {
        mpq_class s = a.value() + b.value();
        return s >= 1 ? Degree::one() : Degree(std::move(s));
    }
    case Family::FiniteChain:
        return element(tables_->snorm[index_of(a)][index_of(b)]);
    }
    return Degree();
}

Degree Algebra::residuum(const Degree &a, const Degree &b) const {
    switch (family_) {
    case Family::Godel: return a <= b ? Degree::one() : b;
    case Family::Product: {
        if (a <= b) return Degree::one();
        mpq_class q = b.value() / a.value();
        q.canonicalize();
        return Degree(std::move(q));
    }
    case Family::Lukasiewicz: {
        mpq_class s = 1 - a.value() + b.value();
        return s >= 1 ? Degree::one() : Degree(std::move(s));
    }
    case Family::FiniteChain:
        return element(tables_->residuum[index_of(a)][index_of(b)]);
    }
    return Degree();
}

Degree Algebra::negation(const Degree &a) const {
    switch (family_) {
    case Family::Godel:
    case Family::Product: return a.is_zero() ? Degree::one() : Degree();
    case Family::Lukasiewicz: return Degree(1 - a.value());
    case Family::FiniteChain: return element(tables_->negation[index_of(a)]);
    }
    return Degree();
}

Degree Algebra::baaz(const Degree &a) const {
    require_member(a);
    return a.is_one() ? Degree::one() : Degree();
}

Degree Algebra::big_otimes(std::span<const Degree> values) const {
    Degree acc = Degree::one();
    for (const auto &v : values) acc = tnorm(acc, v);
    return acc;
}

bool operator==(const Algebra &a, const Algebra &b) {
    if (a.family_ != b.family_) return false;
    if (!a.is_finite()) return true;
    if (a.tables_ == b.tables_) return true;
    const auto &x = *a.tables_;
    const auto &y = *b.tables_;
    return x.length == y.length && x.tnorm == y.tnorm && x.snorm == y.snorm && x.residuum == y.residuum &&
           x.negation == y.negation;
}

std::vector<AxiomViolation> check_axioms_at(const Algebra &alg, const Degree &x, const Degree &y, const Degree &z,
                                            const Degree &t) {
    std::vector<AxiomViolation> out;
    auto fail = [&](const char *axiom, std::string witness) { out.push_back({axiom, std::move(witness)}); };
    auto s = [](const Degree &d) { return d.to_string(); };

    if (alg.tnorm(x, y) != alg.tnorm(y, x))
        fail("commutativity", "x=" + s(x) + " y=" + s(y));
    if (alg.tnorm(x, alg.tnorm(y, z)) != alg.tnorm(alg.tnorm(x, y), z))
        fail("associativity", "x=" + s(x) + " y=" + s(y) + " z=" + s(z));
    if (alg.tnorm(x, Degree::one()) != x)
        fail("identity", "x=" + s(x));
    if (x <= z && y <= t && alg.tnorm(x, y) > alg.tnorm(z, t))
        fail("tnorm-monotonicity", "x=" + s(x) + " y=" + s(y) + " z=" + s(z) + " t=" + s(t));
    if (z <= x && y <= t && alg.residuum(x, y) > alg.residuum(z, t))
        fail("residuum-monotonicity", "x=" + s(x) + " y=" + s(y) + " z=" + s(z) + " t=" + s(t));
    if (alg.residuum(x, y).is_one() != (x <= y))
        fail("residuum-order", "x=" + s(x) + " y=" + s(y));
    return out;
}

std::vector<AxiomViolation> check_axioms(const Algebra &alg) {
    if (!alg.is_finite()) return {};
    const auto elems = alg.carrier();
    std::vector<AxiomViolation> out;
    std::set<std::string> seen;
    for (const auto &x : elems)
        for (const auto &y : elems)
            for (const auto &z : elems)
                for (const auto &t : elems)
                    for (auto &v : check_axioms_at(alg, x, y, z, t))
                        if (seen.insert(v.axiom).second) out.push_back(std::move(v));
    return out;
}

bool supports_tbox_minimality(const Algebra &alg) {
    if (!alg.is_finite()) return true;
    const auto elems = alg.carrier();
    for (const auto &x : elems)
        if (alg.residuum(Degree::one(), x) != x) return false;
    for (const auto &y : elems)
        for (const auto &z : elems)
            if (alg.snorm(y, z).is_zero() != (y.is_zero() && z.is_zero())) return false;
    return true;
}

} // namespace fuzzymin
