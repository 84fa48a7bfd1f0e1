#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzymin/algebra.hpp"
#include "fuzzymin/degree.hpp"

namespace fuzzymin {

enum class Feature : std::uint8_t { Baaz, Composition, Union, Star, Test, Inverse, Universal, Nominal };

/// The enabled language features. The Baaz projection is always present.
class FeatureSet {
public:
    FeatureSet() : bits_(bit(Feature::Baaz)) {}
    FeatureSet(std::initializer_list<Feature> features) : FeatureSet() {
        for (auto f : features) bits_ |= bit(f);
    }

    /// {baaz, comp, union, star, test, universal}: every role constructor
    /// except inverse, and no nominals.
    static FeatureSet psi() {
        return {Feature::Composition, Feature::Union, Feature::Star, Feature::Test, Feature::Universal};
    }
    static FeatureSet all() {
        return {Feature::Composition, Feature::Union, Feature::Star, Feature::Test,
                Feature::Inverse,     Feature::Universal, Feature::Nominal};
    }

    /// Names as used on the command line: baaz comp union star test inverse universal nominal.
    /// Throws UsageError on unknown names or when "baaz" is missing.
    static FeatureSet from_names(std::span<const std::string> names);
    static FeatureSet parse_list(const std::string &comma_separated);
    std::vector<std::string> names() const;

    bool has(Feature f) const { return (bits_ & bit(f)) != 0; }
    FeatureSet with(Feature f) const {
        FeatureSet s = *this;
        s.bits_ |= bit(f);
        return s;
    }
    FeatureSet without(Feature f) const {
        FeatureSet s = *this;
        if (f != Feature::Baaz) s.bits_ &= static_cast<std::uint8_t>(~bit(f));
        return s;
    }

    friend bool operator==(FeatureSet a, FeatureSet b) { return a.bits_ == b.bits_; }

private:
    static constexpr std::uint8_t bit(Feature f) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(f)); }
    std::uint8_t bits_;
};

const char *feature_name(Feature f);

using Element = std::uint32_t;

struct RoleInstance {
    Element from;
    Element to;
    Degree degree;
};

class Interpretation;

class InterpretationBuilder {
public:
    explicit InterpretationBuilder(Algebra algebra) : algebra_(std::move(algebra)) {}

    Element add_element(std::string name);
    void add_individual(std::string name, Element e);
    std::size_t add_concept_name(std::string name);
    std::size_t add_role_name(std::string name);

    /// Degrees must belong to the algebra.
    void set_concept(std::size_t concept_name, Element e, Degree d);
    /// Zero degrees are not stored; a repeated (from, to) pair is a UsageError.
    void add_role_instance(std::size_t role_name, Element from, Element to, Degree d);

    Element element(const std::string &name) const;
    std::size_t concept_name(const std::string &name) const;
    std::size_t role_name(const std::string &name) const;

    Interpretation build() &&;

private:
    Algebra algebra_;
    std::vector<std::string> elements_;
    std::unordered_map<std::string, Element> element_index_;
    std::vector<std::pair<std::string, Element>> individuals_;
    std::vector<std::string> concept_names_;
    std::vector<std::vector<std::pair<Element, Degree>>> concepts_;
    std::vector<std::string> role_names_;
    std::vector<std::vector<RoleInstance>> roles_;
};

/// A finite fuzzy interpretation: named domain elements, individuals,
/// dense concept-name extensions and sparse role-name extensions
/// (only nonzero instances are stored). Immutable once built.
class Interpretation {
public:
    const Algebra &algebra() const { return algebra_; }

    std::size_t size() const { return element_names_.size(); }
    const std::string &element_name(Element e) const { return element_names_.at(e); }
    const std::vector<std::string> &element_names() const { return element_names_; }
    Element element(const std::string &name) const;
    std::optional<Element> find_element(const std::string &name) const;

    /// Individual names sorted by name.
    const std::vector<std::string> &individual_names() const { return individual_names_; }
    Element individual(const std::string &name) const;
    bool has_individual(const std::string &name) const;

    const std::vector<std::string> &concept_names() const { return concept_names_; }
    std::optional<std::size_t> find_concept(const std::string &name) const;
    /// Degrees of concept name `index` per element.
    std::span<const Degree> concept_extension(std::size_t index) const { return concepts_.at(index); }

    const std::vector<std::string> &role_names() const { return role_names_; }
    std::optional<std::size_t> find_role(const std::string &name) const;
    /// Nonzero instances sorted by (from, to).
    std::span<const RoleInstance> role_extension(std::size_t index) const { return roles_.at(index); }

    /// Number of nonzero role-name instances.
    std::size_t role_instance_count() const;

private:
    friend class InterpretationBuilder;
    explicit Interpretation(Algebra algebra) : algebra_(std::move(algebra)) {}

    Algebra algebra_;
    std::vector<std::string> element_names_;
    std::unordered_map<std::string, Element> element_index_;
    std::vector<std::string> individual_names_;
    std::vector<Element> individual_elements_;
    std::vector<std::string> concept_names_;
    std::vector<std::vector<Degree>> concepts_;
    std::vector<std::string> role_names_;
    std::vector<std::vector<RoleInstance>> roles_;
};

} // namespace fuzzymin
