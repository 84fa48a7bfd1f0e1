#include "fuzzymin/interpretation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

constexpr Feature kAllFeatures[] = {Feature::Baaz, Feature::Composition, Feature::Union,     Feature::Star,
                                    Feature::Test, Feature::Inverse,     Feature::Universal, Feature::Nominal};

} // namespace

const char *feature_name(Feature f) {
    switch (f) {
    case Feature::Baaz: return "baaz";
    case Feature::Composition: return "comp";
    case Feature::Union: return "union";
    case Feature::Star: return "star";
    case Feature::Test: return "test";
    case Feature::Inverse: return "inverse";
    case Feature::Universal: return "universal";
    case Feature::Nominal: return "nominal";
    }
    return "?";
}

FeatureSet FeatureSet::from_names(std::span<const std::string> names) {
    FeatureSet s;
    bool saw_baaz = false;
    for (const auto &name : names) {
        auto it = std::find_if(std::begin(kAllFeatures), std::end(kAllFeatures),
                               [&](Feature f) { return name == feature_name(f); });
        if (it == std::end(kAllFeatures)) throw UsageError("unknown feature '" + name + "'");
        saw_baaz |= *it == Feature::Baaz;
        s = s.with(*it);
    }
    if (!saw_baaz) throw UsageError("feature list must include \"baaz\"");
    return s;
}

FeatureSet FeatureSet::parse_list(const std::string &comma_separated) {
    std::vector<std::string> names;
    std::stringstream in(comma_separated);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) names.push_back(item);
    }
    return from_names(names);
}

std::vector<std::string> FeatureSet::names() const {
    std::vector<std::string> out;
    for (auto f : kAllFeatures)
        if (has(f)) out.emplace_back(feature_name(f));
    return out;
}

Element InterpretationBuilder::add_element(std::string name) {
    auto [it, inserted] = element_index_.emplace(name, static_cast<Element>(elements_.size()));
    if (!inserted) throw UsageError("duplicate domain element '" + name + "'");
    elements_.push_back(std::move(name));
    return it->second;
}

void InterpretationBuilder::add_individual(std::string name, Element e) {
    if (e >= elements_.size()) throw UsageError("individual '" + name + "' maps outside the domain");
    for (const auto &[existing, _] : individuals_)
        if (existing == name) throw UsageError("duplicate individual '" + name + "'");
    individuals_.emplace_back(std::move(name), e);
}

std::size_t InterpretationBuilder::add_concept_name(std::string name) {
    if (std::find(concept_names_.begin(), concept_names_.end(), name) != concept_names_.end())
        throw UsageError("duplicate concept name '" + name + "'");
    concept_names_.push_back(std::move(name));
    concepts_.emplace_back();
    return concept_names_.size() - 1;
}

std::size_t InterpretationBuilder::add_role_name(std::string name) {
    if (std::find(role_names_.begin(), role_names_.end(), name) != role_names_.end())
        throw UsageError("duplicate role name '" + name + "'");
    role_names_.push_back(std::move(name));
    roles_.emplace_back();
    return role_names_.size() - 1;
}

void InterpretationBuilder::set_concept(std::size_t concept_name, Element e, Degree d) {
    if (concept_name >= concepts_.size()) throw UsageError("unknown concept name id");
    if (e >= elements_.size()) throw UsageError("concept assignment references an unknown element");
    if (!algebra_.contains(d)) throw UsageError("degree " + d.to_string() + " is not an element of " + algebra_.name());
    concepts_[concept_name].emplace_back(e, std::move(d));
}

void InterpretationBuilder::add_role_instance(std::size_t role_name, Element from, Element to, Degree d) {
    if (role_name >= roles_.size()) throw UsageError("unknown role name id");
    if (from >= elements_.size() || to >= elements_.size())
        throw UsageError("role instance references an unknown element");
    if (!algebra_.contains(d)) throw UsageError("degree " + d.to_string() + " is not an element of " + algebra_.name());
    if (d.is_zero()) return;
    roles_[role_name].push_back(RoleInstance{from, to, std::move(d)});
}

Element InterpretationBuilder::element(const std::string &name) const {
    auto it = element_index_.find(name);
    if (it == element_index_.end()) throw UsageError("unknown domain element '" + name + "'");
    return it->second;
}

std::size_t InterpretationBuilder::concept_name(const std::string &name) const {
    auto it = std::find(concept_names_.begin(), concept_names_.end(), name);
    if (it == concept_names_.end()) throw UsageError("unknown concept name '" + name + "'");
    return static_cast<std::size_t>(it - concept_names_.begin());
}

std::size_t InterpretationBuilder::role_name(const std::string &name) const {
    auto it = std::find(role_names_.begin(), role_names_.end(), name);
    if (it == role_names_.end()) throw UsageError("unknown role name '" + name + "'");
    return static_cast<std::size_t>(it - role_names_.begin());
}

Interpretation InterpretationBuilder::build() && {
    if (elements_.empty()) throw UsageError("interpretation domain must be non-empty");
    Interpretation out(std::move(algebra_));
    const std::size_t n = elements_.size();

    for (std::size_t c = 0; c < concepts_.size(); ++c) {
        std::vector<Degree> dense(n);
        std::vector<char> seen(n, 0);
        for (auto &[e, d] : concepts_[c]) {
            if (seen[e]) throw UsageError("concept '" + concept_names_[c] + "' assigned twice at '" + elements_[e] + "'");
            seen[e] = 1;
            dense[e] = std::move(d);
        }
        out.concepts_.push_back(std::move(dense));
    }
    for (std::size_t r = 0; r < roles_.size(); ++r) {
        auto &inst = roles_[r];
        std::sort(inst.begin(), inst.end(),
                  [](const RoleInstance &a, const RoleInstance &b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
        for (std::size_t i = 1; i < inst.size(); ++i)
            if (inst[i].from == inst[i - 1].from && inst[i].to == inst[i - 1].to)
                throw UsageError("role '" + role_names_[r] + "' has two instances on (" + elements_[inst[i].from] + ", " +
                                 elements_[inst[i].to] + ")");
        out.roles_.push_back(std::move(inst));
    }

    std::sort(individuals_.begin(), individuals_.end());
    for (auto &[name, e] : individuals_) {
        out.individual_names_.push_back(name);
        out.individual_elements_.push_back(e);
    }
    out.element_names_ = std::move(elements_);
    out.element_index_ = std::move(element_index_);
    out.concept_names_ = std::move(concept_names_);
    out.role_names_ = std::move(role_names_);
    return out;
}

Element Interpretation::element(const std::string &name) const {
    auto it = element_index_.find(name);
    if (it == element_index_.end()) throw UsageError("unknown domain element '" + name + "'");
    return it->second;
}

std::optional<Element> Interpretation::find_element(const std::string &name) const {
    auto it = element_index_.find(name);
    if (it == element_index_.end()) return std::nullopt;
    return it->second;
}

Element Interpretation::individual(const std::string &name) const {
    auto it = std::lower_bound(individual_names_.begin(), individual_names_.end(), name);
    if (it == individual_names_.end() || *it != name) throw UsageError("unknown individual '" + name + "'");
    return individual_elements_[static_cast<std::size_t>(it - individual_names_.begin())];
}

bool Interpretation::has_individual(const std::string &name) const {
    return std::binary_search(individual_names_.begin(), individual_names_.end(), name);
}

std::optional<std::size_t> Interpretation::find_concept(const std::string &name) const {
    auto it = std::find(concept_names_.begin(), concept_names_.end(), name);
    if (it == concept_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - concept_names_.begin());
}

std::optional<std::size_t> Interpretation::find_role(const std::string &name) const {
    auto it = std::find(role_names_.begin(), role_names_.end(), name);
    if (it == role_names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - role_names_.begin());
}

std::size_t Interpretation::role_instance_count() const {
    return std::accumulate(roles_.begin(), roles_.end(), std::size_t{0},
                           [](std::size_t acc, const auto &r) { return acc + r.size(); });
}

} // namespace fuzzymin
