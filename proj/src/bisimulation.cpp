#include "fuzzymin/bisimulation.hpp"

#include <algorithm>
#include <set>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

struct Arc {
    Element to;
    const Degree *degree;
};

// Out-arcs per basic role: role names first, then their inverses.
using Adjacency = std::vector<std::vector<std::vector<Arc>>>;

Adjacency basic_roles(const Interpretation &i, const std::vector<std::string> &role_order, bool inverse) {
    Adjacency adj;
    for (const auto &name : role_order) {
        const auto ext = i.role_extension(*i.find_role(name));
        std::vector<std::vector<Arc>> fwd(i.size());
        for (const auto &inst : ext) fwd[inst.from].push_back({inst.to, &inst.degree});
        adj.push_back(std::move(fwd));
        if (inverse) {
            std::vector<std::vector<Arc>> bwd(i.size());
            for (const auto &inst : ext) bwd[inst.to].push_back({inst.from, &inst.degree});
            adj.push_back(std::move(bwd));
        }
    }
    return adj;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

class Checker {
public:
    Checker(const Interpretation &i1, const Interpretation &i2, FeatureSet phi) : i1_(i1), i2_(i2), phi_(phi) {
        if (!(i1.algebra() == i2.algebra())) throw UsageError("interpretations use different algebras");
        if (sorted(i1.concept_names()) != sorted(i2.concept_names()))
            throw UsageError("interpretations have different concept names");
        if (sorted(i1.role_names()) != sorted(i2.role_names()))
            throw UsageError("interpretations have different role names");
        if (i1.individual_names() != i2.individual_names())
            throw UsageError("interpretations have different individual names");
        const auto roles = sorted(i1.role_names());
        adj1_ = basic_roles(i1, roles, phi.has(Feature::Inverse));
        adj2_ = basic_roles(i2, roles, phi.has(Feature::Inverse));
        for (const auto &name : i1.concept_names())
            concepts_.emplace_back(*i1.find_concept(name), *i2.find_concept(name));
        related_.assign(i1.size() * i2.size(), 0);
    }

    void load(const Relation &z) {
        std::fill(related_.begin(), related_.end(), 0);
        for (auto [x, y] : z) {
            if (x >= i1_.size() || y >= i2_.size()) throw UsageError("relation references an unknown element");
            related_[x * i2_.size() + y] = 1;
        }
    }

    bool related(Element x, Element y) const { return related_[x * i2_.size() + y] != 0; }
    void unrelate(Element x, Element y) { related_[x * i2_.size() + y] = 0; }

    std::optional<std::string> labels(Element x, Element y) const {
        for (auto [c1, c2] : concepts_) {
            const auto &d1 = i1_.concept_extension(c1)[x];
            const auto &d2 = i2_.concept_extension(c2)[y];
            if (d1 != d2)
                return i1_.concept_names()[c1] + " is " + d1.to_decimal_string() + " vs " + d2.to_decimal_string();
        }
        return std::nullopt;
    }

    std::optional<std::string> nominals(Element x, Element y) const {
        for (const auto &a : i1_.individual_names())
            if ((i1_.individual(a) == x) != (i2_.individual(a) == y)) return "individual " + a + " is not matched";
        return std::nullopt;
    }

    // Every arc x -R-> u with degree d needs y -R-> v with d <= d' and (u, v) related.
    std::optional<std::string> forth(Element x, Element y) const {
        for (std::size_t r = 0; r < adj1_.size(); ++r)
            for (const auto &a : adj1_[r][x]) {
                const auto &out = adj2_[r][y];
                const bool matched = std::any_of(out.begin(), out.end(), [&](const Arc &b) {
                    return *a.degree <= *b.degree && related(a.to, b.to);
                });
                if (!matched) return "no match for the arc to " + i1_.element_name(a.to);
            }
        return std::nullopt;
    }

    std::optional<std::string> back(Element x, Element y) const {
        for (std::size_t r = 0; r < adj2_.size(); ++r)
            for (const auto &b : adj2_[r][y]) {
                const auto &out = adj1_[r][x];
                const bool matched = std::any_of(out.begin(), out.end(), [&](const Arc &a) {
                    return *b.degree <= *a.degree && related(a.to, b.to);
                });
                if (!matched) return "no match for the arc to " + i2_.element_name(b.to);
            }
        return std::nullopt;
    }

    std::optional<Element> untouched_left() const {
        for (Element x = 0; x < i1_.size(); ++x) {
            bool any = false;
            for (Element y = 0; y < i2_.size() && !any; ++y) any = related(x, y);
            if (!any) return x;
        }
        return std::nullopt;
    }

    std::optional<Element> untouched_right() const {
        for (Element y = 0; y < i2_.size(); ++y) {
            bool any = false;
            for (Element x = 0; x < i1_.size() && !any; ++x) any = related(x, y);
            if (!any) return y;
        }
        return std::nullopt;
    }

private:
    const Interpretation &i1_;
    const Interpretation &i2_;
    FeatureSet phi_;
    Adjacency adj1_, adj2_;
    std::vector<std::pair<std::size_t, std::size_t>> concepts_;
    std::vector<char> related_;
};

} // namespace

void normalize(Relation &z) {
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
}

const char *condition_name(BisimCondition c) {
    switch (c) {
    case BisimCondition::LabelAgreement: return "label agreement";
    case BisimCondition::Forth: return "forth";
    case BisimCondition::Back: return "back";
    case BisimCondition::NominalAgreement: return "nominal agreement";
    case BisimCondition::Totality: return "totality";
    case BisimCondition::Surjectivity: return "surjectivity";
    }
    return "?";
}

BisimulationReport is_bisimulation(const Interpretation &i1, const Interpretation &i2, const Relation &z,
                                   FeatureSet phi) {
    Checker check(i1, i2, phi);
    check.load(z);
    Relation pairs = z;
    normalize(pairs);

    BisimulationReport report;
    auto fail = [&](BisimCondition c, std::optional<Element> x, std::optional<Element> y, std::string detail) {
        report.holds = false;
        report.violated = c;
        report.left = x;
        report.right = y;
        report.detail = std::move(detail);
        return report;
    };

    using Test = std::optional<std::string> (Checker::*)(Element, Element) const;
    std::vector<std::pair<BisimCondition, Test>> per_pair = {{BisimCondition::LabelAgreement, &Checker::labels},
                                                             {BisimCondition::Forth, &Checker::forth},
                                                             {BisimCondition::Back, &Checker::back}};
    if (phi.has(Feature::Nominal)) per_pair.emplace_back(BisimCondition::NominalAgreement, &Checker::nominals);

    for (auto [condition, test] : per_pair)
        for (auto [x, y] : pairs)
            if (auto why = (check.*test)(x, y)) return fail(condition, x, y, *why);

    if (phi.has(Feature::Universal) && !pairs.empty()) {
        if (auto x = check.untouched_left()) return fail(BisimCondition::Totality, x, std::nullopt, "unrelated element");
        if (auto y = check.untouched_right())
            return fail(BisimCondition::Surjectivity, std::nullopt, y, "unrelated element");
    }
    return report;
}

Relation largest_bisimulation(const Interpretation &i1, const Interpretation &i2, FeatureSet phi) {
    Checker check(i1, i2, phi);
    Relation z;
    for (Element x = 0; x < i1.size(); ++x)
        for (Element y = 0; y < i2.size(); ++y)
            if (!check.labels(x, y) && !(phi.has(Feature::Nominal) && check.nominals(x, y))) z.emplace_back(x, y);
    check.load(z);

    for (bool changed = true; changed;) {
        changed = false;
        Relation kept;
        kept.reserve(z.size());
        for (auto [x, y] : z) {
            if (check.forth(x, y) || check.back(x, y)) {
                check.unrelate(x, y);
                changed = true;
            } else {
                kept.emplace_back(x, y);
            }
        }
        z = std::move(kept);
    }

    if (phi.has(Feature::Universal) && !z.empty() && (check.untouched_left() || check.untouched_right())) z.clear();
    return z;
}

bool are_bisimilar(const Interpretation &i1, const Interpretation &i2, FeatureSet phi) {
    if (i1.individual_names().empty())
        throw UsageError("bisimilarity of interpretations needs at least one named individual");
    const Relation z = largest_bisimulation(i1, i2, phi);
    return std::all_of(i1.individual_names().begin(), i1.individual_names().end(), [&](const std::string &a) {
        return std::binary_search(z.begin(), z.end(), std::pair{i1.individual(a), i2.individual(a)});
    });
}

} // namespace fuzzymin
