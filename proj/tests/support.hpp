#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fuzzymin/degree.hpp"
#include "fuzzymin/interpretation.hpp"
#include "fuzzymin/io.hpp"

namespace fuzzymin::testing {

inline Degree deg(const char *text) { return Degree::parse(text); }

inline std::string data_path(const std::string &relative) { return std::string(FUZZYMIN_DATA_DIR) + "/" + relative; }

inline Interpretation load_interpretation(const std::string &relative, const Algebra &alg = Algebra::godel()) {
    return io::interpretation_from_json(io::read_json(data_path(relative)), alg);
}

inline FuzzyGraph load_graph(const std::string &relative, const Algebra &alg = Algebra::godel()) {
    return io::graph_from_json(io::read_json(data_path(relative)), alg);
}

/// Brute force over all bijections; small domains only.
inline bool is_isomorphic(const Interpretation &a, const Interpretation &b) {
    if (a.size() != b.size() || a.individual_names() != b.individual_names()) return false;
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(a.concept_names()) != sorted(b.concept_names()) || sorted(a.role_names()) != sorted(b.role_names()))
        return false;

    std::vector<Element> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto &name : a.individual_names()) ok = ok && perm[a.individual(name)] == b.individual(name);
        for (std::size_t c = 0; ok && c < a.concept_names().size(); ++c) {
            const auto ea = a.concept_extension(c);
            const auto eb = b.concept_extension(*b.find_concept(a.concept_names()[c]));
            for (Element x = 0; ok && x < a.size(); ++x) ok = ea[x] == eb[perm[x]];
        }
        for (std::size_t r = 0; ok && r < a.role_names().size(); ++r) {
            const auto ra = a.role_extension(r);
            const auto rb = b.role_extension(*b.find_role(a.role_names()[r]));
            ok = ra.size() == rb.size();
            for (std::size_t k = 0; ok && k < ra.size(); ++k) {
                const auto it = std::find_if(rb.begin(), rb.end(), [&](const RoleInstance &inst) {
                    return inst.from == perm[ra[k].from] && inst.to == perm[ra[k].to];
                });
                ok = it != rb.end() && it->degree == ra[k].degree;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace fuzzymin::testing
