#include "fuzzymin/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fuzzymin/errors.hpp"

namespace fuzzymin::io {

namespace {

const Json &member(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string name_of(const Json &j, const char *what) {
    if (!j.is_string()) throw UsageError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

// "1e-05", "2.5E-1": exact value of a number in scientific notation.
Degree scientific(const std::string &text) {
    const auto e = text.find_first_of("eE");
    const std::string mantissa = text.substr(0, e);
    long exponent = 0;
    try {
        exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception &) {
        throw ParseError("malformed number '" + text + "'", e + 1);
    }
    const auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits.erase(dot, 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed number '" + text + "'", 0);
    mpz_class num(digits), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    if (q > 1) throw ParseError("degree '" + text + "' exceeds 1", 0);
    return Degree::from_rational(q);
}

Degree checked(Degree d, const Algebra &algebra) {
    if (!algebra.contains(d)) throw UsageError("degree " + d.to_string() + " is not an element of " + algebra.name());
    return d;
}

std::vector<std::vector<std::uint32_t>> table(const Json &j, const char *what) {
    try {
        return j.get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const Json::exception &) {
        throw UsageError(std::string(what) + " must be a matrix of element indices");
    }
}

} // namespace

Json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what(), e.byte);
    }
}

void write_json(const std::filesystem::path &path, const Json &j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("error writing " + path.string());
}

Degree degree_from_json(const Json &j, const Algebra &algebra) {
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        if (!text.empty() && text.front() == '#') {
            std::size_t k = 0;
            try {
                std::size_t used = 0;
                k = std::stoul(text.substr(1), &used);
                if (used + 1 != text.size()) throw std::invalid_argument(text);
            } catch (const std::exception &) {
                throw ParseError("malformed chain index '" + text + "'", 1);
            }
            return algebra.element(k);
        }
        return checked(Degree::parse(text), algebra);
    }
    if (j.is_number()) {
        if (j.is_number_float() || (j.is_number_integer() && j.get<long long>() < 0)) {
            const auto text = j.dump();
            if (!text.empty() && text.front() == '-') throw ParseError("negative degree " + text, 0);
            if (text.find_first_of("eE") != std::string::npos) return checked(scientific(text), algebra);
            return checked(Degree::parse(text), algebra);
        }
        return checked(Degree::parse(j.dump()), algebra);
    }
    throw UsageError("degree must be a string or a number, got " + j.dump());
}

Json degree_to_json(const Degree &d) { return d.to_decimal_string(); }

Algebra lattice_from_json(const Json &j) {
    ChainTables t;
    const Json &n = member(j, "chain");
    if (!n.is_number_unsigned()) throw UsageError("\"chain\" must be a positive integer");
    t.length = n.get<std::size_t>();
    t.tnorm = table(member(j, "tnorm"), "tnorm");
    t.snorm = table(member(j, "snorm"), "snorm");
    t.residuum = table(member(j, "residuum"), "residuum");
    try {
        t.negation = member(j, "neg").get<std::vector<std::uint32_t>>();
    } catch (const Json::exception &) {
        throw UsageError("neg must be an array of element indices");
    }
    return Algebra::finite_chain(std::move(t));
}

Json lattice_to_json(const Algebra &algebra) {
    const ChainTables &t = algebra.tables();
    return Json{{"chain", t.length}, {"tnorm", t.tnorm}, {"snorm", t.snorm}, {"residuum", t.residuum}, {"neg", t.negation}};
}

Algebra algebra_from_selector(const std::string &selector) {
    if (selector == "godel") return Algebra::godel();
    if (selector == "product") return Algebra::product();
    if (selector == "lukasiewicz") return Algebra::lukasiewicz();
    if (selector.rfind("lattice:", 0) == 0) return lattice_from_json(read_json(selector.substr(8)));
    throw UsageError("unknown algebra '" + selector + "' (expected godel, product, lukasiewicz or lattice:PATH)");
}

FuzzyGraph graph_from_json(const Json &j, const Algebra &algebra) {
    GraphBuilder b;
    for (const auto &v : member(j, "vertices")) b.add_vertex(name_of(v, "vertex name"));

    std::map<std::string, LabelId> vertex_labels;
    if (j.contains("vertex_labels")) {
        for (const auto &[v, labels] : j.at("vertex_labels").items()) {
            const Vertex x = b.vertex(v);
            for (const auto &[label, degree] : labels.items()) {
                auto it = vertex_labels.find(label);
                if (it == vertex_labels.end()) it = vertex_labels.emplace(label, b.add_vertex_label(label)).first;
                b.set_label(x, it->second, degree_from_json(degree, algebra));
            }
        }
    }

    std::map<std::string, LabelId> edge_labels;
    auto edge_label = [&](const std::string &name) {
        auto it = edge_labels.find(name);
        if (it == edge_labels.end()) it = edge_labels.emplace(name, b.add_edge_label(name)).first;
        return it->second;
    };
    if (j.contains("edge_labels"))
        for (const auto &name : j.at("edge_labels")) edge_label(name_of(name, "edge label"));
    if (j.contains("edges")) {
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 4) throw UsageError("each edge must be [from, label, to, degree]");
            b.add_edge(b.vertex(name_of(e[0], "edge source")), edge_label(name_of(e[1], "edge label")),
                       b.vertex(name_of(e[2], "edge target")), degree_from_json(e[3], algebra));
        }
    }
    return std::move(b).build();
}

Json graph_to_json(const FuzzyGraph &g) {
    Json labels = Json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (LabelId a = 0; a < g.vertex_label_count(); ++a)
            if (!g.label(v, a).is_zero()) labels[g.vertex_name(v)][g.vertex_label_names()[a]] = degree_to_json(g.label(v, a));
    Json edges = Json::array();
    for (const auto &e : g.edges())
        edges.push_back(Json::array({g.vertex_name(e.source), g.edge_label_names()[e.label], g.vertex_name(e.target),
                                     degree_to_json(e.degree)}));
    return Json{{"vertices", g.vertex_names()}, {"vertex_labels", labels}, {"edge_labels", g.edge_label_names()}, {"edges", edges}};
}

Interpretation interpretation_from_json(const Json &j, const Algebra &algebra) {
    InterpretationBuilder b(algebra);
    for (const auto &x : member(j, "domain")) b.add_element(name_of(x, "domain element"));
    if (j.contains("individuals"))
        for (const auto &[a, x] : j.at("individuals").items()) b.add_individual(a, b.element(name_of(x, "individual value")));
    if (j.contains("concepts"))
        for (const auto &[name, ext] : j.at("concepts").items()) {
            const auto id = b.add_concept_name(name);
            if (!ext.is_object()) throw UsageError("concept '" + name + "' must map elements to degrees");
            for (const auto &[x, d] : ext.items()) b.set_concept(id, b.element(x), degree_from_json(d, algebra));
        }
    if (j.contains("roles"))
        for (const auto &[name, ext] : j.at("roles").items()) {
            const auto id = b.add_role_name(name);
            if (!ext.is_array()) throw UsageError("role '" + name + "' must be a list of [from, to, degree]");
            for (const auto &inst : ext) {
                if (!inst.is_array() || inst.size() != 3)
                    throw UsageError("role '" + name + "' instances must be [from, to, degree]");
                b.add_role_instance(id, b.element(name_of(inst[0], "role source")), b.element(name_of(inst[1], "role target")),
                                    degree_from_json(inst[2], algebra));
            }
        }
    return std::move(b).build();
}

Json interpretation_to_json(const Interpretation &i) {
    Json individuals = Json::object();
    for (const auto &a : i.individual_names()) individuals[a] = i.element_name(i.individual(a));
    Json concepts = Json::object();
    for (std::size_t c = 0; c < i.concept_names().size(); ++c) {
        Json ext = Json::object();
        const auto values = i.concept_extension(c);
        for (Element x = 0; x < i.size(); ++x)
            if (!values[x].is_zero()) ext[i.element_name(x)] = degree_to_json(values[x]);
        concepts[i.concept_names()[c]] = ext;
    }
    Json roles = Json::object();
    for (std::size_t r = 0; r < i.role_names().size(); ++r) {
        Json ext = Json::array();
        for (const auto &inst : i.role_extension(r))
            ext.push_back(Json::array({i.element_name(inst.from), i.element_name(inst.to), degree_to_json(inst.degree)}));
        roles[i.role_names()[r]] = ext;
    }
    return Json{{"domain", i.element_names()}, {"individuals", individuals}, {"concepts", concepts}, {"roles", roles}};
}

Json partition_to_json(const Partition &p, const std::vector<std::string> &names) {
    Json out = Json::array();
    for (const auto &block : p.blocks()) {
        Json members = Json::array();
        for (Vertex v : block) members.push_back(names.at(v));
        out.push_back(members);
    }
    return out;
}

Relation relation_from_json(const Json &j, const Interpretation &left, const Interpretation &right) {
    if (!j.is_array()) throw UsageError("a relation must be an array of [x, x'] pairs");
    Relation z;
    for (const auto &pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw UsageError("relation entries must be [x, x'] pairs");
        z.emplace_back(left.element(name_of(pair[0], "relation element")), right.element(name_of(pair[1], "relation element")));
    }
    normalize(z);
    return z;
}

Json relation_to_json(const Relation &z, const Interpretation &left, const Interpretation &right) {
    Json out = Json::array();
    for (auto [x, y] : z) out.push_back(Json::array({left.element_name(x), right.element_name(y)}));
    return out;
}

} // namespace fuzzymin::io
