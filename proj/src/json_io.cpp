#include "linksurg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace linksurg {

namespace {

json terms_to_json(const std::vector<std::pair<int, int>>& ts) {
    json out = json::array();
    for (auto [a, b] : ts) out.push_back(json::array({a, b}));
    return out;
}

std::vector<std::pair<int, int>> terms_from_json(const json& j) {
    std::vector<std::pair<int, int>> out;
    if (!j.is_array()) throw ParseError("term list must be an array");
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw ParseError("term must be a pair");
        out.emplace_back(t[0].get<int>(), t[1].get<int>());
    }
    return out;
}

// Half-integers appear in H-function ranges as JSON numbers (n or n.5).
int doubled_from_number(const json& j) {
    double v = j.get<double>();
    double d = v * 2.0;
    long long r = std::llround(d);
    if (std::abs(d - static_cast<double>(r)) > 1e-9)
        throw ParseError("expected an integer or half-integer");
    return static_cast<int>(r);
}

json doubled_to_number(int x2) {
    if (x2 % 2 == 0) return json(x2 / 2);
    return json(x2 / 2.0);
}

}  // namespace

json to_json(const R0Elt& a) { return json{{"ring", "R0"}, {"terms", terms_to_json(a.terms())}}; }
json to_json(const R1Elt& a) { return json{{"ring", "R1"}, {"terms", terms_to_json(a.terms())}}; }

R0Elt r0_from_json(const json& j) {
    R0Elt r;
    const json& terms = j.is_array() ? j : j.at("terms");
    for (auto [i, k] : terms_from_json(terms)) r.xor_term(i, k);
    return r;
}

R1Elt r1_from_json(const json& j) {
    R1Elt r;
    const json& terms = j.is_array() ? j : j.at("terms");
    for (auto [k, m] : terms_from_json(terms)) r.xor_term(k, m);
    return r;
}

json to_json(const KElt& a) {
    json out = json::object();
    if (!a.b00.is_zero()) out["b00"] = terms_to_json(a.b00.terms());
    if (!a.b11.is_zero()) out["b11"] = terms_to_json(a.b11.terms());
    if (!a.sig.is_zero()) out["sigma"] = terms_to_json(a.sig.terms());
    if (!a.tau.is_zero()) out["tau"] = terms_to_json(a.tau.terms());
    return out;
}

KElt kelt_from_json(const json& j) {
    KElt a;
    if (j.contains("ring")) {
        std::string ring = j.at("ring").get<std::string>();
        if (ring == "R0") a.b00 = r0_from_json(j);
        else if (ring == "R1") a.b11 = r1_from_json(j);
        else throw ParseError("unknown ring tag " + ring);
        return a;
    }
    if (j.contains("block")) {
        std::string block = j.at("block").get<std::string>();
        if (block == "00")
            for (auto [i, k] : terms_from_json(j.at("terms"))) a.b00.xor_term(i, k);
        else if (block == "11")
            for (auto [k, m] : terms_from_json(j.at("terms"))) a.b11.xor_term(k, m);
        else if (block == "10") {
            if (j.contains("sigma"))
                for (auto [k, m] : terms_from_json(j.at("sigma"))) a.sig.xor_term(k, m);
            if (j.contains("tau"))
                for (auto [k, m] : terms_from_json(j.at("tau"))) a.tau.xor_term(k, m);
        } else {
            throw ParseError("unknown block tag " + block);
        }
        return a;
    }
    if (j.contains("b00"))
        for (auto [i, k] : terms_from_json(j.at("b00"))) a.b00.xor_term(i, k);
    if (j.contains("b11"))
        for (auto [k, m] : terms_from_json(j.at("b11"))) a.b11.xor_term(k, m);
    if (j.contains("sigma"))
        for (auto [k, m] : terms_from_json(j.at("sigma"))) a.sig.xor_term(k, m);
    if (j.contains("tau"))
        for (auto [k, m] : terms_from_json(j.at("tau"))) a.tau.xor_term(k, m);
    return a;
}

json to_json(const GradingVector& g) {
    return json{{"grw2", g.grw2}, {"grz2", g.grz2}, {"a1x2", g.a1x2}, {"a2x2", g.a2x2}};
}

GradingVector grading_from_json(const json& j) {
    return GradingVector{j.at("grw2").get<int>(), j.at("grz2").get<int>(),
                         j.at("a1x2").get<int>(), j.at("a2x2").get<int>()};
}

json to_json(const DDModule& m) {
    json gens = json::array();
    for (const auto& g : m.gens()) {
        json jg{{"id", g.id},
                {"idem", std::to_string(idem_index(g.li)) + std::to_string(idem_index(g.ri))},
                {"gr", to_json(g.gr)},
                {"alg", g.alg}};
        if (g.boundary != 0) jg["boundary"] = g.boundary;
        gens.push_back(jg);
    }
    auto term_list = [&](const std::vector<DDTerm>& ts) {
        json arr = json::array();
        for (const auto& t : ts)
            arr.push_back(json{{"src", m.gens()[t.src].id},
                               {"dst", m.gens()[t.dst].id},
                               {"left", t.left.str()},
                               {"right", to_json(t.right)}});
        return arr;
    };
    json arrows = json::array();
    for (const auto& a : m.arrows())
        arrows.push_back(json{{"src", m.gens()[a.src].id},
                              {"dst", m.gens()[a.dst].id},
                              {"left", a.left.str()},
                              {"right", to_json(a.right)}});
    json out{{"type", "dd"}, {"generators", gens}, {"arrows", arrows}};
    if (!m.closure().empty()) out["closure"] = term_list(m.closure());
    return out;
}

DDModule dd_from_json(const json& j) {
    if (j.value("type", "") != "dd") throw ParseError("expected a DD-module file");
    DDModule m;
    for (const auto& jg : j.at("generators")) {
        Generator g;
        g.id = jg.at("id").get<std::string>();
        std::string idem = jg.at("idem").get<std::string>();
        if (idem.size() != 2) throw ParseError("idem must be two digits");
        g.li = idem_of(idem[0] - '0');
        g.ri = idem_of(idem[1] - '0');
        g.gr = grading_from_json(jg.at("gr"));
        g.alg = jg.value("alg", 0);
        g.boundary = jg.value("boundary", 0);
        m.add_gen(g);
    }
    auto term_of = [&](const json& ja) {
        int src = m.gen_index(ja.at("src").get<std::string>());
        int dst = m.gen_index(ja.at("dst").get<std::string>());
        if (src < 0 || dst < 0) throw ParseError("arrow references unknown generator");
        auto w = KWord::parse(ja.at("left").get<std::string>(), m.gens()[src].li);
        if (!w) throw ParseError("bad K^! word: " + ja.at("left").get<std::string>());
        return DDTerm{src, dst, *w, kelt_from_json(ja.at("right"))};
    };
    for (const auto& ja : j.at("arrows")) {
        DDTerm t = term_of(ja);
        m.add_arrow(t.src, t.dst, t.left, t.right);
    }
    if (j.contains("closure"))
        for (const auto& ja : j.at("closure")) m.closure().push_back(term_of(ja));
    m.sort_arrows();
    return m;
}

json to_json(const TypeDModule& m) {
    json gens = json::array();
    for (const auto& g : m.gens())
        gens.push_back(
            json{{"id", g.id}, {"idem", idem_index(g.idem)}, {"gr", to_json(g.gr)}});
    json arrows = json::array();
    for (const auto& a : m.arrows())
        arrows.push_back(json{{"src", m.gens()[a.src].id},
                              {"dst", m.gens()[a.dst].id},
                              {"coef", to_json(a.coef)}});
    return json{{"type", "d"}, {"generators", gens}, {"arrows", arrows}};
}

TypeDModule typed_from_json(const json& j) {
    if (j.value("type", "") != "d") throw ParseError("expected a type-D module file");
    TypeDModule m;
    for (const auto& jg : j.at("generators")) {
        DGen g;
        g.id = jg.at("id").get<std::string>();
        g.idem = idem_of(jg.at("idem").get<int>());
        g.gr = grading_from_json(jg.at("gr"));
        m.add_gen(g);
    }
    for (const auto& ja : j.at("arrows")) {
        int src = m.gen_index(ja.at("src").get<std::string>());
        int dst = m.gen_index(ja.at("dst").get<std::string>());
        if (src < 0 || dst < 0) throw ParseError("arrow references unknown generator");
        m.add_arrow(src, dst, kelt_from_json(ja.at("coef")));
    }
    m.sort_arrows();
    return m;
}

json to_json(const HFunction& h) {
    json table = json::array();
    for (const auto& row : h.table) table.push_back(row);
    return json{{"lk", h.lk},
                {"s1_range", json::array({doubled_to_number(h.s1min2), doubled_to_number(h.s1max2())})},
                {"s2_range", json::array({doubled_to_number(h.s2min2), doubled_to_number(h.s2max2())})},
                {"table", table},
                {"HK1", json{{"s_range", json::array({h.hk1.smin, h.hk1.smax()})},
                             {"values", h.hk1.values}}},
                {"HK2", json{{"s_range", json::array({h.hk2.smin, h.hk2.smax()})},
                             {"values", h.hk2.values}}}};
}

HFunction hfunction_from_json(const json& j) {
    HFunction h;
    h.lk = j.at("lk").get<int>();
    h.s1min2 = doubled_from_number(j.at("s1_range")[0]);
    h.s2min2 = doubled_from_number(j.at("s2_range")[0]);
    for (const auto& row : j.at("table")) h.table.push_back(row.get<std::vector<int>>());
    auto knot = [](const json& jk) {
        KnotH k;
        k.smin = jk.at("s_range")[0].get<int>();
        k.values = jk.at("values").get<std::vector<int>>();
        return k;
    };
    h.hk1 = knot(j.at("HK1"));
    h.hk2 = knot(j.at("HK2"));
    if (doubled_from_number(j.at("s1_range")[1]) != h.s1max2() ||
        doubled_from_number(j.at("s2_range")[1]) != h.s2max2())
        throw ParseError("H table shape does not match the declared ranges");
    h.validate();
    return h;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(1) << "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const DDModule& m) {
    std::ostringstream os;
    os << "digraph dd {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const auto& g : m.gens())
        os << "  \"" << dot_escape(g.id) << "\" [label=\"" << dot_escape(g.id) << "\\n"
           << dot_escape(g.gr.str()) << "\"];\n";
    // Merge parallel arrows into one labelled edge, paper style "left|right".
    std::map<std::pair<int, int>, std::string> edges;
    for (const auto& a : m.arrows()) {
        std::string& lab = edges[{a.src, a.dst}];
        if (!lab.empty()) lab += " + ";
        lab += a.left.str() + "|" + a.right.str();
    }
    for (const auto& [k, lab] : edges)
        os << "  \"" << dot_escape(m.gens()[k.first].id) << "\" -> \""
           << dot_escape(m.gens()[k.second].id) << "\" [label=\"" << dot_escape(lab) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const TypeDModule& m) {
    std::ostringstream os;
    os << "digraph d {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const auto& g : m.gens())
        os << "  \"" << dot_escape(g.id) << "\" [label=\"" << dot_escape(g.id) << "\\n"
           << dot_escape(g.gr.str()) << "\"];\n";
    for (const auto& a : m.arrows())
        os << "  \"" << dot_escape(m.gens()[a.src].id) << "\" -> \""
           << dot_escape(m.gens()[a.dst].id) << "\" [label=\"" << dot_escape(a.coef.str())
           << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace linksurg
