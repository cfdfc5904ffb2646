// Command-line front end: build / check / pair / reduce / iso / export-dot.
// Exit codes: 0 ok, 2 mathematical failure (structure residual, non-iso),
// 3 input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "linksurg/bridge.hpp"
#include "linksurg/json_io.hpp"
#include "linksurg/pairing.hpp"

using namespace linksurg;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 2;
constexpr int kInputError = 3;

std::string fixture_path(const std::string& p) {
    const char* dir = std::getenv("LINKSURG_FIXTURES");
    if (dir && !p.empty() && p.find('/') == std::string::npos)
        return std::string(dir) + "/" + p;
    return p;
}

int parse_window(const std::string& w, int lk, int& lo2, int& hi2) {
    auto colon = w.find(':');
    if (colon == std::string::npos) return kInputError;
    auto parse_half = [&](const std::string& s, int& out) {
        try {
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) return false;
            double d = v * 2.0;
            long long r = std::llround(d);
            if (std::abs(d - static_cast<double>(r)) > 1e-9) return false;
            out = static_cast<int>(r);
            return true;
        } catch (...) {
            return false;
        }
    };
    if (!parse_half(w.substr(0, colon), lo2) || !parse_half(w.substr(colon + 1), hi2))
        return kInputError;
    if ((lo2 - lk) % 2 != 0 || (hi2 - lk) % 2 != 0 || lo2 > hi2) return kInputError;
    return kOk;
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

json error_payload(const std::string& kind, const std::string& msg) {
    return json{{"error", kind}, {"message", msg}};
}

int cmd_build(const std::string& hfile, const std::string& window, const std::string& out,
              const std::string& format) {
    HFunction h;
    try {
        h = hfunction_from_json(load_json_file(fixture_path(hfile)));
    } catch (const std::exception& e) {
        std::cerr << error_payload("bad-input", e.what()).dump() << "\n";
        return kInputError;
    }
    LinkData link;
    link.h = h;
    if (parse_window(window, h.lk, link.lo2, link.hi2) != kOk) {
        std::cerr << error_payload("bad-input", "window must be a:b in Z + lk/2").dump() << "\n";
        return kInputError;
    }
    DDModule m;
    try {
        m = build_candidate_bimodule(link);
    } catch (const BuildError& e) {
        std::cerr << error_payload(e.kind == BuildError::Kind::kBadInput ? "bad-input"
                                                                         : "solver-failure",
                                   e.what())
                         .dump()
                  << "\n";
        return e.kind == BuildError::Kind::kBadInput ? kInputError : kMathFailure;
    } catch (const MalformedH& e) {
        std::cerr << error_payload("bad-input", e.what()).dump() << "\n";
        return kInputError;
    }
    auto rep = check_structure(m, 8, BoundaryPolicy::kWindowClosure);
    if (!rep.ok || !check_u_equivariance(m)) {
        std::cerr << error_payload("structure-failure", rep.str(m)).dump() << "\n";
        return kMathFailure;
    }
    emit_text(format == "dot" ? export_dot(m) : json(to_json(m)).dump(1) + "\n", out);
    return kOk;
}

int cmd_check(const std::string& modfile) {
    json j = load_json_file(fixture_path(modfile));
    if (j.value("type", "") == "dd") {
        DDModule m = dd_from_json(j);
        auto rep = check_structure(m, 8, BoundaryPolicy::kWindowClosure);
        json out{{"ok", rep.ok},
                 {"u_equivariant", check_u_equivariance(m)},
                 {"strict_residual_terms", rep.strict_residual.size()},
                 {"residual_terms", rep.residual.size()}};
        if (!rep.ok) out["residual"] = rep.str(m);
        std::cout << out.dump(1) << "\n";
        return rep.ok ? kOk : kMathFailure;
    }
    TypeDModule m = typed_from_json(j);
    auto rep = check_d_structure(m, 8);
    json out{{"ok", rep.ok}, {"residual_terms", rep.residual.size()}};
    if (!rep.ok) {
        json arr = json::array();
        for (const auto& t : rep.residual)
            arr.push_back(json{{"src", m.gens()[t.src].id},
                               {"dst", m.gens()[t.dst].id},
                               {"coef", to_json(t.coef)}});
        out["residual"] = arr;
    }
    std::cout << out.dump(1) << "\n";
    return rep.ok ? kOk : kMathFailure;
}

int cmd_pair(const std::string& xfile, const std::string& yfile, int prec, int depth,
             const std::string& out, const std::string& format) {
    TypeDModule x = typed_from_json(load_json_file(fixture_path(xfile)));
    DDModule y = dd_from_json(load_json_file(fixture_path(yfile)));
    TypeDModule paired = pair_modules(x, y, UPrecision(prec), depth);
    auto rep = check_d_structure(paired, prec);
    if (!rep.ok) {
        std::cerr << error_payload("structure-failure", "paired module fails delta^2 = 0").dump()
                  << "\n";
        return kMathFailure;
    }
    emit_text(format == "dot" ? export_dot(paired) : json(to_json(paired)).dump(1) + "\n", out);
    return kOk;
}

int cmd_reduce(const std::string& modfile, int prec, const std::string& out,
               const std::string& format) {
    TypeDModule m = typed_from_json(load_json_file(fixture_path(modfile)));
    TypeDModule r = reduce(m, UPrecision(prec));
    emit_text(format == "dot" ? export_dot(r) : json(to_json(r)).dump(1) + "\n", out);
    return kOk;
}

int cmd_iso(const std::string& m1, const std::string& m2, int prec) {
    TypeDModule a = typed_from_json(load_json_file(fixture_path(m1)));
    TypeDModule b = typed_from_json(load_json_file(fixture_path(m2)));
    IsoResult r = iso_check(a, b, UPrecision(prec));
    std::cout << json{{"isomorphic", r == IsoResult::kIsomorphic},
                      {"inconclusive", r == IsoResult::kInconclusive}}
                     .dump()
              << "\n";
    return r == IsoResult::kIsomorphic ? kOk : kMathFailure;
}

int cmd_bridge(int n_cap, int max_inputs, int max_weight) {
    auto rep = verify_ainfty_morphism(n_cap, max_inputs, max_weight);
    json out{{"ok", rep.ok}, {"checked", rep.checked}};
    if (!rep.ok) out["counterexample"] = rep.counterexample;
    std::cout << out.dump() << "\n";
    return rep.ok ? kOk : kMathFailure;
}

int cmd_export_dot(const std::string& modfile, const std::string& out) {
    json j = load_json_file(fixture_path(modfile));
    std::string dot = j.value("type", "") == "dd" ? export_dot(dd_from_json(j))
                                                  : export_dot(typed_from_json(j));
    emit_text(dot, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linksurg: exact link-surgery algebra over (K^!, K)"};
    app.require_subcommand(1);

    std::string hfile, xfile, yfile, modfile, m2file, window = "-2:2", out, format = "json";
    int uprec = 4, depth = 8, bridge_n = 4;

    auto add_common = [&](CLI::App* c) {
        c->add_option("-o,--out", out, "output path (stdout when omitted)");
        c->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* b = app.add_subcommand("build", "build the candidate bimodule from an H-function");
    b->add_option("hfile", hfile, "H-function JSON")->required();
    b->add_option("--window", window, "s1 window a:b");
    add_common(b);

    auto* c = app.add_subcommand("check", "verify the structure relation of a module file");
    c->add_option("modfile", modfile)->required();

    auto* p = app.add_subcommand("pair", "pair a type-D module with a DD-bimodule");
    p->add_option("xfile", xfile, "type-D module JSON")->required();
    p->add_option("yfile", yfile, "DD-bimodule JSON")->required();
    p->add_option("--uprec", uprec, "U-adic precision");
    p->add_option("--depth", depth, "path depth cap");
    add_common(p);

    auto* r = app.add_subcommand("reduce", "cancel unit arrows of a type-D module");
    r->add_option("modfile", modfile)->required();
    r->add_option("--uprec", uprec, "U-adic precision");
    add_common(r);

    auto* i = app.add_subcommand("iso", "grading-respecting isomorphism test");
    i->add_option("m1", modfile)->required();
    i->add_option("m2", m2file)->required();
    i->add_option("--uprec", uprec, "U-adic precision");

    auto* d = app.add_subcommand("export-dot", "labelled-arrow diagram (DOT)");
    d->add_option("modfile", modfile)->required();
    add_common(d);

    int max_inputs = 3, max_weight = 10;
    auto* v = app.add_subcommand("bridge",
                                 "verify the completion-bridge A-infinity morphism relations");
    v->add_option("--bridge-n", bridge_n, "weight cutoff N (>= 4)");
    v->add_option("--inputs", max_inputs, "largest input tuple (<= 4)");
    v->add_option("--weight", max_weight, "monomial weight bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (b->parsed()) return cmd_build(hfile, window, out, format);
        if (c->parsed()) return cmd_check(modfile);
        if (p->parsed()) return cmd_pair(xfile, yfile, uprec, depth, out, format);
        if (r->parsed()) return cmd_reduce(modfile, uprec, out, format);
        if (i->parsed()) return cmd_iso(modfile, m2file, uprec);
        if (d->parsed()) return cmd_export_dot(modfile, out);
        if (v->parsed()) return cmd_bridge(bridge_n, max_inputs, max_weight);
    } catch (const ParseError& e) {
        std::cerr << error_payload("bad-input", e.what()).dump() << "\n";
        return kInputError;
    } catch (const MalformedH& e) {
        std::cerr << error_payload("bad-input", e.what()).dump() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << error_payload("error", e.what()).dump() << "\n";
        return kInputError;
    }
    return kInputError;
}
