#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kmstab/braid.hpp"
#include "kmstab/cone.hpp"
#include "kmstab/gcm.hpp"
#include "kmstab/json_io.hpp"
#include "kmstab/navigate.hpp"
#include "kmstab/roots.hpp"

namespace {

using namespace kmstab;
using io::Json;

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string vec_human(const RatVec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s + "]";
}

std::string vec_human(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string word_human(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i] + 1);
    }
    return s + "]";
}

std::string braid_human(const BraidWord& b) {
    std::string s = "[";
    for (size_t i = 0; i < b.letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string((b.letters[i].gen + 1) * b.letters[i].exp);
    }
    return s + "]";
}

std::string charge_human(const Charge& z) {
    std::string s = "[";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) s += ", ";
        s += format_gauss(z[i]);
    }
    return s + "]";
}

struct Options {
    std::string quiver_file;
    std::string charge_file;
    std::string path_file;
    std::string word;
    long long height = 12;
    long long cap = 10000;
    long long precision = 1000000000000LL; // rotation denominator bound
    bool json = false;
    bool only_real = false;
    bool only_imaginary = false;
};

Gcm load_gcm(const Options& o) { return io::parse_gcm_input(io::load_file(o.quiver_file)); }
Charge load_charge(const Options& o) { return io::parse_charge(io::load_file(o.charge_file)); }
ChargePath load_path(const Options& o) { return io::parse_path(io::load_file(o.path_file)); }

void emit(const Options& o, const Json& machine, const std::string& human) {
    if (o.json)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["verdict"] = v.certified_out ? "OutCertified" : "InAtHeight";
    if (v.certified_out)
        j["witness"] = io::intvec_json(v.witness);
    else
        j["margin2"] = v.margin2 ? Json(format_rational(*v.margin2)) : Json("inf");
    return j;
}

std::string verdict_human(const Verdict& v) {
    if (v.certified_out) return "OutCertified by " + vec_human(v.witness);
    std::string m = v.margin2 ? format_rational(*v.margin2) : "inf";
    return "InAtHeight, margin^2 = " + m;
}

int cmd_classify(const Options& o) {
    Gcm a = load_gcm(o);
    CartanType t = classify(a);
    Json j;
    j["type"] = tag_name(t.tag);
    j["witness"] = io::ratvec_json(t.witness);
    emit(o, j, std::string(tag_name(t.tag)) + ", witness " + vec_human(t.witness) + "\n");
    return 0;
}

int cmd_roots(const Options& o) {
    Gcm a = load_gcm(o);
    auto all = enumerate_roots(a, o.height, o.cap);
    Json items = Json::array();
    std::string human;
    for (const auto& e : all) {
        bool real = is_real(e.cls);
        if (o.only_real && !real) continue;
        if (o.only_imaginary && real) continue;
        Json r;
        r["root"] = io::intvec_json(e.coords);
        r["tag"] = tag_name(e.cls.tag);
        r["witness"] = io::word_json(e.cls.witness);
        items.push_back(std::move(r));
        human += vec_human(e.coords) + "  " + tag_name(e.cls.tag) + "  witness " +
                 word_human(e.cls.witness) + "\n";
    }
    Json j;
    j["height"] = o.height;
    j["count"] = items.size();
    j["roots"] = std::move(items);
    emit(o, j, human);
    return 0;
}

int cmd_cone(const Options& o) {
    Gcm a = load_gcm(o);
    ConeApprox c = imaginary_generators(a, o.height, o.cap);
    Json gens = Json::array();
    std::string human;
    for (const auto& g : c.generators) {
        gens.push_back(io::intvec_json(g));
        human += vec_human(g) + "\n";
    }
    Json j;
    j["height"] = o.height;
    j["generators"] = std::move(gens);
    emit(o, j, human.empty() ? "(empty imaginary cone at this height)\n" : human);
    return 0;
}

int cmd_check(const Options& o) {
    Gcm a = load_gcm(o);
    Charge z = load_charge(o);
    CartanType t = classify(a);
    Verdict vx = membership_X(a, z, o.height, o.cap);
    Verdict vr = membership_Xreg(a, z, o.height, o.cap);
    ConeApprox c = imaginary_generators(a, o.height, o.cap);
    SectorReport rep = sector(z, c);

    Json j;
    j["type"] = tag_name(t.tag);
    j["height"] = o.height;
    j["X"] = verdict_json(vx);
    j["Xreg"] = verdict_json(vr);
    Json js;
    js["status"] = status_name(rep.status);
    std::string human = std::string("type: ") + tag_name(t.tag) + "\n";
    human += "X: " + verdict_human(vx) + "\n";
    human += "X_reg: " + verdict_human(vr) + "\n";
    human += std::string("sector: ") + status_name(rep.status);
    if (rep.status == SectorStatus::Sector) {
        js["dmin"] = Json::array({io::Json(rep.dmin.first.str()), io::Json(rep.dmin.second.str())});
        js["dmax"] = Json::array({io::Json(rep.dmax.first.str()), io::Json(rep.dmax.second.str())});
        js["phi1"] = fmt6(rep.phi1);
        js["phi2"] = fmt6(rep.phi2);
        j["sector"] = std::move(js);
        PhaseCenter pc = phase_center(z, c);
        Json jp;
        jp["bisector_sq"] =
            Json::array({io::Json(pc.bisector_sq.first.str()), io::Json(pc.bisector_sq.second.str())});
        jp["phi"] = fmt6(pc.phi);
        jp["exactly_half"] = pc.exactly_half;
        j["phi_center"] = std::move(jp);
        human += ", phi1 = " + fmt6(rep.phi1) + ", phi2 = " + fmt6(rep.phi2);
        human += "\nphi^I: " + fmt6(pc.phi) +
                 (pc.exactly_half ? " (exactly 1/2)" : "");
    } else {
        j["sector"] = std::move(js);
    }
    human += "\n";
    emit(o, j, human);
    return vx.certified_out || vr.certified_out ? 1 : 0;
}

int cmd_locate(const Options& o) {
    Gcm a = load_gcm(o);
    Charge z = load_charge(o);
    LocateResult r = locate(a, z, o.height, o.cap, o.cap);
    Json j;
    j["word"] = io::word_json(r.word);
    j["charge"] = io::charge_json(r.charge);
    emit(o, j,
         "word: " + word_human(r.word) + "\ncharge: " + charge_human(r.charge) + "\n");
    return 0;
}

int cmd_cross(const Options& o) {
    Gcm a = load_gcm(o);
    ChargePath p = load_path(o);
    CrossReport r = cross_path(a, p, o.height, o.cap, o.cap);
    Json j;
    j["word"] = io::braid_letters_json(r.word);
    j["kmatrix"] = io::matrix_json(r.kmatrix);
    j["verified"] = r.verified;
    Json cs = Json::array();
    std::string human = "word: " + braid_human(r.word) + "\n";
    for (const auto& c : r.crossings) {
        Json e;
        e["segment"] = c.segment;
        e["t"] = format_rational(c.t);
        e["i"] = c.i + 1;
        e["side"] = c.side > 0 ? "+" : "-";
        cs.push_back(std::move(e));
        human += "crossing: segment " + std::to_string(c.segment) + " at t=" +
                 format_rational(c.t) + ", wall " + std::to_string(c.i + 1) +
                 (c.side > 0 ? "+" : "-") + "\n";
    }
    j["crossings"] = std::move(cs);
    human += std::string("verified: ") + (r.verified ? "yes" : "no") + "\n";
    emit(o, j, human);
    return r.verified ? 0 : 1;
}

int cmd_twist(const Options& o) {
    Gcm a = load_gcm(o);
    BraidWord b = io::parse_braid_shorthand(o.word, a.rank());
    auto [m, shift] = braid_to_kmatrix(a, b);
    Json j;
    j["kmatrix"] = io::matrix_json(m);
    j["shift"] = shift;
    std::string human = "kmatrix: " + io::matrix_json(m).dump() + "\nshift: " +
                        std::to_string(shift) + "\n";
    emit(o, j, human);
    return 0;
}

int cmd_relations(const Options& o) {
    Gcm a = load_gcm(o);
    auto checks = check_braid_relations(a);
    bool all = true;
    Json items = Json::array();
    std::string human;
    for (const auto& c : checks) {
        all = all && c.pass;
        Json e;
        e["i"] = c.i + 1;
        e["j"] = c.j + 1;
        e["a_ij"] = c.a_ij.convert_to<long long>();
        e["kind"] = c.kind;
        e["pass"] = c.pass;
        items.push_back(std::move(e));
        human += "pair (" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) +
                 "): " + c.kind + (c.pass ? " ok" : " FAILED") + "\n";
    }
    Json j;
    j["pairs"] = std::move(items);
    j["all_pass"] = all;
    emit(o, j, human.empty() ? "rank 1: no pairs to check\n" : human);
    return all ? 0 : 1;
}

int cmd_margin(const Options& o) {
    Gcm a = load_gcm(o);
    Charge z = load_charge(o);
    Rat m = support_margin(a, z, o.height, o.cap);
    Json j;
    j["height"] = o.height;
    j["margin2"] = format_rational(m);
    emit(o, j, "margin^2 = " + format_rational(m) + "\n");
    return 0;
}

int cmd_normalize(const Options& o) {
    Gcm a = load_gcm(o);
    Charge z = load_charge(o);
    ConeApprox c = imaginary_generators(a, o.height, o.cap);
    NormalizeResult r = normalize(z, c, Int(o.precision));
    PhaseCenter pc = phase_center(r.charge, c);
    Json j;
    j["rotation"] = io::gauss_json(r.rotation);
    j["charge"] = io::charge_json(r.charge);
    j["phi"] = fmt6(pc.phi);
    emit(o, j,
         "rotation: " + format_gauss(r.rotation) + "\ncharge: " + charge_human(r.charge) +
             "\nphi^I: " + fmt6(pc.phi) + "\n");
    return 0;
}

int cmd_simplify(const Options& o) {
    Gcm a = load_gcm(o);
    BraidWord b = io::parse_braid_shorthand(o.word, a.rank());
    BraidWord s = simplify(a, b);
    Json j;
    j["letters"] = io::braid_letters_json(s);
    j["shift"] = s.shift;
    emit(o, j, "word: " + braid_human(s) + "\nshift: " + std::to_string(s.shift) + "\n");
    return 0;
}

int cmd_shift(const Options& o) {
    Gcm a = load_gcm(o);
    ChargePath p = load_path(o);
    ConeApprox c = imaginary_generators(a, o.height, o.cap);
    long long s = loop_shift(a, p, c);
    Json j;
    j["shift"] = s;
    emit(o, j, "shift = " + std::to_string(s) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root-system and stability-chamber computations for loop-free quivers"};
    app.require_subcommand(1);

    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-q,--quiver", o.quiver_file, "quiver or GCM JSON file")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_option("--height", o.height, "root/cone height bound");
        sub->add_option("--cap", o.cap, "step and enumeration budget");
        return sub;
    };

    auto* classify_cmd = add_common(app.add_subcommand("classify", "Cartan type with witness"));
    classify_cmd->callback([&] { handler = cmd_classify; });

    auto* roots_cmd = add_common(app.add_subcommand("roots", "positive roots up to a height"));
    roots_cmd->add_flag("--real", o.only_real, "only real roots");
    roots_cmd->add_flag("--imaginary", o.only_imaginary, "only imaginary roots");
    roots_cmd->callback([&] { handler = cmd_roots; });

    auto* cone_cmd = add_common(app.add_subcommand("cone", "imaginary cone generators"));
    cone_cmd->callback([&] { handler = cmd_cone; });

    auto* check_cmd = add_common(app.add_subcommand("check", "X / X_reg membership for a charge"));
    check_cmd->add_option("-z,--charge", o.charge_file, "central charge JSON file")->required();
    check_cmd->callback([&] { handler = cmd_check; });

    auto* locate_cmd = add_common(app.add_subcommand("locate", "Weyl word into the chamber"));
    locate_cmd->add_option("-z,--charge", o.charge_file, "central charge JSON file")->required();
    locate_cmd->callback([&] { handler = cmd_locate; });

    auto* cross_cmd = add_common(app.add_subcommand("cross", "braid word of a charge path"));
    cross_cmd->add_option("-p,--path", o.path_file, "charge path JSON file")->required();
    cross_cmd->callback([&] { handler = cmd_cross; });

    auto* twist_cmd = add_common(app.add_subcommand("twist", "K-matrix of a braid word"));
    twist_cmd->add_option("--word", o.word, "braid word like 1,-2,3")->required();
    twist_cmd->callback([&] { handler = cmd_twist; });

    auto* rel_cmd = add_common(app.add_subcommand("relations", "pairwise twist relations"));
    rel_cmd->callback([&] { handler = cmd_relations; });

    auto* margin_cmd = add_common(app.add_subcommand("margin", "support-property margin"));
    margin_cmd->add_option("-z,--charge", o.charge_file, "central charge JSON file")->required();
    margin_cmd->callback([&] { handler = cmd_margin; });

    auto* norm_cmd = add_common(app.add_subcommand("normalize", "rotate to the phi^I = 1/2 slice"));
    norm_cmd->add_option("-z,--charge", o.charge_file, "central charge JSON file")->required();
    norm_cmd->add_option("--precision", o.precision, "rotation denominator bound");
    norm_cmd->callback([&] { handler = cmd_normalize; });

    auto* simp_cmd = add_common(app.add_subcommand("simplify", "shorten a braid word"));
    simp_cmd->add_option("--word", o.word, "braid word like 1,-2,3")->required();
    simp_cmd->callback([&] { handler = cmd_simplify; });

    auto* shift_cmd = add_common(app.add_subcommand("shift", "shift degree of a closed loop"));
    shift_cmd->add_option("-p,--path", o.path_file, "closed charge path JSON file")->required();
    shift_cmd->callback([&] { handler = cmd_shift; });

    CLI11_PARSE(app, argc, argv);

    try {
        return handler(o);
    } catch (const kmstab::Error& e) {
        io::Json err;
        err["error"] = kmstab::kind_name(e.kind());
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return kmstab::exit_code(e.kind());
    } catch (const std::exception& e) {
        io::Json err;
        err["error"] = "InternalError";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
