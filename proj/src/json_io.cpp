#include "kmstab/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace kmstab::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::Parse, msg); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected an integer or a rational string");
}

long long int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string("expected an integer for ") + what);
    return j.get<long long>();
}

} // namespace

Json load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::Parse, "cannot open '" + path + "'");
    Json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return j;
}

Gcm parse_gcm_input(const Json& j) {
    if (!j.is_object()) bad("quiver input must be a JSON object");
    const bool has_arrows = j.contains("arrows");
    const bool has_gcm = j.contains("gcm");
    if (has_arrows == has_gcm) bad("exactly one of \"arrows\" or \"gcm\" must be present");

    if (has_gcm) {
        const Json& m = j.at("gcm");
        if (!m.is_array() || m.empty()) bad("\"gcm\" must be a nonempty array of rows");
        const int n = int(m.size());
        if (j.contains("vertices") && int_from_json(j.at("vertices"), "vertices") != n)
            bad("\"vertices\" does not match the matrix size");
        IntMat a(n, n);
        for (int i = 0; i < n; ++i) {
            if (!m[i].is_array() || int(m[i].size()) != n) bad("\"gcm\" must be square");
            for (int k = 0; k < n; ++k) a(i, k) = Int(int_from_json(m[i][k], "gcm entry"));
        }
        return Gcm(std::move(a));
    }

    if (!j.contains("vertices")) bad("quiver needs \"vertices\"");
    Quiver q;
    long long n = int_from_json(j.at("vertices"), "vertices");
    if (n < 1 || n > 1000) bad("vertex count out of range");
    q.n = int(n);
    const Json& arrows = j.at("arrows");
    if (!arrows.is_array()) bad("\"arrows\" must be an array of [s,t] pairs");
    for (const auto& e : arrows) {
        if (!e.is_array() || e.size() != 2) bad("each arrow must be a [s,t] pair");
        long long s = int_from_json(e[0], "arrow source");
        long long t = int_from_json(e[1], "arrow target");
        if (s < 1 || s > n || t < 1 || t > n) bad("arrow endpoint out of range (1-based)");
        q.arrows.emplace_back(int(s - 1), int(t - 1));
    }
    return gcm_from_quiver(q);
}

Charge parse_charge(const Json& j) {
    const Json* arr = nullptr;
    if (j.is_object() && j.contains("z"))
        arr = &j.at("z");
    else if (j.is_array())
        arr = &j;
    else
        bad("charge must be {\"z\": [[re,im],...]}");
    Charge z;
    for (const auto& e : *arr) {
        if (!e.is_array() || e.size() != 2) bad("each charge entry must be [re, im]");
        z.emplace_back(rat_from_json(e[0]), rat_from_json(e[1]));
    }
    if (z.empty()) bad("charge must be nonempty");
    return z;
}

ChargePath parse_path(const Json& j) {
    if (!j.is_object() || !j.contains("waypoints"))
        bad("path must be {\"waypoints\": [charge,...]}");
    ChargePath p;
    for (const auto& e : j.at("waypoints")) p.waypoints.push_back(parse_charge(e));
    if (p.waypoints.size() < 2) bad("path needs at least two waypoints");
    return p;
}

BraidWord parse_braid_shorthand(const std::string& s, int rank) {
    BraidWord b;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) bad("empty letter in braid word '" + s + "'");
        long long v;
        try {
            size_t used = 0;
            v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            bad("bad braid letter '" + tok + "'");
        }
        if (v == 0 || std::abs(v) > rank) bad("braid letter out of range: " + tok);
        b.letters.push_back({int(std::abs(v)) - 1, v > 0 ? 1 : -1});
    }
    return b;
}

BraidWord parse_braid_json(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("letters")) bad("braid word needs \"letters\"");
    BraidWord b;
    for (const auto& e : j.at("letters")) {
        if (!e.is_array() || e.size() != 2) bad("braid letters are [i, e] pairs");
        long long i = int_from_json(e[0], "braid generator");
        long long x = int_from_json(e[1], "braid exponent");
        if (i < 1 || i > rank) bad("braid generator out of range (1-based)");
        if (x != 1 && x != -1) bad("braid exponent must be 1 or -1");
        b.letters.push_back({int(i - 1), int(x)});
    }
    if (j.contains("shift")) {
        b.shift = int_from_json(j.at("shift"), "shift");
        if (b.shift % 2 != 0) fail(ErrorKind::InvalidInput, "shift degree must be even");
    }
    return b;
}

Json rational_json(const Rat& r) { return format_rational(r); }

Json gauss_json(const GaussRat& z) {
    return Json::array({format_rational(z.re), format_rational(z.im)});
}

Json charge_json(const Charge& z) {
    Json arr = Json::array();
    for (const auto& v : z) arr.push_back(gauss_json(v));
    return arr;
}

namespace {

// integers fit JSON numbers in practice; fall back to strings past int64
Json int_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return x.str();
}

} // namespace

Json intvec_json(const IntVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(int_json(x));
    return arr;
}

Json ratvec_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
}

Json matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json word_json(const Word& w) {
    Json arr = Json::array();
    for (int l : w) arr.push_back(l + 1);
    return arr;
}

Json braid_letters_json(const BraidWord& b) {
    Json arr = Json::array();
    for (const auto& l : b.letters) arr.push_back(Json::array({l.gen + 1, l.exp}));
    return arr;
}

} // namespace kmstab::io
