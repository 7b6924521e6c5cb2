#include "xi/report.hpp"

#include <algorithm>
#include <sstream>

#include "xi/causality.hpp"
#include "xi/weyl.hpp"

namespace xi {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json vector_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& c : v.coords()) a.push_back(rational_json(c));
    return a;
}

RationalVector vector_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return RationalVector(std::move(c));
}

namespace {

/// Left-aligned columns separated by two spaces.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string render() const {
        std::vector<std::size_t> w;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (w.size() <= i) w.push_back(0);
                w[i] = std::max(w[i], r[i].size());
            }
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
            }
            out += line + "\n";
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

/// Cuts every line to width characters (0 = no limit).
std::string clip_lines(const std::string& text, std::size_t width) {
    if (width == 0) return text;
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        if (line.size() > width) line = width <= 3 ? line.substr(0, width) : line.substr(0, width - 3) + "...";
        out += line + "\n";
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_longs(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Json signature_json(const Signature& s) { return Json::array({s.plus, s.zero, s.minus}); }

Signature signature_from_json(const Json& j) {
    Signature s;
    s.plus = j.at(0).get<std::size_t>();
    s.zero = j.at(1).get<std::size_t>();
    s.minus = j.at(2).get<std::size_t>();
    return s;
}

Json checks_json(const std::vector<CheckResult>& checks) {
    Json a = Json::array();
    for (const auto& c : checks) a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return a;
}

std::vector<CheckResult> checks_from_json(const Json& j) {
    std::vector<CheckResult> out;
    for (const auto& c : j) out.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("detail").get<std::string>()});
    return out;
}

Json fingerprint_json(const std::string& name, const std::optional<Fingerprint>& fp) {
    Json h = {{"name", name}};
    if (fp) {
        h["dim"] = fp->dim;
        h["center_dim"] = fp->center_dim;
        h["killing"] = signature_json(fp->killing);
        h["derived_dim"] = fp->derived_dim;
    } else {
        h["dim"] = nullptr;
        h["center_dim"] = nullptr;
        h["killing"] = nullptr;
        h["derived_dim"] = nullptr;
    }
    return h;
}

std::string killing_text(const Fingerprint& fp) { return to_string(fp.killing); }

}  // namespace

Json roots_json(const RootDatum& rd) {
    Json j;
    j["label"] = rd.label;
    j["family"] = family_name(rd.family);
    j["rank"] = rd.rank;
    j["ambient_dim"] = rd.ambient_dim;
    j["root_count"] = rd.roots.size();
    j["weyl_order"] = rd.weyl_order;
    j["highest_root"] = rd.highest.coefficients.empty() ? Json(nullptr) : vector_json(rd.highest.root);
    j["highest_coefficients"] = rd.highest.coefficients;
    Json simple = Json::array();
    for (const auto& s : rd.simple) simple.push_back(vector_json(s));
    j["simple_roots"] = simple;
    Json lengths = Json::array();
    for (const auto& l : rd.root_lengths()) lengths.push_back(rational_json(l));
    j["root_lengths2"] = lengths;
    j["cartan_matrix"] = cartan_matrix(rd);
    return j;
}

std::string render_roots(const RootDatum& rd) {
    std::ostringstream os;
    os << rd.label << ": " << rd.roots.size() << " roots in R^" << rd.ambient_dim << ", |W| = " << rd.weyl_order;
    if (!rd.highest.coefficients.empty())
        os << ", highest root " << rd.highest.root.to_string() << " = " << join_longs(rd.highest.coefficients)
           << " in simple roots";
    os << "\nsimple roots:\n";
    for (std::size_t i = 0; i < rd.simple.size(); ++i) os << "  a" << i + 1 << " = " << rd.simple[i].to_string() << "\n";
    os << "Cartan matrix:\n";
    for (const auto& row : cartan_matrix(rd)) os << "  " << join_longs(row) << "\n";
    return os.str();
}

Json extremes_json(const CrownPolytope& p) {
    Json j;
    j["system"] = p.weyl_system.label;
    j["polytope"] = p.constraint_system.label;
    const auto flags = component_flags(p);
    const auto ext = extreme_orbits(p);
    Json orbits = Json::array();
    for (std::size_t k = 0; k < ext.orbits.size(); ++k)
        orbits.push_back({{"rep", vector_json(ext.orbits[k].representative)},
                          {"orbit_size", ext.orbits[k].size()},
                          {"symmetric", flags[k].symmetric}});
    j["orbits"] = orbits;
    j["vertex_count"] = ext.total();
    return j;
}

std::string render_extremes(const CrownPolytope& p) {
    const auto flags = component_flags(p);
    const auto ext = extreme_orbits(p);
    std::ostringstream os;
    os << "extreme points of the polytope for " << p.constraint_system.label << " under W(" << p.weyl_system.label
       << "): " << ext.orbits.size() << " orbit" << (ext.orbits.size() == 1 ? "" : "s") << ", " << ext.total()
       << " vertices\n";
    TextTable t({"#", "representative", "orbit size", "spectrum in {-1,0,1}"});
    for (std::size_t k = 0; k < ext.orbits.size(); ++k)
        t.add({std::to_string(k + 1), ext.orbits[k].representative.to_string(), std::to_string(ext.orbits[k].size()),
               yes_no(flags[k].symmetric)});
    return os.str() + t.render();
}

Json classification_json(const Classification& c) {
    Json j;
    j["algebra"] = c.algebra;
    Json mult = Json::array();
    for (const auto& [len, m] : c.system.multiplicities) mult.push_back({{"length2", rational_json(len)}, {"multiplicity", m}});
    j["system"] = {{"label", c.system.label}, {"family", c.system.family}, {"rank", c.system.rank}, {"multiplicities", mult}};
    j["polytope"] = c.polytope;
    j["xi0"] = c.xi0;
    j["caveat"] = c.caveat;
    j["checks"] = checks_json(c.checks);
    Json comps = Json::array();
    for (const auto& b : c.components) {
        Json k;
        k["rep"] = vector_json(b.representative);
        k["orbit_size"] = b.orbit_size;
        k["symmetric"] = b.symmetric;
        k["totally_real"] = b.totally_real;
        k["half_integral"] = b.spectrum.is_half_integral;
        k["h"] = fingerprint_json(b.h_name, b.fingerprint);
        k["verification"] = to_string(b.verification);
        k["checks"] = checks_json(b.checks);
        comps.push_back(k);
    }
    j["components"] = comps;
    j["ok"] = c.ok();
    return j;
}

Classification classification_from_json(const Json& j) {
    Classification c;
    c.algebra = j.at("algebra").get<std::string>();
    const Json& s = j.at("system");
    c.system.label = s.at("label").get<std::string>();
    c.system.family = s.at("family").get<std::string>();
    c.system.rank = s.at("rank").get<int>();
    for (const auto& m : s.at("multiplicities"))
        c.system.multiplicities.emplace_back(rational_from_json(m.at("length2")), m.at("multiplicity").get<std::size_t>());
    c.polytope = j.at("polytope").get<std::string>();
    c.xi0 = j.at("xi0").get<bool>();
    c.caveat = j.at("caveat").get<std::string>();
    c.checks = checks_from_json(j.at("checks"));
    for (const auto& k : j.at("components")) {
        BoundaryComponent b;
        b.representative = vector_from_json(k.at("rep"));
        b.orbit_size = k.at("orbit_size").get<std::size_t>();
        b.symmetric = k.at("symmetric").get<bool>();
        b.totally_real = k.at("totally_real").get<bool>();
        b.spectrum.is_half_integral = k.at("half_integral").get<bool>();
        b.spectrum.is_involutive = b.symmetric;
        const Json& h = k.at("h");
        b.h_name = h.at("name").get<std::string>();
        if (!h.at("dim").is_null())
            b.fingerprint = Fingerprint{h.at("dim").get<std::size_t>(), h.at("center_dim").get<std::size_t>(),
                                        signature_from_json(h.at("killing")), h.at("derived_dim").get<std::size_t>()};
        const std::string v = k.at("verification").get<std::string>();
        if (v != "computed" && v != "reference-only") throw Error("unknown verification level '" + v + "'");
        b.verification = v == "computed" ? Verification::computed : Verification::reference_only;
        b.checks = checks_from_json(k.at("checks"));
        c.components.push_back(std::move(b));
    }
    return c;
}

std::string render_classification(const Classification& c, std::size_t width) {
    std::ostringstream os;
    os << c.algebra << (c.xi0 ? ": boundary of the doubly restricted polytope" : ": distinguished boundary") << "\n";
    os << "restricted roots " << c.system.label << ", multiplicities";
    for (const auto& [len, m] : c.system.multiplicities) os << " |a|^2=" << to_string(len) << ":" << m;
    os << "; polytope " << c.polytope << "\n";
    TextTable t({"#", "representative", "orbit", "symmetric", "h", "dim", "center", "Killing", "verification"});
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const auto& b = c.components[k];
        const bool has = b.fingerprint.has_value();
        t.add({std::to_string(k + 1), b.representative.to_string(), std::to_string(b.orbit_size), yes_no(b.symmetric),
               b.h_name, has ? std::to_string(b.fingerprint->dim) : "-",
               has ? std::to_string(b.fingerprint->center_dim) : "-", has ? killing_text(*b.fingerprint) : "-",
               to_string(b.verification)});
    }
    os << t.render();
    std::size_t failed = 0;
    for (const auto& ch : c.checks) failed += ch.ok ? 0 : 1;
    for (const auto& b : c.components)
        for (const auto& ch : b.checks) failed += ch.ok ? 0 : 1;
    if (failed) os << failed << " check(s) failed; run verify for details\n";
    os << "note: " << c.caveat << "\n";
    return clip_lines(os.str(), width);
}

bool JordanReport::ok() const {
    return std::all_of(strata.begin(), strata.end(), [](const JordanStratumRow& r) {
        return r.stabilizer.name != "unidentified" && r.stratum.p == r.p && r.stratum.regular;
    });
}

JordanReport jordan_report(const JordanAlgebra& v) {
    JordanReport r;
    r.algebra = v.name();
    r.rank = v.rank();
    const auto ext = xi0_extreme_orbits(v);
    for (std::size_t p = 0; p <= v.rank(); ++p) {
        JordanStratumRow row;
        row.p = p;
        for (const auto& o : ext.orbits)
            if (positive_count(o.representative) == p) row.orbit_size = o.size();
        const ComplexMatrix z = frame_point(v, p);
        row.det = jordan_det(v, z);
        row.stratum = signature_stratum(v, z);
        row.stabilizer = stratum_stabilizer_algebra(v, p);
        r.strata.push_back(std::move(row));
    }
    return r;
}

Json jordan_json(const JordanReport& r) {
    Json j;
    j["algebra"] = r.algebra;
    j["rank"] = r.rank;
    Json rows = Json::array();
    for (const auto& s : r.strata) {
        Json row;
        row["p"] = s.p;
        row["orbit_size"] = s.orbit_size;
        row["det"] = rational_json(s.det);
        row["stratum"] = s.stratum.p;
        row["regular"] = s.stratum.regular;
        row["compact"] = s.stabilizer.compact;
        row["h"] = fingerprint_json(s.stabilizer.name, s.stabilizer.fingerprint);
        rows.push_back(row);
    }
    j["strata"] = rows;
    j["ok"] = r.ok();
    return j;
}

std::string render_jordan(const JordanReport& r, std::size_t width) {
    std::ostringstream os;
    os << r.algebra << ": " << r.rank + 1 << " signature strata, frame points z_p\n";
    TextTable t({"p", "orbit", "det z_p", "stratum", "G_p", "dim", "Killing", "compact"});
    for (const auto& s : r.strata)
        t.add({std::to_string(s.p), std::to_string(s.orbit_size), to_string(s.det), std::to_string(s.stratum.p),
               s.stabilizer.name, std::to_string(s.stabilizer.fingerprint.dim), killing_text(s.stabilizer.fingerprint),
               yes_no(s.stabilizer.compact)});
    return clip_lines(os.str() + t.render(), width);
}

std::string render_verification(const Classification& c) {
    std::ostringstream os;
    auto line = [&](const CheckResult& ch, const std::string& indent) {
        os << indent << (ch.ok ? "[ok]   " : "[FAIL] ") << ch.name;
        if (!ch.detail.empty()) os << " (" << ch.detail << ")";
        os << "\n";
    };
    os << c.algebra << "\n";
    if (c.checks.empty() && !c.components.empty() && c.components.front().verification == Verification::reference_only)
        os << "  no model: restricted roots and stabilizers taken from the reference table\n";
    for (const auto& ch : c.checks) line(ch, "  ");
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const auto& b = c.components[k];
        os << "  component " << k + 1 << " at " << b.representative.to_string() << " (orbit " << b.orbit_size << ", "
           << (b.symmetric ? "symmetric" : "not symmetric") << "): h = " << b.h_name;
        if (b.fingerprint) os << ", dim " << b.fingerprint->dim << ", Killing " << killing_text(*b.fingerprint);
        os << "\n";
        for (const auto& ch : b.checks) line(ch, "    ");
        line({"h identified", b.identified(), ""}, "    ");
    }
    os << (c.ok() ? "all checks passed\n" : "verification FAILED\n");
    return os.str();
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace xi
