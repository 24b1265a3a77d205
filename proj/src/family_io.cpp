#include "hq/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hq::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

// Accepts "p^e" or a plain prime-power integer.
bool parse_field_name(std::string_view s, int& p, int& e) {
    auto to_int = [](std::string_view v, int& out) {
        if (v.empty() || v.size() > 4) return false;
        out = 0;
        for (char ch : v) {
            if (ch < '0' || ch > '9') return false;
            out = out * 10 + (ch - '0');
        }
        return true;
    };
    std::size_t caret = s.find('^');
    if (caret != std::string_view::npos) {
        int pp = 0, ee = 0;
        if (!to_int(s.substr(0, caret), pp) || !to_int(s.substr(caret + 1), ee)) return false;
        if (!gf::is_prime(pp) || ee < 1) return false;
        p = pp;
        e = ee;
        return true;
    }
    int q = 0;
    if (!to_int(s, q)) return false;
    return gf::prime_power(q, p, e);
}

}  // namespace

std::string family_text(const pg3::Geometry& g, const verify::PlaneFamily& fam) {
    std::string out = "q=" + g.field().name() + "\n";
    for (std::int32_t pi : fam.members) out += g.plane_text(pi) + "\n";
    return out;
}

verify::PlaneFamily parse_family(const pg3::Geometry& g, std::string_view text) {
    const auto& f = g.field();
    std::vector<std::string_view> lines = split(text, '\n');

    // header
    std::size_t li = 0;
    while (li < lines.size() && trim(lines[li]).empty()) ++li;
    if (li == lines.size()) throw ParseError(1, "missing header line \"q=...\"");
    std::string_view header = trim(lines[li]);
    if (!header.starts_with("q="))
        throw ParseError(static_cast<int>(li + 1), "expected header line \"q=...\"");
    int p = 0, e = 0;
    if (!parse_field_name(header.substr(2), p, e))
        throw ParseError(static_cast<int>(li + 1),
                         "\"" + std::string(header.substr(2)) + "\" is not a prime power");
    if (p != f.p() || e != f.e())
        throw ParseError(static_cast<int>(li + 1), "file declares q=" + std::string(header.substr(2)) +
                                                       " but the run uses q=" + f.name());

    std::vector<std::int32_t> members;
    std::set<std::int32_t> seen;
    for (++li; li < lines.size(); ++li) {
        std::string_view line = trim(lines[li]);
        if (line.empty() || line.front() == '#') continue;
        int lineno = static_cast<int>(li + 1);
        auto fields = split(line, ':');
        if (fields.size() != 4)
            throw ParseError(lineno, "expected 4 colon-separated coordinates, found " +
                                         std::to_string(fields.size()));
        pg3::Coords dual;
        bool all_zero = true;
        for (int k = 0; k < 4; ++k) {
            auto parsed = f.parse(trim(fields[k]));
            if (!parsed)
                throw ParseError(lineno, "\"" + std::string(trim(fields[k])) +
                                             "\" is not an element of GF(" + f.name() + ")");
            dual[k] = *parsed;
            all_zero = all_zero && f.is_zero(*parsed);
        }
        if (all_zero) throw ParseError(lineno, "the zero tuple is not a plane");
        std::int32_t idx = g.plane_index(dual);
        if (!seen.insert(idx).second)
            throw ParseError(lineno, "duplicate plane " + g.plane_text(idx));
        members.push_back(idx);
    }
    if (members.empty()) throw ParseError(0, "the family contains no planes");
    return verify::make_family(g, std::move(members));
}

verify::PlaneFamily load_family(const pg3::Geometry& g, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw FileError("cannot read " + path);
    return parse_family(g, buf.str());
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw FileError("cannot write " + path);
}

std::string certificate_text(const verify::Certificate& cert) {
    std::ostringstream out;
    out << "q: " << cert.field_name << "\n";
    out << "family-size: " << cert.family_size << "\n";
    for (const auto& c : cert.checks) {
        out << "check: " << c.name << (c.pass ? " pass" : " fail");
        for (const auto& m : c.measured) out << ' ' << m.key << '=' << m.value;
        if (!c.witness_kind.empty()) {
            out << " witness=" << c.witness_kind << ':';
            for (std::size_t i = 0; i < c.witness.size(); ++i) {
                if (i) out << ',';
                out << c.witness[i];
            }
        }
        if (!c.note.empty()) out << " note=" << c.note;
        out << "\n";
        if (c.name == "reconstruction" && c.pass && cert.reconstructed)
            out << "reconstructed-form: " << quadric::form_text(*cert.reconstructed) << "\n";
    }
    out << "result: " << (cert.overall_pass ? "pass" : "fail") << "\n";
    return out.str();
}

std::string certificate_json(const verify::Certificate& cert) {
    nlohmann::ordered_json doc;
    doc["q"] = cert.field_name;
    doc["family_size"] = cert.family_size;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : cert.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        nlohmann::ordered_json jm = nlohmann::ordered_json::object();
        for (const auto& m : c.measured) jm[m.key] = m.value;
        jc["measured"] = std::move(jm);
        if (!c.witness_kind.empty()) {
            jc["witness"] = {{"kind", c.witness_kind}, {"indices", c.witness}};
        }
        if (!c.note.empty()) jc["note"] = c.note;
        doc["checks"].push_back(std::move(jc));
    }
    if (cert.reconstructed) doc["reconstructed_form"] = quadric::form_text(*cert.reconstructed);
    doc["result"] = cert.overall_pass ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

}  // namespace hq::io
