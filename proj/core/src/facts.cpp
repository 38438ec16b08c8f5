#include "modcurve/facts.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace modcurve {

namespace detail {
extern const std::string_view kFactsText;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw FactError("bad integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw FactError("bad integer: " + s);
    }
}

}  // namespace

const std::string* Fact::value(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
}

std::vector<int> parse_level_list(const std::string& text) {
    std::set<int> out;
    for (const auto& tok : split(text, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) {
            out.insert(to_int(tok));
            continue;
        }
        int lo = to_int(trim(tok.substr(0, dash)));
        int hi = to_int(trim(tok.substr(dash + 1)));
        if (lo > hi) throw FactError("bad level range: " + tok);
        for (int n = lo; n <= hi; ++n) out.insert(n);
    }
    return {out.begin(), out.end()};
}

std::vector<CurveRef> parse_curve_list(const std::string& text) {
    std::vector<CurveRef> out;
    for (const auto& tok : split(text, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw FactError("bad curve reference: " + tok);
        out.push_back({to_int(trim(tok.substr(0, colon))), trim(tok.substr(colon + 1))});
    }
    return out;
}

std::vector<InvolutionSpec> parse_involution_list(const std::string& text) {
    static const std::regex w_re(R"(W(\d+))");
    static const std::regex m_re(R"(\[\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\])");
    std::vector<InvolutionSpec> out;
    for (const auto& tok : split(text, ';')) {
        std::smatch m;
        InvolutionSpec spec;
        if (std::regex_match(tok, m, w_re)) {
            spec.hall = to_int(m[1]);
        } else if (std::regex_match(tok, m, m_re)) {
            spec.matrix = IntMat2{to_int(m[1]), to_int(m[2]), to_int(m[3]), to_int(m[4])};
        } else {
            throw FactError("bad involution: " + tok);
        }
        out.push_back(spec);
    }
    return out;
}

FactTable FactTable::parse(std::string_view text) {
    FactTable table;
    std::set<std::string> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Fact* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            std::string id = trim(line.substr(1, line.size() - 2));
            if (id.empty() || !ids.insert(id).second)
                throw FactError("facts line " + std::to_string(lineno) + ": empty or duplicate id " + id);
            table.facts_.push_back(Fact{id, FactKind::Reference, {}, {}});
            cur = &table.facts_.back();
            continue;
        }
        auto eq = line.find('=');
        if (!cur || eq == std::string::npos)
            throw FactError("facts line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "kind") {
            if (val == "reference")
                cur->kind = FactKind::Reference;
            else if (val == "argument")
                cur->kind = FactKind::Argument;
            else
                throw FactError("facts line " + std::to_string(lineno) + ": unknown kind " + val);
            cur->values[key] = val;
        } else if (key == "cite") {
            cur->cite = val;
        } else {
            cur->values[key] = val;
        }
    }
    for (const auto& f : table.facts_) {
        if (f.cite.empty()) throw FactError("fact " + f.id + " has no citation");
        if (!f.value("kind")) throw FactError("fact " + f.id + " has no kind");
        if (auto v = f.value("levels")) parse_level_list(*v);
        if (auto v = f.value("curves")) parse_curve_list(*v);
        if (auto v = f.value("involutions")) parse_involution_list(*v);
    }
    return table;
}

const FactTable& FactTable::builtin() {
    static const FactTable table = [] {
        try {
            return parse(detail::kFactsText);
        } catch (const FactError& e) {
            throw InternalError(std::string("embedded facts table is malformed: ") + e.what());
        }
    }();
    return table;
}

const Fact* FactTable::find(std::string_view id) const {
    for (const auto& f : facts_)
        if (f.id == id) return &f;
    return nullptr;
}

const Fact& FactTable::get(std::string_view id) const {
    if (auto f = find(id)) return *f;
    throw FactError("unknown fact " + std::string(id));
}

std::vector<int> FactTable::levels(std::string_view id) const {
    auto v = get(id).value("levels");
    return v ? parse_level_list(*v) : std::vector<int>{};
}

std::vector<CurveRef> FactTable::curves(std::string_view id) const {
    auto v = get(id).value("curves");
    return v ? parse_curve_list(*v) : std::vector<CurveRef>{};
}

std::vector<InvolutionSpec> FactTable::involutions(std::string_view id) const {
    auto v = get(id).value("involutions");
    return v ? parse_involution_list(*v) : std::vector<InvolutionSpec>{};
}

bool FactTable::has_level(std::string_view id, int n) const {
    auto l = levels(id);
    return std::binary_search(l.begin(), l.end(), n);
}

bool FactTable::has_curve(std::string_view id, int n, const std::string& label) const {
    auto c = curves(id);
    return std::find(c.begin(), c.end(), CurveRef{n, label}) != c.end();
}

std::vector<std::string> FactTable::ids_with_prefix(std::string_view prefix) const {
    std::vector<std::string> out;
    for (const auto& f : facts_)
        if (std::string_view(f.id).substr(0, prefix.size()) == prefix) out.push_back(f.id);
    return out;
}

}  // namespace modcurve
