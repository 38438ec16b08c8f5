#include "render.hpp"

#include <sstream>

#include "modcurve/version.hpp"

namespace modcurve::cli {

namespace {

std::string kind_name(EvidenceKind k) {
    switch (k) {
    case EvidenceKind::Witness: return "witness";
    case EvidenceKind::Elimination: return "elimination";
    case EvidenceKind::Certificate: return "certificate";
    case EvidenceKind::Fact: return "fact";
    case EvidenceKind::Note: return "note";
    }
    return "note";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

Json to_json(const DeltaSubgroup& delta) {
    Json j;
    j["label"] = delta.name();
    j["order"] = delta.order();
    j["elements"] = delta.elements();
    j["display"] = delta.display();
    return j;
}

Json to_json(const NormalizerElement& e) {
    Json j;
    j["name"] = e.name();
    j["matrix"] = e.matrix.str();
    return j;
}

Json to_json(const InvolutionData& inv) {
    Json j = to_json(inv.element);
    j["fixed_elliptic"] = inv.fixed.elliptic;
    j["fixed_cuspidal"] = inv.fixed.cuspidal;
    j["fixed_total"] = inv.total();
    if (inv.field_degree) j["field_degree"] = inv.field_degree;
    return j;
}

Json to_json(const Evidence& e) {
    Json j;
    j["tag"] = e.tag;
    j["kind"] = kind_name(e.kind);
    j["detail"] = e.detail;
    if (!e.target.empty()) {
        j["target"] = e.target;
        j["degree"] = e.degree;
    }
    if (!e.fact_id.empty()) j["fact"] = e.fact_id;
    return j;
}

Json to_json(const ClassificationRecord& rec) {
    Json j;
    j["N"] = rec.n;
    j["delta_label"] = rec.label();
    j["delta_elements"] = rec.delta.elements();
    j["delta"] = rec.delta.display();
    j["curve"] = rec.name();
    j["genus"] = rec.genus;
    j["status"] = to_string(rec.status);
    j["bielliptic"] = rec.bielliptic;
    j["primary"] = rec.primary;
    Json w = Json::array();
    for (const auto& x : rec.witnesses) w.push_back(to_json(x));
    j["witnesses"] = w;
    Json h = Json::array();
    for (const auto& x : rec.hyperelliptic_involutions) h.push_back(to_json(x));
    j["hyperelliptic_involutions"] = h;
    Json ev = Json::array();
    for (const auto& x : rec.evidence) ev.push_back(to_json(x));
    j["evidence"] = ev;
    j["quadratic_points"] = to_string(rec.quadratic_points);
    j["warnings"] = rec.warnings;
    return j;
}

Json to_json(const FixedPointSet& set) {
    Json j;
    j["N"] = set.n;
    j["d"] = set.d;
    j["count"] = set.count();
    Json pts = Json::array();
    for (const auto& p : set.points) {
        Json q;
        q["form"] = p.form.str();
        q["matrix"] = p.matrix.str();
        q["disc"] = p.cls.disc;
        q["beta"] = p.cls.beta;
        q["ell"] = p.cls.ell;
        q["m1"] = p.cls.m1;
        q["m2"] = p.cls.m2;
        q["elliptic_point"] = p.elliptic_point;
        pts.push_back(q);
    }
    j["points"] = pts;
    return j;
}

Json to_json(const LiftReport& rep) {
    Json j;
    j["N"] = rep.n;
    j["delta"] = to_json(rep.delta);
    j["candidate"] = to_json(rep.candidate);
    j["fixed_count_elliptic"] = rep.fixed_count_elliptic;
    j["fixed_count_cuspidal"] = rep.fixed_count_cuspidal;
    j["fixed_count_total"] = rep.total();
    Json w = Json::array();
    for (const auto& x : rep.per_point_witnesses) w.push_back({{"j", x.base_index + 1}, {"g", x.g}, {"a", x.a_class}});
    j["witnesses"] = w;
    return j;
}

Json envelope(const std::string& command, Json results, const std::vector<std::string>& warnings) {
    Json j;
    j["command"] = command;
    j["version"] = MODCURVE_VERSION;
    j["results"] = std::move(results);
    j["warnings"] = warnings;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string csv_header() { return "N,delta_label,delta_elements,genus,status,witnesses,evidence_tags,quadratic_points"; }

std::string csv_row(const ClassificationRecord& rec) {
    std::vector<std::string> w;
    for (const auto& x : rec.witnesses) w.push_back(x.element.name());
    std::vector<std::string> f{std::to_string(rec.n),
                               rec.label(),
                               rec.delta.display(),
                               std::to_string(rec.genus),
                               to_string(rec.status),
                               join(w, ";"),
                               join(rec.evidence_tags(), ";"),
                               to_string(rec.quadratic_points)};
    for (auto& x : f) x = csv_escape(x);
    return join(f, ",");
}

std::string text_record(const ClassificationRecord& rec) {
    std::ostringstream os;
    os << rec.name() << "  Δ = " << rec.delta.display() << "  genus " << rec.genus << '\n';
    os << "  status: " << to_string(rec.status);
    if (rec.status == CurveStatus::Hyperelliptic && rec.bielliptic) os << " (also bielliptic)";
    os << "  [" << rec.primary << "]\n";
    for (const auto& w : rec.witnesses)
        os << "  witness " << w.element.name() << " = " << w.element.matrix.str() << "  fixed " << w.total()
           << " (" << w.fixed.elliptic << " elliptic, " << w.fixed.cuspidal << " cuspidal)\n";
    for (const auto& h : rec.hyperelliptic_involutions)
        os << "  hyperelliptic involution " << h.element.name() << " = " << h.element.matrix.str() << "  fixed "
           << h.total() << '\n';
    for (const auto& e : rec.evidence) {
        if (e.tag == tags::kWitness) continue;
        os << "  " << e.tag << ": " << e.detail << '\n';
    }
    os << "  quadratic points: " << to_string(rec.quadratic_points) << '\n';
    for (const auto& w : rec.warnings) os << "  warning: " << w << '\n';
    return os.str();
}

std::string text_census(const std::vector<ClassificationRecord>& recs) {
    std::ostringstream os;
    for (const auto& r : recs) {
        std::vector<std::string> w;
        for (const auto& x : r.witnesses) w.push_back(x.element.name());
        os << r.name() << "  g=" << r.genus << "  " << to_string(r.status);
        if (r.status == CurveStatus::Hyperelliptic && r.bielliptic) os << "+bielliptic";
        os << "  [" << join(r.evidence_tags(), ",") << "]";
        for (const auto* e : r.with_tag(r.primary))
            if (!e->target.empty()) {
                os << "  -> " << e->target << " (" << e->degree << ")";
                break;
            }
        if (!w.empty()) os << "  " << join(w, ", ");
        os << "  quadratic=" << to_string(r.quadratic_points) << '\n';
    }
    return os.str();
}

std::string text_subgroups(int n, const std::vector<DeltaSubgroup>& subs) {
    std::ostringstream os;
    os << "N = " << n << ": " << subs.size() << " intermediate subgroups\n";
    for (const auto& d : subs) os << "  " << d.name() << "  order " << d.order() << "  " << d.display() << '\n';
    return os.str();
}

std::string text_fixed_points(const FixedPointSet& set) {
    std::ostringstream os;
    os << "W" << set.d << " on X0(" << set.n << "): " << set.count() << " fixed points\n";
    int j = 1;
    for (const auto& p : set.points)
        os << "  z" << j++ << "  form " << p.form.str() << "  W = " << p.matrix.str() << "  D = " << p.cls.disc
           << (p.elliptic_point ? "  elliptic point" : "") << '\n';
    return os.str();
}

std::string text_lift(const LiftReport& rep) {
    std::ostringstream os;
    os << rep.candidate.name() << " = " << rep.candidate.matrix.str() << " on " << curve_name(rep.delta) << ": "
       << rep.total() << " fixed points (" << rep.fixed_count_elliptic << " elliptic, " << rep.fixed_count_cuspidal
       << " cuspidal)\n";
    for (const auto& w : rep.per_point_witnesses)
        os << "  [" << w.g << "]z" << w.base_index + 1 << "  a = " << w.a_class << '\n';
    return os.str();
}

}  // namespace modcurve::cli
