#include "modcurve/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace modcurve {

namespace {

using Key = std::pair<int, std::vector<i64>>;

Key key_of(int n, const DeltaSubgroup& delta) { return {n, delta.elements()}; }

template <class V>
class Memo {
public:
    template <class F>
    const V& get(const Key& k, F&& compute) {
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto& s = slots_[k];
            if (!s) s = std::make_shared<Slot>();
            slot = s;
        }
        std::call_once(slot->once, [&] { slot->value = compute(); });
        return slot->value;
    }

private:
    struct Slot {
        std::once_flag once;
        V value{};
    };
    std::mutex mu_;
    std::map<Key, std::shared_ptr<Slot>> slots_;
};

i64 psi(i64 n) {
    i64 out = n;
    for (i64 p : prime_factors(n)) out = out / p * (p + 1);
    return out;
}

i64 projective_index(int n, const DeltaSubgroup& delta) {
    return psi(n) * static_cast<i64>(delta.index());
}

bool is_subset(const std::vector<i64>& a, const std::vector<i64>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntMat2 commutator(const IntMat2& u, const IntMat2& v) { return (u * v * u.adj() * v.adj()).primitive(); }

bool in_group(const IntMat2& m, const DeltaSubgroup& delta) {
    IntMat2 e;
    return scale_to_sl2(m.primitive(), e) && is_member(e, delta);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// Explicit non Atkin-Lehner candidates tried as witnesses.
std::vector<IntMat2> curated_explicit(int n) {
    switch (n) {
    case 28: return {{1, 0, 14, 1}};
    case 40: return {{1, 0, 20, 1}, {-10, 1, -120, 10}};
    case 48: return {{1, 0, 24, 1}, {-6, 1, -48, 6}};
    case 64: return {{1, 0, 32, 1}};
    default: return {};
    }
}

struct CurveCtx {
    int n;
    DeltaSubgroup delta;
    CosetAction action;
    int genus;
    std::vector<IntMat2> gens;
    std::vector<CuspClass> cusp_list;
    std::vector<i64> cosets;

    explicit CurveCtx(const DeltaSubgroup& d)
        : n(d.modulus()), delta(d), action(d), genus(action.genus()), gens(schreier_generators(action)),
          cusp_list(cusps(action)), cosets(d.coset_representatives()) {}
};

struct X0Involution {
    std::string name;
    IntMat2 matrix;
    i64 hall = 0;  // 0 for explicit matrices
    int fixed = 0;
};

struct LevelCtx {
    int n = 1;
    int g0 = 0;
    bool hyperelliptic = false;  // X0(N) in the hyperelliptic table
    bool bielliptic = false;     // X0(N) in the bielliptic table
    std::optional<X0Involution> h;                  // hyperelliptic involution when identified
    std::optional<std::vector<X0Involution>> b;     // all bielliptic involutions when the tables determine them
    std::string b_source;                          // fact id that makes b complete
    std::vector<IntMat2> explicit_candidates;       // curated and fact matrices of this level
};

}  // namespace

struct Classifier::Impl {
    const FactTable& facts = FactTable::builtin();
    Memo<std::shared_ptr<const CurveCtx>> curves;
    Memo<std::shared_ptr<const LevelCtx>> levels;
    Memo<int> genera;
    Memo<std::vector<InvolutionData>> invs;
    Memo<ClassificationRecord> records;
    Memo<std::vector<CoverTarget>> targets;

    const CurveCtx& curve(const DeltaSubgroup& delta) {
        return *curves.get(key_of(delta.modulus(), delta),
                           [&] { return std::make_shared<const CurveCtx>(delta); });
    }
};

namespace {

std::string x0_name(int n) { return "X0(" + std::to_string(n) + ")"; }

}  // namespace

std::string to_string(CurveStatus s) {
    switch (s) {
    case CurveStatus::Rational: return "rational";
    case CurveStatus::Elliptic: return "elliptic";
    case CurveStatus::Hyperelliptic: return "hyperelliptic";
    case CurveStatus::Bielliptic: return "bielliptic";
    case CurveStatus::NotBielliptic: return "not-bielliptic";
    case CurveStatus::Undecided: return "undecided";
    }
    return "undecided";
}

std::string to_string(QuadraticPoints q) {
    switch (q) {
    case QuadraticPoints::Infinite: return "infinite";
    case QuadraticPoints::Finite: return "finite";
    case QuadraticPoints::FiniteConditional: return "finite-conditional";
    case QuadraticPoints::NotApplicable: return "n/a";
    }
    return "n/a";
}

std::string curve_name(const DeltaSubgroup& delta) {
    std::string n = std::to_string(delta.modulus());
    if (delta.is_full()) return "X0(" + n + ")";
    if (delta.is_plus_minus_one()) return "X1(" + n + ")";
    std::string l = delta.name();
    if (l.size() > 1 && l[0] == 'D') return "X_Δ" + l.substr(1) + "(" + n + ")";
    return "X_" + l + "(" + n + ")";
}

std::string ClassificationRecord::name() const { return curve_name(delta); }

bool ClassificationRecord::has_tag(const std::string& tag) const {
    return std::any_of(evidence.begin(), evidence.end(), [&](const Evidence& e) { return e.tag == tag; });
}

std::vector<const Evidence*> ClassificationRecord::with_tag(const std::string& tag) const {
    std::vector<const Evidence*> out;
    for (const auto& e : evidence)
        if (e.tag == tag) out.push_back(&e);
    return out;
}

std::vector<std::string> ClassificationRecord::evidence_tags() const {
    std::vector<std::string> out;
    if (!primary.empty()) out.push_back(primary);
    for (const auto& e : evidence)
        if (std::find(out.begin(), out.end(), e.tag) == out.end()) out.push_back(e.tag);
    return out;
}

bool ClassificationRecord::eliminated() const {
    return std::any_of(evidence.begin(), evidence.end(),
                       [](const Evidence& e) { return e.kind == EvidenceKind::Elimination; });
}

std::optional<bool> facts_from_env() {
    const char* v = std::getenv("MODCURVE_FACTS");
    if (!v) return std::nullopt;
    std::string s(v);
    if (s == "on" || s == "1" || s == "true") return true;
    if (s == "off" || s == "0" || s == "false") return false;
    throw InvalidInput("MODCURVE_FACTS must be on or off, got " + s);
}

std::vector<int> census_levels(int max_n) {
    if (max_n > 256) throw InvalidInput("census: max N is 256");
    const auto& f = FactTable::builtin();
    std::set<int> s;
    for (const char* id : {"x0.rational", "x0.elliptic", "x0.hyperelliptic", "x0.bielliptic"})
        for (int n : f.levels(id))
            if (n <= max_n) s.insert(n);
    return {s.begin(), s.end()};
}

Classifier::Classifier(ClassifierOptions options) : opts_(options), impl_(std::make_unique<Impl>()) {}
Classifier::~Classifier() = default;

const FactTable& Classifier::facts() const { return impl_->facts; }

int Classifier::genus_of(int n, const DeltaSubgroup& delta) {
    return impl_->genera.get(key_of(n, delta), [&] { return genus(delta); });
}

std::optional<bool> Classifier::subhyperelliptic(int n, const DeltaSubgroup& delta) {
    if (genus_of(n, delta) <= 2) return true;
    const auto& f = facts();
    if (delta.is_full())
        return f.has_level("x0.rational", n) || f.has_level("x0.elliptic", n) || f.has_level("x0.hyperelliptic", n);
    if (delta.is_plus_minus_one()) return f.has_level("x1.hyperelliptic", n);
    return f.has_curve("intermediate.hyperelliptic", n, delta.name());
}

namespace {

std::shared_ptr<const LevelCtx> build_level(Classifier& cl, const CurveCtx& x0) {
    const auto& f = cl.facts();
    auto lv = std::make_shared<LevelCtx>();
    int n = x0.n;
    lv->n = n;
    lv->g0 = x0.genus;
    lv->hyperelliptic = f.has_level("x0.hyperelliptic", n);
    lv->bielliptic = f.has_level("x0.bielliptic", n);
    lv->explicit_candidates = curated_explicit(n);
    std::string bid = "x0.bielliptic_involutions." + std::to_string(n);
    if (f.find(bid))
        for (const auto& s : f.involutions(bid))
            if (s.matrix && std::find(lv->explicit_candidates.begin(), lv->explicit_candidates.end(), *s.matrix) ==
                                lv->explicit_candidates.end())
                lv->explicit_candidates.push_back(*s.matrix);
    if (lv->g0 < 2) return lv;

    std::vector<X0Involution> al;
    for (i64 d : hall_divisors(n)) {
        if (d == 1) continue;
        IntMat2 w = generic_W(d, n);
        al.push_back({"W" + std::to_string(d), w, d, orbit_fixed_points(x0.action, w).total()});
    }
    std::vector<X0Involution> expl;
    for (const auto& m : lv->explicit_candidates) {
        if (!normalizes(m, x0.delta, x0.gens) || automorphism_order(m, x0.delta) != 2) continue;
        expl.push_back({m.str(), m, 0, orbit_fixed_points(x0.action, m).total()});
    }
    int rh = 2 * lv->g0 + 2, rb = 2 * lv->g0 - 2;
    for (const auto& v : al)
        if (v.fixed == rh && !lv->h) lv->h = v;
    for (const auto& v : expl)
        if (v.fixed == rh && !lv->h) lv->h = v;

    if (lv->bielliptic) {
        if (f.has_level("x0.involutions.atkin_lehner", n)) {
            std::vector<X0Involution> b;
            for (const auto& v : al)
                if (v.fixed == rb) b.push_back(v);
            lv->b = b;
            lv->b_source = "x0.involutions.atkin_lehner";
        } else if (f.find(bid)) {
            std::vector<X0Involution> b;
            for (const auto& s : f.involutions(bid)) {
                X0Involution v;
                if (s.matrix) {
                    v = {s.matrix->str(), *s.matrix, 0, orbit_fixed_points(x0.action, *s.matrix).total()};
                } else {
                    IntMat2 w = generic_W(s.hall, n);
                    v = {"W" + std::to_string(s.hall), w, s.hall, orbit_fixed_points(x0.action, w).total()};
                }
                if (v.fixed != rb) throw InternalError("fact " + bid + ": " + v.name + " is not bielliptic on X0");
                b.push_back(v);
            }
            lv->b = b;
            lv->b_source = bid;
        }
    }
    return lv;
}

}  // namespace

std::vector<InvolutionData> Classifier::involutions(int n, const DeltaSubgroup& delta) {
    return impl_->invs.get(key_of(n, delta), [&] {
        const CurveCtx& c = impl_->curve(delta);
        const auto& lv = *impl_->levels.get(key_of(n, full_group(n)),
                                            [&] { return build_level(*this, impl_->curve(full_group(n))); });
        std::vector<InvolutionData> out;
        auto add = [&](NormalizerElement e, int field_degree) {
            if (automorphism_order(e.matrix, delta) != 2) return;
            InvolutionData d{e, orbit_fixed_points(c.action, e.matrix), field_degree};
            try {
                involution_quotient_genus(c.genus, d.total());
            } catch (const ParityViolation& ex) {
                throw InternalError(curve_name(delta) + " " + e.name() + ": " + ex.what());
            }
            out.push_back(d);
        };
        for (i64 a : c.cosets) {
            if (a == 1) continue;
            NormalizerElement e;
            e.kind = ElementKind::Diamond;
            e.diamond = a;
            e.matrix = diamond(a, n);
            add(e, 1);
        }
        std::vector<NormalizerElement> al;
        for (i64 d : hall_divisors(n))
            if (d > 1 && descends(d, delta)) al.push_back(atkin_lehner(d, n));
        for (const auto& w : al) add(w, w.hall == n ? fricke_field_degree(delta) : 0);
        for (const auto& w : al)
            for (i64 a : c.cosets) {
                if (a == 1) continue;
                NormalizerElement e = w;
                e.kind = ElementKind::DiamondAtkinLehner;
                e.diamond = a;
                e.matrix = diamond(a, n) * w.matrix;
                add(e, w.hall == n ? fricke_field_degree(delta) : 0);
            }
        for (const auto& m : lv.explicit_candidates) {
            if (!normalizes(m, delta, c.gens)) continue;
            for (i64 a : c.cosets) {
                NormalizerElement e;
                e.kind = ElementKind::Explicit;
                e.diamond = a;
                e.base = m;
                e.matrix = a == 1 ? m : diamond(a, n) * m;
                add(e, 0);
            }
        }
        return out;
    });
}

std::vector<CoverTarget> Classifier::cover_targets(int n, const DeltaSubgroup& delta) {
    return impl_->targets.get(key_of(n, delta), [&] {
        std::vector<CoverTarget> out;
        i64 mu = projective_index(n, delta);
        auto divs = divisors(n);
        std::sort(divs.rbegin(), divs.rend());
        for (i64 m : divs) {
            if (m < 3) continue;
            auto red = delta.reduce(static_cast<int>(m));
            auto subs = subgroups_containing_minus1(static_cast<int>(m));
            std::sort(subs.begin(), subs.end(),
                      [](const DeltaSubgroup& x, const DeltaSubgroup& y) { return x.order() > y.order(); });
            for (const auto& s : subs) {
                if (m == n && s == delta) continue;
                if (!is_subset(red, s.elements())) continue;
                CoverTarget t;
                t.level = static_cast<int>(m);
                t.delta = s;
                t.name = curve_name(s);
                t.genus = genus_of(t.level, s);
                i64 mu_y = projective_index(t.level, s);
                if (mu % mu_y) throw InternalError("cover degree is not integral");
                t.degree = static_cast<int>(mu / mu_y);
                t.same_level = m == n;
                out.push_back(t);
            }
        }
        return out;
    });
}

namespace {

// Gamma_X normal in Gamma_Y for a lower-level target.
bool is_galois(const CurveCtx& x, const CoverTarget& t) {
    if (t.same_level || t.degree == 2) return true;
    CosetAction ya(t.delta);
    for (const auto& h : schreier_generators(ya))
        for (const auto& g : x.gens) {
            IntMat2 c;
            if (!conjugate(h, g, c) || !is_member(c, x.delta)) return false;
        }
    return true;
}

enum class Exclusion { None, Cusp, NoLift, Bound, LiftCount };

const char* exclusion_name(Exclusion e) {
    switch (e) {
    case Exclusion::Cusp: return "cusp";
    case Exclusion::NoLift: return "no-lift";
    case Exclusion::Bound: return "bound";
    case Exclusion::LiftCount: return "lift-count";
    case Exclusion::None: return "none";
    }
    return "none";
}

}  // namespace

std::optional<Evidence> Classifier::cusp_rationality(int n, const DeltaSubgroup& delta) {
    auto ev = induced_involution(n, delta);
    if (!ev || ev->tag != tags::kCuspRationality) return std::nullopt;
    return ev;
}

std::optional<Evidence> Classifier::induced_involution(int n, const DeltaSubgroup& delta) {
    const CurveCtx& c = impl_->curve(delta);
    if (c.genus < 6 || !delta.is_intermediate()) return std::nullopt;
    const CurveCtx& x0 = impl_->curve(full_group(n));
    const auto& lv = *impl_->levels.get(key_of(n, full_group(n)), [&] { return build_level(*this, x0); });
    if (lv.g0 < 2) return std::nullopt;
    if (!lv.hyperelliptic && !lv.bielliptic) return std::nullopt;
    int deg = static_cast<int>(delta.index());
    int need = 2 * c.genus - 2;

    std::vector<int> rat_above(x0.action.cusp_count(), 0);
    for (const auto& cc : c.cusp_list)
        if (cc.rational()) ++rat_above[cusp_of_pair(x0.action, cc.x, cc.y)];

    auto exclude = [&](const X0Involution& v) -> Exclusion {
        for (int k = 0; k < x0.action.cusp_count(); ++k)
            if (rat_above[k] != rat_above[cusp_image(x0.action, v.matrix, k)]) return Exclusion::Cusp;
        IntMat2 lift;
        if (v.hall) {
            if (!descends(v.hall, delta)) return Exclusion::NoLift;
            lift = atkin_lehner(v.hall, n).matrix;
        } else {
            if (!normalizes(v.matrix, delta, c.gens)) return Exclusion::NoLift;
            lift = v.matrix;
        }
        if (deg * v.fixed < need) return Exclusion::Bound;
        for (i64 a : c.cosets) {
            IntMat2 m = a == 1 ? lift : diamond(a, n) * lift;
            if (automorphism_order(m, delta) != 2) continue;
            if (orbit_fixed_points(c.action, m).total() == need) return Exclusion::None;
        }
        return Exclusion::LiftCount;
    };

    std::vector<std::string> parts;
    std::set<Exclusion> used;
    if (lv.hyperelliptic) {
        if (lv.h) {
            Exclusion e = exclude(*lv.h);
            if (e == Exclusion::None) return std::nullopt;
            parts.push_back("hyperelliptic " + lv.h->name + ": " + exclusion_name(e));
            used.insert(e);
        } else if (deg * (2 * lv.g0 + 2) < need) {
            parts.push_back("hyperelliptic: bound");
            used.insert(Exclusion::Bound);
        } else {
            return std::nullopt;
        }
    }
    std::string fact_id;
    if (lv.bielliptic) {
        if (lv.b) {
            fact_id = lv.b_source;
            for (const auto& v : *lv.b) {
                Exclusion e = exclude(v);
                if (e == Exclusion::None) return std::nullopt;
                parts.push_back(v.name + ": " + exclusion_name(e));
                used.insert(e);
            }
        } else if (deg * (2 * lv.g0 - 2) < need) {
            parts.push_back("bielliptic: bound");
            used.insert(Exclusion::Bound);
        } else {
            return std::nullopt;
        }
    }
    Evidence ev;
    ev.kind = EvidenceKind::Elimination;
    ev.target = x0_name(n);
    ev.degree = deg;
    ev.fact_id = fact_id;
    ev.detail = "induced involution on " + x0_name(n) + " excluded: " + join(parts, "; ");
    if (used.count(Exclusion::LiftCount))
        ev.tag = tags::kEllipticElement;
    else if (used.count(Exclusion::Bound))
        ev.tag = tags::kFixedPointBound;
    else
        ev.tag = tags::kCuspRationality;
    return ev;
}

std::optional<Evidence> Classifier::unramified_cover(int n, const DeltaSubgroup& delta, const CoverTarget& t) {
    const CurveCtx& c = impl_->curve(delta);
    (void)n;
    if (c.genus < 6 || t.genus < 2 || t.degree < 2) return std::nullopt;
    if (subhyperelliptic(t.level, t.delta).value_or(true)) return std::nullopt;
    if (c.genus - 1 == t.degree * (t.genus - 1)) return std::nullopt;
    if (!is_galois(c, t)) return std::nullopt;
    Evidence ev;
    ev.tag = tags::kUnramifiedCover;
    ev.kind = EvidenceKind::Elimination;
    ev.target = t.name;
    ev.degree = t.degree;
    std::ostringstream os;
    os << "Galois cover of degree " << t.degree << " to " << t.name << " of genus " << t.genus << ": g-1 = "
       << c.genus - 1 << " != " << t.degree * (t.genus - 1);
    ev.detail = os.str();
    return ev;
}

std::optional<Evidence> Classifier::castelnuovo(int n, const DeltaSubgroup& delta, const CoverTarget& t) {
    const CurveCtx& c = impl_->curve(delta);
    (void)n;
    if (t.genus < 1 || t.degree < 2) return std::nullopt;
    if (t.degree % 2 == 0 && t.genus < 2) return std::nullopt;
    int bound = castelnuovo_bound(t.degree, t.genus, 2, 1);
    if (c.genus <= bound) return std::nullopt;
    Evidence ev;
    ev.tag = tags::kCastelnuovo;
    ev.kind = EvidenceKind::Elimination;
    ev.target = t.name;
    ev.degree = t.degree;
    std::ostringstream os;
    os << "degree " << t.degree << " map to " << t.name << " of genus " << t.genus << ": g = " << c.genus
       << " > " << bound;
    ev.detail = os.str();
    return ev;
}

std::optional<Evidence> Classifier::propagation(int n, const DeltaSubgroup& delta, const CoverTarget& t) {
    (void)n;
    (void)delta;
    if (!t.delta.is_intermediate() || t.genus < 2) return std::nullopt;
    auto rec = classify(t.level, t.delta);
    if (rec.status != CurveStatus::NotBielliptic) return std::nullopt;
    Evidence ev;
    ev.tag = tags::kPropagation;
    ev.kind = EvidenceKind::Elimination;
    ev.target = t.name;
    ev.degree = t.degree;
    ev.detail = "covers " + t.name + ", which is neither subhyperelliptic nor bielliptic";
    return ev;
}

std::vector<Evidence> Classifier::accola(int n, const DeltaSubgroup& delta) {
    const CurveCtx& c = impl_->curve(delta);
    std::vector<Evidence> out;
    if (!delta.is_intermediate() || (c.genus != 4 && c.genus != 5)) return out;
    if (subhyperelliptic(n, delta).value_or(true)) return out;
    for (const auto& t : cover_targets(n, delta)) {
        if (c.genus == 4 && t.degree == 3 && t.genus == 2 && is_galois(c, t)) {
            Evidence ev;
            ev.tag = tags::kAccolaR1;
            ev.kind = EvidenceKind::Certificate;
            ev.target = t.name;
            ev.degree = 3;
            ev.detail = "genus 4 with an unramified Galois cover of degree 3 to the genus 2 curve " + t.name;
            out.push_back(ev);
        }
        if (c.genus == 5 && t.degree == 2 && t.genus == 3 && subhyperelliptic(t.level, t.delta).value_or(false)) {
            Evidence ev;
            ev.tag = tags::kAccolaR2;
            ev.kind = EvidenceKind::Certificate;
            ev.target = t.name;
            ev.degree = 2;
            ev.detail = "genus 5, not hyperelliptic, double cover of the hyperelliptic genus 3 curve " + t.name;
            out.push_back(ev);
        }
    }
    if (c.genus == 4) {
        auto inv = involutions(n, delta);
        for (const auto& u : inv) {
            if (u.total() != 2) continue;
            for (const auto& v : inv) {
                if (&v == &u || v.total() != 2 * c.genus - 2) continue;
                if (!in_group(commutator(u.element.matrix, v.element.matrix), delta)) continue;
                IntMat2 uv = (u.element.matrix * v.element.matrix).primitive();
                if (in_group(uv, delta) || automorphism_order(uv, delta) != 2) continue;
                int guv = involution_quotient_genus(c.genus, orbit_fixed_points(c.action, uv).total());
                int gv = involution_quotient_genus(c.genus, v.total());
                if (2 + gv + guv != c.genus) continue;
                Evidence ev;
                ev.tag = tags::kAccolaR3;
                ev.kind = EvidenceKind::Certificate;
                ev.detail = "u = " + u.element.name() + " has genus 2 quotient; v = " + v.element.name() +
                            " commutes with u and induces the hyperelliptic involution of X/u";
                out.push_back(ev);
                break;
            }
            if (!out.empty() && out.back().tag == tags::kAccolaR3) break;
        }
    }
    return out;
}

namespace {

const std::vector<std::string>& precedence() {
    static const std::vector<std::string> order{tags::kCuspRationality, tags::kFixedPointBound,
                                                tags::kUnramifiedCover,  tags::kCastelnuovo,
                                                tags::kEllipticElement,  tags::kFact,
                                                tags::kPropagation};
    return order;
}

}  // namespace

ClassificationRecord Classifier::classify(int n, const DeltaSubgroup& delta) {
    if (delta.modulus() != n) throw InvalidInput("classify: Delta modulus differs from N");
    return impl_->records.get(key_of(n, delta), [&] {
        const auto& f = facts();
        const CurveCtx& c = impl_->curve(delta);
        ClassificationRecord rec;
        rec.n = n;
        rec.delta = delta;
        rec.genus = c.genus;
        auto note = [&](const char* tag, EvidenceKind kind, std::string detail, std::string fact_id = {}) {
            Evidence e;
            e.tag = tag;
            e.kind = kind;
            e.detail = std::move(detail);
            e.fact_id = std::move(fact_id);
            rec.evidence.push_back(e);
        };
        if (c.genus <= 1) {
            rec.status = c.genus == 0 ? CurveStatus::Rational : CurveStatus::Elliptic;
            rec.primary = tags::kGenus;
            note(tags::kGenus, EvidenceKind::Note, "genus " + std::to_string(c.genus));
            rec.quadratic_points = QuadraticPoints::Infinite;
            return rec;
        }

        for (const auto& inv : involutions(n, delta)) {
            if (inv.total() == 2 * c.genus - 2) rec.witnesses.push_back(inv);
            if (inv.total() == 2 * c.genus + 2) rec.hyperelliptic_involutions.push_back(inv);
        }
        for (const auto& w : rec.witnesses)
            if (c.genus >= 6 && w.element.hall == n && w.field_degree != 1)
                throw InternalError(rec.name() + ": Fricke-type witness not defined over Q in genus >= 6");

        bool hyper = subhyperelliptic(n, delta).value_or(false);
        if (!hyper && !rec.hyperelliptic_involutions.empty())
            throw InternalError(rec.name() + ": hyperelliptic involution found but tables say not hyperelliptic");
        rec.bielliptic = !rec.witnesses.empty();
        for (const auto& w : rec.witnesses)
            note(tags::kWitness, EvidenceKind::Witness,
                 w.element.name() + " = " + w.element.matrix.str() + " has " + std::to_string(w.total()) +
                     " fixed points");

        if (hyper) {
            rec.status = CurveStatus::Hyperelliptic;
            if (c.genus == 2) {
                rec.primary = tags::kGenus;
                note(tags::kGenus, EvidenceKind::Note, "genus 2");
            } else {
                rec.primary = tags::kHyperellipticFact;
                note(tags::kHyperellipticFact, EvidenceKind::Fact, f.get("intermediate.hyperelliptic").cite,
                     "intermediate.hyperelliptic");
            }
            for (const auto& h : rec.hyperelliptic_involutions)
                note(tags::kHyperellipticInvolution, EvidenceKind::Note,
                     h.element.name() + " = " + h.element.matrix.str() + " has " + std::to_string(h.total()) +
                         " fixed points");
            rec.quadratic_points = QuadraticPoints::Infinite;
            return rec;
        }

        std::vector<Evidence> certs = accola(n, delta);
        if (rec.bielliptic) {
            rec.status = CurveStatus::Bielliptic;
            rec.primary = tags::kWitness;
        } else {
            std::vector<Evidence> elims;
            for (const auto& id : f.ids_with_prefix("not_bielliptic.")) {
                const Fact& fact = f.get(id);
                if (!f.has_curve(id, n, delta.name())) continue;
                if (fact.kind == FactKind::Argument && !opts_.facts) {
                    rec.warnings.push_back("undecided: curated fact disabled (" + id + ")");
                    continue;
                }
                Evidence e;
                e.tag = tags::kFact;
                e.kind = EvidenceKind::Elimination;
                e.detail = fact.cite;
                e.fact_id = id;
                elims.push_back(e);
            }
            if (auto e = induced_involution(n, delta)) elims.push_back(*e);
            for (const auto& t : cover_targets(n, delta)) {
                if (auto e = unramified_cover(n, delta, t)) elims.push_back(*e);
                if (auto e = castelnuovo(n, delta, t)) elims.push_back(*e);
                if (auto e = propagation(n, delta, t)) elims.push_back(*e);
            }
            if (!elims.empty()) {
                if (!certs.empty())
                    throw InternalError(rec.name() + ": structural certificate and elimination both apply");
                rec.status = CurveStatus::NotBielliptic;
                for (const auto& tag : precedence()) {
                    auto it = std::find_if(elims.begin(), elims.end(), [&](const Evidence& e) { return e.tag == tag; });
                    if (it != elims.end()) {
                        rec.primary = tag;
                        std::stable_partition(elims.begin(), elims.end(),
                                              [&](const Evidence& e) { return e.tag == tag; });
                        break;
                    }
                }
                rec.evidence.insert(rec.evidence.end(), elims.begin(), elims.end());
            } else if (!certs.empty()) {
                rec.status = CurveStatus::Bielliptic;
                rec.bielliptic = true;
                rec.primary = certs.front().tag;
                if (rec.witnesses.empty())
                    certs.front().detail += "; witness involution exceptional, not matrix-representable";
            } else {
                rec.status = CurveStatus::Undecided;
            }
        }
        if (rec.bielliptic) rec.evidence.insert(rec.evidence.end(), certs.begin(), certs.end());

        if (rec.status == CurveStatus::Bielliptic) {
            if (f.has_level("ec.rank_zero", n)) {
                rec.quadratic_points = QuadraticPoints::Finite;
                note(tags::kRankZero, EvidenceKind::Fact, f.get("ec.rank_zero").cite, "ec.rank_zero");
            } else {
                bool covered = false;
                for (const auto& id : f.ids_with_prefix("quadratic_finite."))
                    if (f.has_curve(id, n, delta.name())) {
                        const Fact& fact = f.get(id);
                        if (fact.kind == FactKind::Argument && !opts_.facts) {
                            rec.warnings.push_back("finite-conditional: curated fact disabled (" + id + ")");
                            continue;
                        }
                        covered = true;
                        note(tags::kQuadraticFact, EvidenceKind::Fact, fact.cite, id);
                    }
                rec.quadratic_points = covered ? QuadraticPoints::Finite : QuadraticPoints::FiniteConditional;
            }
        } else if (rec.status == CurveStatus::NotBielliptic) {
            rec.quadratic_points = QuadraticPoints::Finite;
        } else {
            rec.quadratic_points = QuadraticPoints::NotApplicable;
        }
        if (rec.status == CurveStatus::Bielliptic && rec.witnesses.empty() && certs.empty())
            throw InternalError(rec.name() + ": bielliptic without witness or certificate");
        if (rec.eliminated() && rec.bielliptic) throw InternalError(rec.name() + ": witness and elimination");
        return rec;
    });
}

std::vector<ClassificationRecord> Classifier::census(int max_n) {
    std::vector<std::pair<int, DeltaSubgroup>> items;
    for (int n : census_levels(max_n)) {
        if (n < 3) continue;
        for (const auto& d : intermediate_subgroups(n)) items.emplace_back(n, d);
    }
    std::vector<ClassificationRecord> out(items.size());
    unsigned workers = opts_.threads ? opts_.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
    // Largest groups first so that propagation targets are usually ready.
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return items[a].second.order() > items[b].second.order();
    });
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            std::size_t k = next++;
            if (k >= order.size()) return;
            std::size_t i = order[k];
            try {
                out[i] = classify(items[i].first, items[i].second);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = order.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

ClassificationRecord classify_curve(int n, const DeltaSubgroup& delta, const ClassifierOptions& options) {
    Classifier c(options);
    return c.classify(n, delta);
}

std::vector<ClassificationRecord> census(int max_n, const ClassifierOptions& options) {
    Classifier c(options);
    return c.census(max_n);
}

std::optional<Evidence> eliminate_by_cusp_rationality(int n, const DeltaSubgroup& delta) {
    Classifier c;
    return c.cusp_rationality(n, delta);
}

std::optional<Evidence> eliminate_by_unramified_cover(int n, const DeltaSubgroup& delta, const CoverTarget& target) {
    Classifier c;
    return c.unramified_cover(n, delta, target);
}

std::vector<Evidence> accola_certificates(int n, const DeltaSubgroup& delta) {
    Classifier c;
    return c.accola(n, delta);
}

}  // namespace modcurve
