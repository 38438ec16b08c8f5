#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modcurve/atkinlehner.hpp"
#include "modcurve/facts.hpp"
#include "modcurve/fixedpoints.hpp"

namespace modcurve {

enum class CurveStatus { Rational, Elliptic, Hyperelliptic, Bielliptic, NotBielliptic, Undecided };
enum class QuadraticPoints { Infinite, Finite, FiniteConditional, NotApplicable };

std::string to_string(CurveStatus s);
std::string to_string(QuadraticPoints q);

enum class EvidenceKind { Witness, Elimination, Certificate, Fact, Note };

// Tags used in Evidence::tag.
namespace tags {
inline constexpr const char* kGenus = "genus";
inline constexpr const char* kWitness = "witness";
inline constexpr const char* kHyperellipticInvolution = "hyperelliptic-involution";
inline constexpr const char* kHyperellipticFact = "hyperelliptic-fact";
inline constexpr const char* kCuspRationality = "cusp-rationality";
inline constexpr const char* kFixedPointBound = "fixed-point-bound";
inline constexpr const char* kEllipticElement = "elliptic-element";
inline constexpr const char* kUnramifiedCover = "unramified-cover";
inline constexpr const char* kCastelnuovo = "castelnuovo";
inline constexpr const char* kPropagation = "propagation";
inline constexpr const char* kFact = "fact";
inline constexpr const char* kAccolaR1 = "accola-r1";
inline constexpr const char* kAccolaR2 = "accola-r2";
inline constexpr const char* kAccolaR3 = "accola-r3";
inline constexpr const char* kRankZero = "rank-zero";
inline constexpr const char* kQuadraticFact = "quadratic-fact";
}  // namespace tags

struct Evidence {
    std::string tag;
    EvidenceKind kind = EvidenceKind::Note;
    std::string detail;
    std::string target;  // cover target name, when the rule uses a cover
    int degree = 0;      // cover degree
    std::string fact_id; // curated fact behind the rule, if any
};

// Automorphism of X_Delta(N) represented by a normalizer element, with its fixed points.
struct InvolutionData {
    NormalizerElement element;
    FixedCount fixed;
    int field_degree = 0;  // 1 for diamonds, index(Delta) for [a]Ŵ_N, 0 when not tracked
    int total() const { return fixed.total(); }
};

// Curve that X maps to by a natural projection.
struct CoverTarget {
    int level = 1;
    DeltaSubgroup delta;
    std::string name;
    int genus = 0;
    int degree = 1;
    bool same_level = true;
};

struct ClassificationRecord {
    int n = 1;
    DeltaSubgroup delta;
    int genus = 0;
    CurveStatus status = CurveStatus::Undecided;
    bool bielliptic = false;  // a bielliptic involution is certified (also for the hyperelliptic case)
    std::vector<InvolutionData> witnesses;
    std::vector<InvolutionData> hyperelliptic_involutions;
    std::vector<Evidence> evidence;
    std::string primary;  // tag of the deciding rule
    QuadraticPoints quadratic_points = QuadraticPoints::NotApplicable;
    std::vector<std::string> warnings;

    std::string label() const { return delta.name(); }
    std::string name() const;  // "X_Δ1(21)", "X0(37)"
    bool has_tag(const std::string& tag) const;
    std::vector<const Evidence*> with_tag(const std::string& tag) const;
    std::vector<std::string> evidence_tags() const;  // unique, primary first
    bool eliminated() const;
};

std::string curve_name(const DeltaSubgroup& delta);

struct ClassifierOptions {
    bool facts = true;     // argument facts enabled
    unsigned threads = 0;  // 0 = hardware concurrency
};

class Classifier {
public:
    explicit Classifier(ClassifierOptions options = {});
    ~Classifier();
    Classifier(const Classifier&) = delete;
    Classifier& operator=(const Classifier&) = delete;

    const ClassifierOptions& options() const { return opts_; }
    const FactTable& facts() const;

    ClassificationRecord classify(int n, const DeltaSubgroup& delta);
    std::vector<ClassificationRecord> census(int max_n);

    // Individual rules; each returns evidence when it fires.
    std::optional<Evidence> cusp_rationality(int n, const DeltaSubgroup& delta);
    std::optional<Evidence> induced_involution(int n, const DeltaSubgroup& delta);
    std::optional<Evidence> propagation(int n, const DeltaSubgroup& delta, const CoverTarget& target);
    std::optional<Evidence> unramified_cover(int n, const DeltaSubgroup& delta, const CoverTarget& target);
    std::optional<Evidence> castelnuovo(int n, const DeltaSubgroup& delta, const CoverTarget& target);
    std::vector<Evidence> accola(int n, const DeltaSubgroup& delta);

    std::vector<CoverTarget> cover_targets(int n, const DeltaSubgroup& delta);
    std::vector<InvolutionData> involutions(int n, const DeltaSubgroup& delta);
    // Hyperelliptic knowledge from the reference tables: nullopt when no table covers the curve.
    std::optional<bool> subhyperelliptic(int n, const DeltaSubgroup& delta);
    int genus_of(int n, const DeltaSubgroup& delta);

private:
    struct Impl;
    ClassifierOptions opts_;
    std::unique_ptr<Impl> impl_;
};

// Levels N <= max_n for which X0(N) is subhyperelliptic or bielliptic.
std::vector<int> census_levels(int max_n);

ClassificationRecord classify_curve(int n, const DeltaSubgroup& delta, const ClassifierOptions& options = {});
std::vector<ClassificationRecord> census(int max_n, const ClassifierOptions& options = {});

std::optional<Evidence> eliminate_by_cusp_rationality(int n, const DeltaSubgroup& delta);
std::optional<Evidence> eliminate_by_unramified_cover(int n, const DeltaSubgroup& delta, const CoverTarget& target);
std::vector<Evidence> accola_certificates(int n, const DeltaSubgroup& delta);

// Facts toggle from MODCURVE_FACTS ("on"/"off"), if set.
std::optional<bool> facts_from_env();

}  // namespace modcurve
