#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modcurve/classify.hpp"

namespace modcurve::cli {

using Json = nlohmann::ordered_json;

Json to_json(const DeltaSubgroup& delta);
Json to_json(const NormalizerElement& e);
Json to_json(const InvolutionData& inv);
Json to_json(const Evidence& e);
Json to_json(const ClassificationRecord& rec);
Json to_json(const FixedPointSet& set);
Json to_json(const LiftReport& rep);

Json envelope(const std::string& command, Json results, const std::vector<std::string>& warnings);

std::string csv_header();
std::string csv_row(const ClassificationRecord& rec);
std::string csv_escape(const std::string& field);

std::string text_record(const ClassificationRecord& rec);
std::string text_census(const std::vector<ClassificationRecord>& recs);
std::string text_subgroups(int n, const std::vector<DeltaSubgroup>& subs);
std::string text_fixed_points(const FixedPointSet& set);
std::string text_lift(const LiftReport& rep);

}  // namespace modcurve::cli
