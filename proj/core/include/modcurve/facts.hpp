#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modcurve/matrix.hpp"

namespace modcurve {

enum class FactKind { Reference, Argument };

struct Fact {
    std::string id;
    FactKind kind = FactKind::Reference;
    std::string cite;
    std::map<std::string, std::string> values;

    const std::string* value(const std::string& key) const;
};

// Item of an involution list: either W_d or an explicit matrix.
struct InvolutionSpec {
    i64 hall = 0;
    std::optional<IntMat2> matrix;
};

struct CurveRef {
    int n = 0;
    std::string label;
    bool operator==(const CurveRef& o) const = default;
};

class FactError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class FactTable {
public:
    static FactTable parse(std::string_view text);
    // Table compiled in from data/facts.txt.
    static const FactTable& builtin();

    const std::vector<Fact>& all() const { return facts_; }
    const Fact* find(std::string_view id) const;
    const Fact& get(std::string_view id) const;

    std::vector<int> levels(std::string_view id) const;
    std::vector<CurveRef> curves(std::string_view id) const;
    std::vector<InvolutionSpec> involutions(std::string_view id) const;
    bool has_level(std::string_view id, int n) const;
    bool has_curve(std::string_view id, int n, const std::string& label) const;
    // Ids of all facts with the given prefix, in file order.
    std::vector<std::string> ids_with_prefix(std::string_view prefix) const;

private:
    std::vector<Fact> facts_;
};

std::vector<int> parse_level_list(const std::string& text);
std::vector<CurveRef> parse_curve_list(const std::string& text);
std::vector<InvolutionSpec> parse_involution_list(const std::string& text);

}  // namespace modcurve
