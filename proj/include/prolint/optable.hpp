#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prolint/dialect.hpp"

namespace prolint {

enum class OpSpecifier { xfx, xfy, yfx, fy, fx, xf, yf };

const char* specifier_name(OpSpecifier spec);
std::optional<OpSpecifier> parse_specifier(std::string_view name);

constexpr bool is_prefix_specifier(OpSpecifier s) {
    return s == OpSpecifier::fy || s == OpSpecifier::fx;
}
constexpr bool is_infix_specifier(OpSpecifier s) {
    return s == OpSpecifier::xfx || s == OpSpecifier::xfy || s == OpSpecifier::yfx;
}
constexpr bool is_postfix_specifier(OpSpecifier s) {
    return s == OpSpecifier::xf || s == OpSpecifier::yf;
}

struct OpDef {
    std::string name;
    int priority = 0;  // 1..1200
    OpSpecifier specifier = OpSpecifier::xfx;

    bool operator==(const OpDef&) const = default;
};

struct OpError {
    std::string message;
};

// Immutable snapshot of operator definitions. A name holds at most one
// prefix definition and at most one infix-or-postfix definition. Updates
// return new table values.
class OperatorTable {
public:
    static OperatorTable standard(DialectProfile profile);

    std::optional<OpDef> prefix(std::string_view name) const;
    std::optional<OpDef> infix_postfix(std::string_view name) const;
    bool is_operator(std::string_view name) const;

    // op/3 semantics: priority 0 removes, otherwise insert or overwrite in
    // the slot selected by the specifier.
    std::optional<OpError> apply(int priority, OpSpecifier spec, std::string_view name,
                                 OperatorTable& out) const;

    std::vector<OpDef> all() const;  // deterministic, sorted by name

private:
    std::map<std::string, OpDef, std::less<>> prefix_;
    std::map<std::string, OpDef, std::less<>> infix_postfix_;
};

// Convenience wrapper applying one op/3 directive with one or many names.
struct OpDirectiveResult {
    OperatorTable table;
    std::optional<OpError> error;
};
OpDirectiveResult apply_op_directive(const OperatorTable& table, int priority, OpSpecifier spec,
                                     const std::vector<std::string>& names);

}  // namespace prolint
