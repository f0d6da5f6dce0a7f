#include "prolint/optable.hpp"

#include <algorithm>

namespace prolint {

const char* specifier_name(OpSpecifier spec) {
    switch (spec) {
        case OpSpecifier::xfx: return "xfx";
        case OpSpecifier::xfy: return "xfy";
        case OpSpecifier::yfx: return "yfx";
        case OpSpecifier::fy: return "fy";
        case OpSpecifier::fx: return "fx";
        case OpSpecifier::xf: return "xf";
        case OpSpecifier::yf: return "yf";
    }
    return "?";
}

std::optional<OpSpecifier> parse_specifier(std::string_view name) {
    if (name == "xfx") return OpSpecifier::xfx;
    if (name == "xfy") return OpSpecifier::xfy;
    if (name == "yfx") return OpSpecifier::yfx;
    if (name == "fy") return OpSpecifier::fy;
    if (name == "fx") return OpSpecifier::fx;
    if (name == "xf") return OpSpecifier::xf;
    if (name == "yf") return OpSpecifier::yf;
    return std::nullopt;
}

namespace {

struct TableEntry {
    const char* name;
    int priority;
    OpSpecifier spec;
};

constexpr TableEntry kIsoOperators[] = {
    {":-", 1200, OpSpecifier::xfx}, {"-->", 1200, OpSpecifier::xfx},
    {":-", 1200, OpSpecifier::fx},  {"?-", 1200, OpSpecifier::fx},
    {";", 1100, OpSpecifier::xfy},  {"->", 1050, OpSpecifier::xfy},
    {",", 1000, OpSpecifier::xfy},  {"\\+", 900, OpSpecifier::fy},
    {"=", 700, OpSpecifier::xfx},   {"\\=", 700, OpSpecifier::xfx},
    {"==", 700, OpSpecifier::xfx},  {"\\==", 700, OpSpecifier::xfx},
    {"@<", 700, OpSpecifier::xfx},  {"@>", 700, OpSpecifier::xfx},
    {"@=<", 700, OpSpecifier::xfx}, {"@>=", 700, OpSpecifier::xfx},
    {"=..", 700, OpSpecifier::xfx}, {"is", 700, OpSpecifier::xfx},
    {"=:=", 700, OpSpecifier::xfx}, {"=\\=", 700, OpSpecifier::xfx},
    {"<", 700, OpSpecifier::xfx},   {">", 700, OpSpecifier::xfx},
    {"=<", 700, OpSpecifier::xfx},  {">=", 700, OpSpecifier::xfx},
    {"+", 500, OpSpecifier::yfx},   {"-", 500, OpSpecifier::yfx},
    {"/\\", 500, OpSpecifier::yfx}, {"\\/", 500, OpSpecifier::yfx},
    {"*", 400, OpSpecifier::yfx},   {"/", 400, OpSpecifier::yfx},
    {"//", 400, OpSpecifier::yfx},  {"rem", 400, OpSpecifier::yfx},
    {"mod", 400, OpSpecifier::yfx}, {"div", 400, OpSpecifier::yfx},
    {"<<", 400, OpSpecifier::yfx},  {">>", 400, OpSpecifier::yfx},
    {"**", 200, OpSpecifier::xfx},  {"^", 200, OpSpecifier::xfy},
    {"-", 200, OpSpecifier::fy},    {"\\", 200, OpSpecifier::fy},
};

constexpr TableEntry kSwiExtraOperators[] = {
    {"dynamic", 1150, OpSpecifier::fx},
    {"discontiguous", 1150, OpSpecifier::fx},
    {"initialization", 1150, OpSpecifier::fx},
    {"meta_predicate", 1150, OpSpecifier::fx},
    {"module_transparent", 1150, OpSpecifier::fx},
    {"multifile", 1150, OpSpecifier::fx},
    {"public", 1150, OpSpecifier::fx},
    {"thread_local", 1150, OpSpecifier::fx},
    {"table", 1150, OpSpecifier::fx},
    {"volatile", 1150, OpSpecifier::fx},
    {"|", 1100, OpSpecifier::xfy},
    {"*->", 1050, OpSpecifier::xfy},
    {"as", 700, OpSpecifier::xfx},
    {">:<", 700, OpSpecifier::xfx},
    {":<", 700, OpSpecifier::xfx},
    {"=@=", 700, OpSpecifier::xfx},
    {"\\=@=", 700, OpSpecifier::xfx},
    {"xor", 500, OpSpecifier::yfx},
    {"rdiv", 400, OpSpecifier::yfx},
    {":", 200, OpSpecifier::xfy},
    {"+", 200, OpSpecifier::fy},
    {"$", 1, OpSpecifier::fx},
};

}  // namespace

OperatorTable OperatorTable::standard(DialectProfile profile) {
    OperatorTable table;
    auto add = [&table](const TableEntry& e) {
        OpDef def{e.name, e.priority, e.spec};
        if (is_prefix_specifier(e.spec))
            table.prefix_[e.name] = std::move(def);
        else
            table.infix_postfix_[e.name] = std::move(def);
    };
    for (const auto& e : kIsoOperators) add(e);
    if (profile == DialectProfile::swi)
        for (const auto& e : kSwiExtraOperators) add(e);
    return table;
}

std::optional<OpDef> OperatorTable::prefix(std::string_view name) const {
    auto it = prefix_.find(name);
    if (it == prefix_.end()) return std::nullopt;
    return it->second;
}

std::optional<OpDef> OperatorTable::infix_postfix(std::string_view name) const {
    auto it = infix_postfix_.find(name);
    if (it == infix_postfix_.end()) return std::nullopt;
    return it->second;
}

bool OperatorTable::is_operator(std::string_view name) const {
    return prefix_.count(name) > 0 || infix_postfix_.count(name) > 0;
}

std::optional<OpError> OperatorTable::apply(int priority, OpSpecifier spec, std::string_view name,
                                            OperatorTable& out) const {
    if (priority < 0 || priority > 1200)
        return OpError{"operator priority " + std::to_string(priority) + " outside 0..1200"};
    if (name == ",") return OpError{"the comma operator cannot be modified"};
    if (name == "[]" || name == "{}")
        return OpError{"block operators are not supported: " + std::string(name)};
    if (name == "|" && (is_prefix_specifier(spec) || (priority > 0 && priority < 1001)))
        return OpError{"'|' may only be an infix operator with priority >= 1001"};

    out = *this;
    if (priority == 0) {
        if (is_prefix_specifier(spec))
            out.prefix_.erase(std::string(name));
        else
            out.infix_postfix_.erase(std::string(name));
        return std::nullopt;
    }
    if (is_prefix_specifier(spec)) {
        out.prefix_[std::string(name)] = OpDef{std::string(name), priority, spec};
        return std::nullopt;
    }
    // one infix-or-postfix slot per name
    auto it = infix_postfix_.find(name);
    if (it != infix_postfix_.end()) {
        bool had_infix = is_infix_specifier(it->second.specifier);
        bool now_infix = is_infix_specifier(spec);
        if (had_infix != now_infix)
            return OpError{"'" + std::string(name) +
                           "' cannot hold infix and postfix definitions simultaneously"};
    }
    out.infix_postfix_[std::string(name)] = OpDef{std::string(name), priority, spec};
    return std::nullopt;
}

std::vector<OpDef> OperatorTable::all() const {
    std::vector<OpDef> defs;
    for (const auto& [name, def] : prefix_) defs.push_back(def);
    for (const auto& [name, def] : infix_postfix_) defs.push_back(def);
    std::sort(defs.begin(), defs.end(), [](const OpDef& a, const OpDef& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.specifier < b.specifier;
    });
    return defs;
}

OpDirectiveResult apply_op_directive(const OperatorTable& table, int priority, OpSpecifier spec,
                                     const std::vector<std::string>& names) {
    OpDirectiveResult result{table, std::nullopt};
    for (const std::string& name : names) {
        OperatorTable next;
        if (auto err = result.table.apply(priority, spec, name, next)) {
            result.error = err;
            return result;
        }
        result.table = std::move(next);
    }
    return result;
}

}  // namespace prolint
