#pragma once

#include <string>
#include <vector>

#include "prolint/source.hpp"

namespace prolint {

enum class Severity { warning, error };

struct Diagnostic {
    std::string rule_id;
    Severity severity = Severity::warning;
    std::string message;
    std::string file;
    SourceSpan span;
};

// Deterministic output order: (file, byte_start, rule_id).
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

// "file:line:col: severity rule_id message"
std::string format_diagnostic(const Diagnostic& d, bool color = false);

}  // namespace prolint
