#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggn/structure_solver.hpp"

namespace ggn {

enum class Method { Solver, Formula, Oracle };
std::string to_string(Method m);

/// One computed (group, game) value as reported by the CLI.
struct OutputRecord {
    std::string group;
    /// Decimal digits; family orders outgrow 64 bits quickly.
    std::string order;
    GameKind kind;
    unsigned nim;
    Method method;
    std::optional<std::string> case_label;

    std::string outcome() const;
};

enum class OutputFormat { Text, Csv, Json };

/// text: aligned table with nim as *k; csv: header
/// `group,order,game,nim,outcome,method,case`; json: array of objects with keys
/// group, order, kind, nim, outcome, method, case_label.
std::string emit(const std::vector<OutputRecord>& records, OutputFormat format);

/// One node per structure class labeled "order/parity/type", one edge per option.
std::string export_dot(const GameReport& report, std::size_t group_order);

}  // namespace ggn
