#pragma once

#include <string>

#include <json.hpp>

#include "endsym/verifier.hpp"

namespace endsym {

/// Integers become JSON numbers when they fit in 64 bits and decimal strings otherwise.
nlohmann::json integer_json(const Integer& v);
nlohmann::json sequence_json(const QuotientSequence& q);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const TypeCatalog& catalog);
nlohmann::json to_json(const TableDocument& table);

/// Columns value,parity,marginal,core,exceptions; one line per type. Core entries are
/// joined with '.', exceptions are alpha/beta joined with ';' and appear on the first
/// line of each (value, parity) group.
std::string table_csv(const TableDocument& table);

/// Aligned plain-text rendering in the layout of the printed table.
std::string table_text(const TableDocument& table);

std::string report_text(const VerificationReport& report);

}  // namespace endsym
