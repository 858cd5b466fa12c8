#pragma once

#include <string>

#include "cheese/analysis.hpp"
#include "cheese/cheese.hpp"
#include "cheese/classicalise.hpp"

namespace cheese {

// JSON wire formats. Numbers are emitted with the shortest round-trip
// decimal representation and object keys in fixed order, so equal values
// always serialize to identical bytes.
//
//   cheese    {"outer":{"cx":_,"cy":_,"r":_},"discs":[{"cx":_,"cy":_,"r":_},...]}
//   trace     {"steps":[{"kind":"merge"|"shrink","indices":[...],"after":<cheese>},...],
//              "overall":<assignment>}
//   assignment{"complement":"complement","discs":[<index or "complement">,...]}
//   rational  {"poly":[[re,im],...],"poles":[{"p":[re,im],"order":k,"coef":[re,im]},...]}
//
// Parsers throw InvalidInputError on malformed input.

std::string cheese_to_json(const SwissCheese& c);
SwissCheese cheese_from_json(const std::string& text);

std::string trace_to_json(const Trace& t);
TraceRecord trace_record_from_json(const std::string& text);

std::string rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const std::string& text);

}  // namespace cheese
