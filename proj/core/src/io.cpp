#include "cheese/io.hpp"

#include <cmath>

#include <json.hpp>

#include "cheese/error.hpp"

namespace cheese {

namespace {

using nlohmann::ordered_json;

double number_field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw InvalidInputError(std::string("json: missing or non-numeric field '") + key + "'");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string("json: non-finite field '") + key + "'");
  }
  return v;
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidInputError(std::string("json: ") + e.what());
  }
}

ordered_json disc_to_json(Point center, double radius) {
  return ordered_json{{"cx", center.x}, {"cy", center.y}, {"r", radius}};
}

std::complex<double> complex_from_json(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInputError(std::string("json: ") + what + " must be a [re, im] pair");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InvalidInputError(std::string("json: non-finite ") + what);
  }
  return {re, im};
}

ordered_json complex_to_json(std::complex<double> z) { return ordered_json{z.real(), z.imag()}; }

ordered_json assignment_to_json(const std::vector<Region>& disc_targets) {
  ordered_json j;
  j["complement"] = "complement";
  ordered_json discs = ordered_json::array();
  for (const Region& r : disc_targets) {
    if (r.is_complement()) {
      discs.push_back("complement");
    } else {
      discs.push_back(r.disc_index());
    }
  }
  j["discs"] = discs;
  return j;
}

std::vector<Region> assignment_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("complement") || !j.contains("discs") ||
      j.at("complement") != "complement" || !j.at("discs").is_array()) {
    throw InvalidInputError("json: malformed assignment object");
  }
  std::vector<Region> out;
  for (const ordered_json& entry : j.at("discs")) {
    if (entry.is_string() && entry.get<std::string>() == "complement") {
      out.push_back(Region::complement());
    } else if (entry.is_number_unsigned()) {
      out.push_back(Region::disc(entry.get<std::size_t>()));
    } else {
      throw InvalidInputError("json: assignment entries must be indices or \"complement\"");
    }
  }
  return out;
}

ordered_json cheese_to_json_value(const SwissCheese& c) {
  ordered_json j;
  j["outer"] = disc_to_json(c.outer.center, c.outer.radius);
  ordered_json discs = ordered_json::array();
  for (const OpenDisc& d : c.discs) {
    discs.push_back(disc_to_json(d.center, d.radius));
  }
  j["discs"] = discs;
  return j;
}

SwissCheese cheese_from_json_value(const ordered_json& j) {
  if (!j.is_object() || !j.contains("outer") || !j.contains("discs") ||
      !j.at("discs").is_array()) {
    throw InvalidInputError("json: cheese must have an 'outer' object and a 'discs' array");
  }
  SwissCheese c;
  const ordered_json& outer = j.at("outer");
  c.outer = ClosedDisc{{number_field(outer, "cx"), number_field(outer, "cy")},
                       number_field(outer, "r")};
  if (c.outer.radius <= 0.0) {
    throw InvalidInputError("json: outer radius must be > 0");
  }
  for (const ordered_json& dj : j.at("discs")) {
    OpenDisc d{{number_field(dj, "cx"), number_field(dj, "cy")}, number_field(dj, "r")};
    if (d.radius < 0.0) {
      throw InvalidInputError("json: disc radius must be >= 0");
    }
    c.discs.push_back(d);
  }
  return c;
}

}  // namespace

std::string cheese_to_json(const SwissCheese& c) { return cheese_to_json_value(c).dump(); }

SwissCheese cheese_from_json(const std::string& text) {
  return cheese_from_json_value(parse(text));
}

std::string trace_to_json(const Trace& t) {
  ordered_json j;
  ordered_json steps = ordered_json::array();
  for (const Step& st : t.steps) {
    ordered_json sj;
    if (const auto* ov = std::get_if<OverlapPair>(&st.violation)) {
      sj["kind"] = "merge";
      sj["indices"] = ordered_json::array({ov->i, ov->j});
    } else {
      sj["kind"] = "shrink";
      sj["indices"] = ordered_json::array({std::get<PokesOut>(st.violation).i});
    }
    sj["after"] = cheese_to_json_value(st.after);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["overall"] = assignment_to_json(t.overall.disc_targets);
  return j.dump();
}

TraceRecord trace_record_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array() ||
      !j.contains("overall")) {
    throw InvalidInputError("json: trace must have a 'steps' array and an 'overall' assignment");
  }
  TraceRecord rec;
  for (const ordered_json& sj : j.at("steps")) {
    if (!sj.is_object() || !sj.contains("kind") || !sj.contains("indices") ||
        !sj.at("indices").is_array() || !sj.contains("after")) {
      throw InvalidInputError("json: malformed trace step");
    }
    StepRecord sr;
    const std::string kind = sj.at("kind").get<std::string>();
    if (kind == "merge") {
      sr.is_merge = true;
    } else if (kind == "shrink") {
      sr.is_merge = false;
    } else {
      throw InvalidInputError("json: step kind must be 'merge' or 'shrink'");
    }
    for (const ordered_json& idx : sj.at("indices")) {
      if (!idx.is_number_unsigned()) {
        throw InvalidInputError("json: step indices must be non-negative integers");
      }
      sr.indices.push_back(idx.get<std::size_t>());
    }
    if (sr.indices.size() != (sr.is_merge ? 2u : 1u)) {
      throw InvalidInputError("json: merge steps carry two indices, shrink steps one");
    }
    sr.after = cheese_from_json_value(sj.at("after"));
    rec.steps.push_back(std::move(sr));
  }
  rec.overall_disc_targets = assignment_from_json(j.at("overall"));
  return rec;
}

std::string rational_to_json(const RationalFunction& f) {
  ordered_json j;
  ordered_json poly = ordered_json::array();
  for (const std::complex<double>& coeff : f.poly) {
    poly.push_back(complex_to_json(coeff));
  }
  j["poly"] = poly;
  ordered_json poles = ordered_json::array();
  for (const PoleTerm& t : f.poles) {
    ordered_json tj;
    tj["p"] = complex_to_json(t.pole);
    tj["order"] = t.order;
    tj["coef"] = complex_to_json(t.coefficient);
    poles.push_back(tj);
  }
  j["poles"] = poles;
  return j.dump();
}

RationalFunction rational_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_object() || !j.contains("poly") || !j.at("poly").is_array() ||
      !j.contains("poles") || !j.at("poles").is_array()) {
    throw InvalidInputError("json: rational function must have 'poly' and 'poles' arrays");
  }
  RationalFunction f;
  for (const ordered_json& cj : j.at("poly")) {
    f.poly.push_back(complex_from_json(cj, "polynomial coefficient"));
  }
  for (const ordered_json& tj : j.at("poles")) {
    if (!tj.is_object() || !tj.contains("p") || !tj.contains("order") || !tj.contains("coef") ||
        !tj.at("order").is_number_unsigned()) {
      throw InvalidInputError("json: malformed pole term");
    }
    PoleTerm t;
    t.pole = complex_from_json(tj.at("p"), "pole location");
    t.order = tj.at("order").get<int>();
    if (t.order < 1) {
      throw InvalidInputError("json: pole order must be >= 1");
    }
    t.coefficient = complex_from_json(tj.at("coef"), "pole coefficient");
    f.poles.push_back(t);
  }
  return f;
}

}  // namespace cheese
