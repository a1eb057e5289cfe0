#pragma once

// JSON encodings:
//   component : {"kind": ..., "dim": d, "r": r?, "vertices": [[x, y], ...]?}
//   sum space : {"p": p (0 = c0-sum, "inf" for the dual of an l1-sum), "components": [...]}
//   sequences : {"entries": [{"index": n, "coords": [...]}, ...]}

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/sum_spaces.hpp"

namespace lpsum::json_io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void dump(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        dump(it.value(), os, indent + 2);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Flat numeric arrays stay on one line.
      bool flat = true;
      for (const Json& e : j) flat = flat && e.is_number();
      os << '[';
      bool first = true;
      for (const Json& e : j) {
        if (!first) os << (flat ? ", " : ",");
        first = false;
        if (!flat) os << '\n' << pad;
        dump(e, os, indent + 2);
      }
      if (!flat) os << '\n' << close;
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      os << number(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

inline double read_number(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
  }
  throw ValidationError(std::string("expected a number for ") + what);
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

// Pretty-printed document with every float written to 17 significant digits.
inline std::string dump(const Json& j) {
  std::ostringstream os;
  detail::dump(j, os, 0);
  os << '\n';
  return os.str();
}

inline Json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline Json coords(const std::vector<double>& c) {
  Json a = Json::array();
  for (double v : c) a.push_back(number(v));
  return a;
}

inline Json to_json(const Interval& i) { return Json{{"lo", number(i.lo)}, {"hi", number(i.hi)}}; }

inline Json to_json(const ComponentSpace& s) {
  Json j{{"kind", kind_name(s.kind())}, {"dim", s.dim()}};
  if (s.kind() == Kind::lr) j["r"] = s.r();
  if (s.kind() == Kind::polygon) {
    Json v = Json::array();
    for (const Point2& p : s.vertices()) v.push_back(coords({p[0], p[1]}));
    j["vertices"] = v;
  }
  return j;
}

inline ComponentSpace component_from_json(const Json& j) {
  const std::string kind = detail::field(j, "kind").get<std::string>();
  if (kind == "polygon") {
    std::vector<Point2> verts;
    for (const Json& v : detail::field(j, "vertices")) {
      if (!v.is_array() || v.size() != 2) throw ValidationError("polygon vertices must be [x, y] pairs");
      verts.push_back({detail::read_number(v[0], "vertex"), detail::read_number(v[1], "vertex")});
    }
    if (j.contains("dim") && j.at("dim").get<long long>() != 2) throw ValidationError("polygon components have dim 2");
    return ComponentSpace::polygon(std::move(verts));
  }
  const long long dim = detail::field(j, "dim").get<long long>();
  if (dim < 1) throw ValidationError("dim must be positive");
  const auto d = static_cast<std::size_t>(dim);
  if (kind == "euclidean") return ComponentSpace::euclidean(d);
  if (kind == "l1") return ComponentSpace::l1(d);
  if (kind == "linf") return ComponentSpace::linf(d);
  if (kind == "lr") return ComponentSpace::lr(d, detail::read_number(detail::field(j, "r"), "r"));
  throw ValidationError("unknown component kind \"" + kind + "\"");
}

inline Json to_json(const SumSpace& X) {
  Json comps = Json::array();
  for (const ComponentSpace& s : X.components()) comps.push_back(to_json(s));
  return Json{{"p", number(X.p())}, {"components", comps}};
}

inline SumSpace space_from_json(const Json& j) {
  const double p = detail::read_number(detail::field(j, "p"), "p");
  std::vector<ComponentSpace> comps;
  const Json& cs = detail::field(j, "components");
  if (!cs.is_array() || cs.empty()) throw ValidationError("components must be a non-empty array");
  for (const Json& c : cs) comps.push_back(component_from_json(c));
  return SumSpace(p, std::move(comps));
}

template <class Tag>
Json to_json(const Sequence<Tag>& x) {
  Json entries = Json::array();
  for (const auto& e : x.entries) entries.push_back(Json{{"index", e.index}, {"coords", coords(e.value.coords)}});
  return Json{{"entries", entries}};
}

template <class Tag>
Sequence<Tag> sequence_from_json(const Json& j) {
  Sequence<Tag> out;
  std::size_t last = 0;
  for (const Json& e : detail::field(j, "entries")) {
    const long long index = detail::field(e, "index").get<long long>();
    if (index < 1) throw ValidationError("entry indices start at 1");
    if (static_cast<std::size_t>(index) <= last) throw ValidationError("entry indices must be strictly increasing");
    last = static_cast<std::size_t>(index);
    std::vector<double> c;
    for (const Json& v : detail::field(e, "coords")) c.push_back(detail::read_number(v, "coords"));
    out.entries.push_back({last, Coords<Tag>(std::move(c))});
  }
  return out;
}

inline SumVector vector_from_json(const Json& j) { return sequence_from_json<VectorTag>(j); }
inline SumFunctional functional_from_json(const Json& j) { return sequence_from_json<FunctionalTag>(j); }

}  // namespace lpsum::json_io
