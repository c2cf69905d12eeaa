#include "topobim/json_io.hpp"

#include <algorithm>
#include <utility>

#include "topobim/error.hpp"

namespace topobim {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

LabelSet labels_from_json(const Json& j) {
  if (!j.is_array()) malformed("labels must be an array");
  std::vector<std::uint32_t> ids;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 0xffffffffLL) {
      malformed("labels must be non-negative integers");
    }
    ids.push_back(x.get<std::uint32_t>());
  }
  if (ids.size() > static_cast<std::size_t>(kMaxLabels)) {
    throw Error(ErrorCode::kGroundSetTooLarge, "at most " + std::to_string(kMaxLabels) + " labels");
  }
  return LabelSet::from_ascending(ids);
}

bool entry(const Json& x) {
  if (x.is_boolean()) return x.get<bool>();
  if (x.is_number_integer() && (x.get<long long>() == 0 || x.get<long long>() == 1)) {
    return x.get<long long>() == 1;
  }
  malformed("relation entries must be 0 or 1");
}

}  // namespace

Json topology_to_json(const Topology& t) {
  Json leq = Json::array();
  for (int i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < t.size(); ++j) row.push_back(t.leq(i, j) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  return Json{{"labels", t.labels().ids()}, {"leq", std::move(leq)}};
}

Topology topology_from_json(const Json& j) {
  const LabelSet labels = labels_from_json(field(j, "labels"));
  const Json& leq = field(j, "leq");
  if (!leq.is_array() || leq.size() != static_cast<std::size_t>(labels.size())) {
    malformed("leq must have one row per label");
  }
  BoolMatrix m(labels.size());
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (!leq[i].is_array() || leq[i].size() != leq.size()) malformed("leq must be square");
    for (std::size_t k = 0; k < leq.size(); ++k) {
      if (entry(leq[i][k])) m.set(static_cast<int>(i), static_cast<int>(k));
    }
  }
  return make_topology(labels, m);
}

Json key_to_json(const BasisKey& key) {
  if (key.holds<Topology>()) return topology_to_json(key.as<Topology>());
  if (key.holds<OpenPair>()) {
    const OpenPair& p = key.as<OpenPair>();
    return Json{{"topology", topology_to_json(p.topology())}, {"open", p.open_labels().ids()}};
  }
  if (key.holds<AdmissiblePair>()) {
    const AdmissiblePair& p = key.as<AdmissiblePair>();
    return Json{{"base", topology_to_json(p.base())}, {"refinement", topology_to_json(p.refinement())}};
  }
  const Tensor& t = key.as<Tensor>();
  Json factors = Json::array();
  for (const BasisKey& f : t.factors) factors.push_back(key_to_json(f));
  return Json{{"kind", tensor_kind_name(t.kind)}, {"factors", std::move(factors)}};
}

BasisKey key_from_json(const Json& j) {
  if (!j.is_object()) malformed("a basis key must be a JSON object");
  if (j.contains("labels")) return topology_from_json(j);
  if (j.contains("open")) {
    return OpenPair::from_labels(topology_from_json(field(j, "topology")), labels_from_json(j.at("open")));
  }
  if (j.contains("base")) {
    return AdmissiblePair(topology_from_json(j.at("base")), topology_from_json(field(j, "refinement")));
  }
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) malformed("tensor kind must be a string");
    const TensorKind kind = tensor_kind_from_name(j.at("kind").get<std::string>());
    const Json& fs = field(j, "factors");
    if (!fs.is_array()) malformed("tensor factors must be an array");
    std::vector<BasisKey> factors;
    for (const Json& f : fs) {
      BasisKey k = key_from_json(f);
      if (k.holds<Tensor>()) malformed("tensor factors cannot be tensors");
      factors.push_back(std::move(k));
    }
    return make_tensor(kind, std::move(factors));
  }
  malformed("unrecognised basis key");
}

Json lincomb_to_json(const LinComb& v) {
  std::vector<std::pair<std::string, Json>> rows;
  for (const auto& [k, c] : v.terms()) {
    Json key = key_to_json(k);
    std::string sort_key = key.dump();
    rows.emplace_back(std::move(sort_key), Json{{"coeff", rational_to_string(c)}, {"key", std::move(key)}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json terms = Json::array();
  for (auto& row : rows) terms.push_back(std::move(row.second));
  return Json{{"terms", std::move(terms)}};
}

LinComb lincomb_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  LinComb out;
  for (const Json& t : terms) {
    const Json& c = field(t, "coeff");
    Rational q;
    if (c.is_string()) {
      q = rational_from_string(c.get<std::string>());
    } else if (c.is_number_integer()) {
      q = Rational(std::to_string(c.get<long long>()));
    } else {
      malformed("coefficients must be strings 'p/q' or integers");
    }
    out.add_term(key_from_json(field(t, "key")), q);
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace topobim
