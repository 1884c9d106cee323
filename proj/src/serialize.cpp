#include "kakeya/serialize.hpp"

#include <sstream>

#include "kakeya/error.hpp"

namespace kakeya {

using nlohmann::json;

json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

json set_file_json(const PointSet& set) {
  const Field& f = set.space().field();
  return json{{"q", f.q()},
              {"p", f.p()},
              {"k", f.k()},
              {"n", set.space().dim()},
              {"ranks", set.ranks()}};
}

PointSet set_from_json(const json& doc) {
  try {
    const auto p = doc.at("p").get<std::uint64_t>();
    const auto k = doc.at("k").get<unsigned>();
    const auto n = doc.at("n").get<std::size_t>();
    Field field = Field::make(p, k);
    if (doc.contains("q") && doc.at("q").get<std::uint64_t>() != field.q())
      throw Error(ErrorCode::Parse, "set file: q does not equal p^k");
    const auto ranks = doc.at("ranks").get<std::vector<std::uint64_t>>();
    return PointSet::from_ranks(Space(field, n), ranks);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("set file: ") + e.what());
  }
}

namespace {

json object_json(const CertifiedObject& obj) {
  auto ranks = [](const VectorFq& v) {
    std::vector<std::uint64_t> out;
    for (Elem e : v.coords) out.push_back(e.rank);
    return out;
  };
  if (const auto* s = std::get_if<SphereSpec>(&obj))
    return json{{"center", ranks(s->center)}, {"radius", s->radius.rank}};
  if (const auto* h = std::get_if<HypersphereSpec>(&obj))
    return json{{"center", ranks(h->center)},
                {"direction", ranks(h->direction)},
                {"radius", h->radius.rank}};
  const auto& c = std::get<Circle>(obj);
  return json{{"center", c.center.rank}, {"radius", c.radius.rank}};
}

json accounting_json(const ConstructionResult& r) {
  json out = json::object();
  if (const auto* a = std::get_if<RadiusAccounting>(&r.accounting)) {
    out["sumSphereSizes"] = a->sum_sphere_sizes;
    out["sumPairwiseIntersections"] = a->sum_pairwise_intersections;
    out["maxMultiplicity"] = a->max_multiplicity;
    out["tripleIntersectionsEmpty"] = a->triple_intersections_empty;
    out["inclusionExclusionHolds"] = a->inclusion_exclusion_holds;
  } else if (const auto* c = std::get_if<CenterAccounting>(&r.accounting)) {
    out["nonsquare"] = c->nonsquare.rank;
    out["deviation"] = rational_json(c->deviation);
    out["deviationOverQnMinus2"] = rational_json(c->deviation_scaled);
  } else if (const auto* h =
                 std::get_if<HypersphereAccounting>(&r.accounting)) {
    out["objectsUsed"] = h->objects_used;
    out["isotropicSkipped"] = h->isotropic_skipped;
    out["onNullQuadric"] = h->on_null_quadric;
    out["nullQuadricBound"] = h->null_quadric_bound;
  } else if (const auto* k = std::get_if<CircularAccounting>(&r.accounting)) {
    std::vector<std::uint64_t> ranks;
    for (Elem e : k->elements) ranks.push_back(e.rank);
    out["elements"] = ranks;
    if (k->seed_size) out["seedSize"] = k->seed_size;
  }
  return out;
}

}  // namespace

json construction_json(const ConstructionResult& r, const Assessment& a) {
  const Field& f = r.field();
  json terms = json::array();
  for (const Rational& t : r.predicted_main_terms)
    terms.push_back(rational_json(t));
  json witness = json::array();
  for (const WitnessEntry& e : r.witness.entries)
    witness.push_back(json{{"key", e.key.rank}, {"object", object_json(e.object)}});

  json out{{"q", f.q()},
           {"p", f.p()},
           {"k", f.k()},
           {"n", r.space().dim()},
           {"construction", r.construction},
           {"variant", r.variant},
           {"size", r.size},
           {"predictedMainTerms", terms},
           {"boundValue", rational_json(a.bound)},
           {"boundKind", a.bound_is_upper ? "upper" : "lower"},
           {"boundMet", a.bound_met},
           {"witnessValid", a.witness_valid},
           {"exhaustiveValid", a.exhaustive_valid ? json(*a.exhaustive_valid)
                                                  : json(nullptr)},
           {"details", accounting_json(r)},
           {"witness", json{{"kind", to_string(r.witness.kind)},
                            {"entries", witness}}}};
  if (a.circular_window) out["theorem2Window"] = *a.circular_window;
  return out;
}

std::string csv_header() {
  return "q,p,k,n,construction,variant,size,mainTerm1,mainTerm2,mainTerm3,"
         "bound,boundMet,witnessValid";
}

std::string construction_csv_row(const ConstructionResult& r,
                                 const Assessment& a) {
  const Field& f = r.field();
  std::ostringstream os;
  os << f.q() << ',' << f.p() << ',' << f.k() << ',' << r.space().dim() << ','
     << r.construction << ',' << r.variant << ',' << r.size;
  for (std::size_t i = 0; i < 3; ++i) {
    os << ',';
    if (i < r.predicted_main_terms.size()) os << r.predicted_main_terms[i].str();
  }
  os << ',' << a.bound.str() << ',' << (a.bound_met ? "true" : "false") << ','
     << (a.witness_valid ? "true" : "false");
  return os.str();
}

json bound_json(const BoundReport& b) {
  return json{{"q", b.q},
              {"n", b.n},
              {"branch", b.branch == BoundReport::Branch::HighDimension
                             ? "n>=4"
                             : "n in {2,3}"},
              {"boundValue", rational_json(b.value)},
              {"boundCeil", b.ceiling()}};
}

json search_json(const SearchOutcome& o) {
  std::vector<std::uint64_t> ranks;
  for (Elem e : o.example) ranks.push_back(e.rank);
  json out{{"q", o.q},
           {"kind", to_string(o.kind)},
           {"method", o.exact ? "exact" : "greedy"},
           {o.exact ? "minimalSize" : "foundSize", o.size},
           {"exampleSet", ranks},
           {"nodesExplored", o.nodes_explored},
           {"certified", o.certified}};
  return out;
}

}  // namespace kakeya
