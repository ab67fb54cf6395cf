#include "m2z/json.hpp"

#include <cstdint>


namespace m2z {

Json as_json(const Int& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return to_string(value);
}

Json as_json(const Mat2& m) {
  return Json::array({Json::array({as_json(m.e11), as_json(m.e12)}),
                      Json::array({as_json(m.e21), as_json(m.e22)})});
}

Json as_json(const EquationSpec& spec) {
  Json j;
  j["a"] = as_json(spec.a);
  j["b"] = as_json(spec.b);
  j["c"] = as_json(spec.c);
  j["m"] = spec.m;
  j["n"] = spec.n;
  j["lambda"] = spec.lambda ? as_json(*spec.lambda) : Json(nullptr);
  return j;
}

Json as_json(const FamilyDescriptor& family) {
  Json params;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, QuadraticConstants>) {
          params["a"] = as_json(p.a);
          params["b"] = as_json(p.b);
          params["c"] = as_json(p.c);
        } else if constexpr (std::is_same_v<P, PellParams>) {
          params["u"] = as_json(p.u);
          params["v"] = as_json(p.v);
          params["g"] = as_json(p.g);
          params["a"] = as_json(p.a);
          params["b"] = as_json(p.b);
          params["c"] = as_json(p.c);
        } else if constexpr (std::is_same_v<P, QuarticParams>) {
          params["c"] = as_json(p.c);
        } else {
          params["a"] = as_json(p.a);
          params["b"] = as_json(p.b);
          params["m"] = p.m;
          params["n"] = p.n;
          params["c1"] = as_json(p.c1);
          params["c2"] = as_json(p.c2);
        }
      },
      family.params);
  Json j;
  j["tag"] = std::string(tag_name(family.tag));
  j["params"] = std::move(params);
  return j;
}

Json as_json(const FamilyShape& shape) {
  auto side = [](const std::array<LinearForm, 4>& forms) {
    return Json::array({Json::array({to_string(forms[0]), to_string(forms[1])}),
                        Json::array({to_string(forms[2]), to_string(forms[3])})});
  };
  Json j;
  j["x"] = side(shape.X);
  j["y"] = side(shape.Y);
  return j;
}

Json as_json(const SolutionPair& pair) {
  Json j;
  j["x"] = as_json(pair.X);
  j["y"] = as_json(pair.Y);
  j["satisfied"] = pair.satisfied;
  j["commuting"] = pair.commuting;
  j["nontrivial"] = pair.nontrivial;
  j["family"] = pair.family ? as_json(*pair.family) : Json(nullptr);
  return j;
}

Json as_json(const NoncommHit& hit) {
  Json j;
  j["k"] = hit.k;
  j["l"] = hit.l;
  j["alpha"] = as_json(hit.alpha);
  j["beta"] = as_json(hit.beta);
  j["x"] = as_json(hit.X);
  j["y"] = as_json(hit.Y);
  j["nontrivial"] = hit.nontrivial;
  return j;
}

Json as_json(const ReductionFrame& frame) {
  Json j;
  j["e"] = as_json(frame.e);
  j["f"] = as_json(frame.f);
  j["g"] = as_json(frame.g);
  j["disc"] = as_json(frame.disc);
  j["D"] = as_json(frame.D);
  j["k"] = as_json(frame.k);
  return j;
}

Json as_json(const SolvabilityReport& report) {
  Json payload;
  payload["side"] = std::string(side_name(report.side));
  payload["complete"] = report.complete;
  payload["truncation"] = report.truncation.empty() ? Json(nullptr) : Json(report.truncation);
  Json families = Json::array();
  for (const auto& f : report.families) families.push_back(as_json(f));
  payload["families"] = std::move(families);
  Json hits = Json::array();
  for (const auto& h : report.scalar_solutions) hits.push_back(as_json(h));
  payload["scalar_solutions"] = std::move(hits);
  Json frames = Json::array();
  for (const auto& f : report.frames) frames.push_back(as_json(f));
  payload["frames"] = std::move(frames);
  Json parts = Json::array();
  for (const auto& p : report.parts) parts.push_back(as_json(p));
  payload["parts"] = std::move(parts);

  Json j;
  j["verdict"] = std::string(verdict_name(report.verdict));
  j["citation"] = report.citation.empty() ? Json(nullptr) : Json(report.citation);
  j["payload"] = std::move(payload);
  return j;
}

Json as_json(const OracleCounts& counts) {
  Json j;
  j["total"] = counts.total;
  j["commuting"] = counts.commuting;
  j["noncommuting"] = counts.noncommuting;
  j["nontrivial"] = counts.nontrivial;
  j["trivial"] = counts.trivial;
  return j;
}

Json oracle_line(const SolutionPair& pair) {
  Json j;
  j["x"] = as_json(pair.X);
  j["y"] = as_json(pair.Y);
  j["family"] = pair.family ? as_json(*pair.family) : Json(nullptr);
  j["commuting"] = pair.commuting;
  j["nontrivial"] = pair.nontrivial;
  return j;
}

}  // namespace m2z
