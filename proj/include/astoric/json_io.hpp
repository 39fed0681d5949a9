#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "astoric/artin_schreier.hpp"
#include "astoric/as_extension.hpp"
#include "astoric/census.hpp"
#include "astoric/cone.hpp"
#include "astoric/heights.hpp"
#include "astoric/herbrand.hpp"
#include "astoric/laurent_series.hpp"
#include "astoric/toric_algebra.hpp"

namespace astoric::io {

using Json = nlohmann::ordered_json;

/// Values used when a document leaves a field out. Fields present in the
/// document always win.
struct Defaults {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> e;
  Window window = kDefaultWindow;
  std::int64_t box = 8;
};

Json to_json(const Rational& r);
Rational rational_from(const Json& j);  // "a/b" strings or integers

Json to_json(const BreakValue& b);
Json to_json(const OrInfinity<Rational>& v);

Json to_json(const LatticePoint& v);
LatticePoint lattice_point_from(const Json& j);
Json to_json(const RationalVector& v);
RationalVector rational_vector_from(const Json& j);

Json to_json(const FqElem& c);
FqElem fq_from(const FiniteField& field, const Json& j);

/// Field named by "p"/"e" in j, falling back to the defaults.
const FiniteField& field_from(const Json& j, const Defaults& d);

Json to_json(const LaurentSeries& s);
LaurentSeries series_from(const Json& j, const Defaults& d);

Json to_json(const ASNormalForm& nf);

Json to_json(const HerbrandFunction& f);
HerbrandFunction herbrand_from(const Json& j, const Defaults& d);

Json to_json(const ExtElem& x);
/// {"base": series, "coeffs": [series, ...]}; coefficient series inherit the
/// base's field.
ExtElem ext_from(const Json& j, const Defaults& d);

Json to_json(const Cone& c);
Cone cone_from(const Json& j);
Json to_json(const LinearFunctional& l);
LinearFunctional functional_from(const Json& j);

Json to_json(const ToricDatum& x);
ToricDatum toric_from(const Json& j, const Defaults& d);

Json to_json(const CokerBasis& b);
Json to_json(const ConeDiagram& d);
ConeDiagram diagram_from(const Json& j);
Json to_json(const PLimitReport& r);
Json to_json(const MapDescriptor& m);
MapDescriptor map_from(const Json& j);
Json to_json(const MapProperties& m);

Json to_json(const HeightSplit& h);
Json to_json(const HeightAxioms& a);
Json to_json(const CensusRow& row);

}  // namespace astoric::io
