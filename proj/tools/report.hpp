#pragma once

#include <string>

#include "blowade/blow_ade.hpp"
#include "blowade/deformation.hpp"
#include "json.hpp"

namespace blowade::report {

using Json = nlohmann::ordered_json;

std::string rational(const Rational& q);
Json point(const ProjectivePoint& p);
Json ade_type(const ADEType& t);
Json zeta(const ZetaFunction& z);
Json change(const CoordinateChange& c);
Json principal(const PrincipalPartData& data);
Json point_analysis(const PointAnalysis& p);
Json blow_ade(const BlowAdeReport& r);
Json mu_star(const MuStarTriple& t);
Json verdict(const StabilityVerdict& v);
Json error(const DomainError& e);

}  // namespace blowade::report
