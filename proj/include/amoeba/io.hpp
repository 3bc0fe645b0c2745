#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "amoeba/bounds.hpp"
#include "amoeba/contour.hpp"
#include "amoeba/gaussmap.hpp"
#include "amoeba/grassmann.hpp"
#include "amoeba/laurent.hpp"
#include "amoeba/polytope.hpp"
#include "amoeba/rdegree.hpp"

namespace amoeba::io {

using Json = nlohmann::json;

/// {"n": 2, "terms": [{"e": [1,0], "re": 1.0, "im": 0.0}, ...]}, terms in exponent order.
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

/// Number when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& v);

Json to_json(const LatticePolytope& d);
Json to_json(const ContourPoint& p);
Json to_json(const ContourTrace& t);
Json to_json(const ContourCurve& c);
Json to_json(std::span<const ContourCurve> curves);
Json to_json(const AmoebaSample& s);
Json to_json(const AffineLine& l);
Json to_json(const RDegreeEstimate& e);
Json to_json(const GaussDegreeEstimate& g);
Json to_json(const Finding& f);
Json to_json(const BoundReport& r);
Json to_json(const Codim2Check& c);

/// phi,re_z,im_z,re_w,im_w,x,y,residual
std::string contour_csv(std::span<const ContourPoint> points);
/// chain,closed,phi,x,y per chained point.
std::string chains_csv(std::span<const ContourCurve> curves);
/// x,y
std::string amoeba_csv(const AmoebaSample& s);
/// line,base_x,base_y,dir_x,dir_y,crossings
std::string rdegree_csv(const RDegreeEstimate& e);

/// Markdown table of every closed-form and empirical field, then the findings.
std::string bounds_markdown(const BoundReport& r);

/// 1000 x 1000 SVG of the window: amoeba points as dots, chains as polylines
/// (split where they leave the window), optional marked points.
std::string render_svg(const Window& window, const AmoebaSample* amoeba, std::span<const ContourCurve> curves,
                       std::span<const ContourPoint> marks = {});

/// Shortest round-trip decimal form used in CSV and SVG.
std::string number(double v);

}  // namespace amoeba::io
