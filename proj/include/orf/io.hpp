#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orf/matrices.hpp"
#include "orf/spectral.hpp"

namespace orf::io {

using nlohmann::json;

// "re,im", a plain real "x", or "theta:t" for e^{it}.
Complex parse_complex(const std::string& s);
// Semicolon-separated list of complex values; empty string gives an empty list.
std::vector<Complex> parse_complex_list(const std::string& s);

// Accepts [re, im], "re,im", "theta:t" or a bare number.
Complex complex_from_json(const json& j);
std::vector<Complex> complex_list_from_json(const json& j);
json complex_to_json(Complex z);

// %.17g, used for every number written by the CLI.
std::string fmt(double x);

DiscreteMeasure measure_from_json(const json& j);
json measure_to_json(const DiscreteMeasure& mu);

void write_matrix_csv(std::ostream& os, const Mat& M);
json matrix_to_json(const Mat& M, const std::string& kind);

void write_quadrature_csv(std::ostream& os, const DiscreteMeasure& mu);
void write_points_csv(std::ostream& os, const std::vector<CPoint>& pts);
json eigen_to_json(const EigenResult& e);

// Serializes with numbers in %.17g so that output is byte-stable.
std::string dump(const json& j);

json read_json_file(const std::string& path);

}  // namespace orf::io
