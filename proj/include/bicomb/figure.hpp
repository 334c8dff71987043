#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace bicomb {

enum class FigureName { space_X_with_geodesic, convexity_pair, folded_X1, midpoint_X1 };

std::string_view to_string(FigureName name);
FigureName figure_from_string(std::string_view name);

/// Number of parameter values per polyline.
inline constexpr int kFigureSamples = 257;

/// Writes the figure as CSV with header "series,t,x,y". Every series is a
/// polyline sampled at kFigureSamples parameter values; region boundaries
/// come first, then the geodesics. The convexity_pair figure adds a
/// "distance" series with x = t and y = d(sigma_pq(t), sigma_p'q'(t)).
/// Throws std::invalid_argument if delta is outside [0, 1/64].
void write_figure(std::ostream& out, FigureName name, double delta);

/// Same, to a file. Throws std::runtime_error on I/O failure.
void export_figure(FigureName name, double delta, const std::filesystem::path& out);

}  // namespace bicomb
