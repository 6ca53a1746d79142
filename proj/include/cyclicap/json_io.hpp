#pragma once

#include <span>
#include <string>

#include "cyclicap/channel.hpp"
#include "cyclicap/gdof.hpp"
#include "cyclicap/inequality_system.hpp"
#include "cyclicap/polyhedra.hpp"
#include "cyclicap/regions.hpp"

namespace cyclicap {

/// One double, 17 significant digits ("%.17g"): round-trips exactly and is
/// byte-stable across runs.
std::string format_double(double v);

/// Region schema, keys in this order:
///   {"vars":[...],"rows":[{"coeffs":[...],"rhs":N,"family":"...","params":{...}}]}
/// Row order is the generators' order (generator family order, then index
/// order); params keys appear in the order m, l, i.
std::string render_json(const InequalitySystem& sys);

/// Parses text produced by render_json (or hand-written in the same schema).
InequalitySystem parse_region_json(const std::string& text);

std::string render_gap_json(const GapReport& report);
std::string render_ineq_json(const IneqReport& report);

/// CSV "alpha,snr_db,dsym_lower,dsym_upper,dsym_formula", one row per point.
std::string gdof_csv(std::span<const GdofPoint> points);

/// CSV "x,y", vertices in counterclockwise order.
std::string slice_csv(const Slice2d& slice);

}  // namespace cyclicap
