#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "epsnet/geom.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

struct Violation {
  GeneralizedDisk disk;
  std::int64_t depth = 0;               // weighted point count inside disk
  std::vector<std::int32_t> witnesses;  // support indices, at most 3
};

struct UncoveredDepth {
  std::int64_t depth = 0;
  std::optional<GeneralizedDisk> disk;
};

// Streams every canonical disk spanned by the set: the circumdisk of each
// non-collinear triple, then per pair its diametral disk and both closed
// halfplanes. `visit` receives the disk and the support indices.
void canonical_disks(
    std::span<const Point> pts,
    const std::function<void(const GeneralizedDisk&,
                             std::span<const std::int32_t>)>& visit);

// Exhaustive check that `net` (indices into pts) hits every closed disk and
// halfplane carrying at least eps * W of the total weight W. The reported
// disk is concrete: re-counting its members reproduces `depth` and none of
// them is a net point.
std::optional<Violation> verify_net(std::span<const Point> pts,
                                    std::span<const std::int32_t> net,
                                    const Rational& eps);

// Largest weight of a closed disk or halfplane avoiding every net point,
// together with a disk realizing it (absent when that weight is zero).
UncoveredDepth max_uncovered_depth(std::span<const Point> pts,
                                   std::span<const std::int32_t> net);

// Monte Carlo cross-check: disks with centers in the dilated bounding box
// and log-uniform radii, plus random halfplanes. Returns the first sampled
// region of weight >= eps * W that avoids the net.
std::optional<Violation> random_probe(std::span<const Point> pts,
                                      std::span<const std::int32_t> net,
                                      const Rational& eps, std::int64_t trials,
                                      std::uint64_t seed);

}  // namespace epsnet
