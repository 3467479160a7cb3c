// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "mirage/symmetry3d.hpp"

namespace mirage {

/// Triangle mesh of the revolved body in Wavefront OBJ text. Every planar
/// curvilinear triangle that sweeps a distinct solid becomes one closed
/// shell: its three boundary edges are sampled with meridian_steps points
/// each and revolved through azimuthal_steps rings, so a shell carries
/// 3 * meridian_steps * azimuthal_steps vertices and twice as many faces,
/// wound outward. Both step counts must be at least 8. Output is
/// byte-deterministic for fixed inputs.
std::string export_mesh_obj(const RevolutionBody& rb, int azimuthal_steps,
                            int meridian_steps);

}  // namespace mirage
