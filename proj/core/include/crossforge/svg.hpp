#pragma once

#include <filesystem>
#include <string>

#include "crossforge/scene.hpp"

namespace crossforge {

/// SVG 1.1 document for the scene: the cylinder unrolled into a rectangle
/// (the identified left/right sides marked), cap disks above/below when the
/// scene uses caps, and the geometric crossing count in the caption.
/// Output is a pure function of the scene.
std::string render_svg(const CylinderScene& scene);

/// Writes render_svg(scene) to `path`; throws std::runtime_error on I/O failure.
void emit_svg(const CylinderScene& scene, const std::filesystem::path& path);

}  // namespace crossforge
