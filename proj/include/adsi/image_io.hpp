#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "adsi/image.hpp"

namespace adsi {

/// Loads an 8-bit PNG, PPM (P6), or PGM (P5) file by extension; samples map
/// linearly to [0,1]. PNG palette/alpha/16-bit inputs are reduced to 8-bit
/// gray or RGB. Throws std::runtime_error on unreadable or malformed files.
Image load_image(const std::string& path);

/// Writes 8-bit PNG/PPM/PGM chosen by extension; samples are clamped and
/// quantized with round(v * 255). PGM takes 1 channel, PPM takes 3; PNG
/// takes either.
void save_image(const std::string& path, const Image& image);

/// Image files (.png/.ppm/.pgm, case-insensitive) directly inside dir,
/// sorted lexicographically by filename. The sort order defines the
/// parameter-stream binding for corpus runs.
std::vector<std::filesystem::path> list_image_files(const std::string& dir);

} // namespace adsi
