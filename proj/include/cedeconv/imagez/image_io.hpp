#pragma once

#include "cedeconv/imagez/image.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace cedeconv::imagez {

enum class ImageFormat { pgm, csv };

class ImageFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks the format from the file extension (.pgm/.pnm or .csv).
ImageFormat format_from_path(const std::filesystem::path& path);

/// PGM: P2 or P5, maxval up to 65535 (16-bit samples are big-endian).
/// Pixel values are the raw samples. CSV: one image row per line,
/// comma-separated decimal reals.
Image read_image(const std::filesystem::path& path, ImageFormat format);
Image read_image(const std::filesystem::path& path);

struct PgmWriteOptions {
  /// P5 when true, P2 otherwise.
  bool binary = true;
};

/// PGM output rounds and clamps to [0, maxval]; maxval is 255 when every
/// rounded value fits in 8 bits and 65535 otherwise. CSV output is lossless
/// (shortest round-trip decimal form). Files are written to a temporary name
/// and renamed into place.
void write_image(const Image& img, const std::filesystem::path& path, ImageFormat format,
                 const PgmWriteOptions& pgm = {});
void write_image(const Image& img, const std::filesystem::path& path);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace cedeconv::imagez
