#include "cedeconv/imagez/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cedeconv::imagez {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class PgmCursor {
 public:
  explicit PgmCursor(const std::string& data) : data_(data) {}

  // Next whitespace-delimited header token, skipping '#' comments.
  long header_int(const char* what) {
    skip_space_and_comments();
    size_t start = pos_;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    if (start == pos_) throw ImageFormatError(std::string("pgm: malformed header, expected ") + what);
    long value = 0;
    auto res = std::from_chars(data_.data() + start, data_.data() + pos_, value);
    if (res.ec != std::errc()) throw ImageFormatError(std::string("pgm: bad ") + what);
    return value;
  }

  long ascii_sample() {
    skip_space_and_comments();
    return header_int("sample");
  }

  // Exactly one whitespace byte separates maxval from a binary raster.
  void end_header() {
    if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
      throw ImageFormatError("pgm: missing whitespace after header");
    }
    ++pos_;
  }

  size_t pos() const { return pos_; }
  void advance(size_t n) { pos_ += n; }
  const std::string& data() const { return data_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& data_;
  size_t pos_ = 2;
};

Image read_pgm(const fs::path& path) {
  const std::string data = slurp(path);
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5')) {
    throw ImageFormatError("pgm: expected P2 or P5 magic in " + path.string());
  }
  const bool binary = data[1] == '5';
  PgmCursor cur(data);
  const long width = cur.header_int("width");
  const long height = cur.header_int("height");
  const long maxval = cur.header_int("maxval");
  if (width <= 0 || height <= 0) throw ImageFormatError("pgm: non-positive dimensions");
  if (maxval <= 0 || maxval > 65535) throw ImageFormatError("pgm: maxval out of range");

  const size_t rows = static_cast<size_t>(height), cols = static_cast<size_t>(width);
  std::vector<double> px(rows * cols);
  if (binary) {
    cur.end_header();
    const size_t bytes = maxval < 256 ? 1 : 2;
    if (data.size() - cur.pos() < px.size() * bytes) throw ImageFormatError("pgm: truncated raster");
    const auto* raw = reinterpret_cast<const unsigned char*>(data.data() + cur.pos());
    for (size_t k = 0; k < px.size(); ++k) {
      unsigned v = bytes == 1 ? raw[k] : (static_cast<unsigned>(raw[2 * k]) << 8) | raw[2 * k + 1];
      if (v > static_cast<unsigned>(maxval)) throw ImageFormatError("pgm: sample exceeds maxval");
      px[k] = v;
    }
  } else {
    for (auto& v : px) {
      long s = cur.ascii_sample();
      if (s > maxval) throw ImageFormatError("pgm: sample exceeds maxval");
      v = static_cast<double>(s);
    }
  }
  return Image(rows, cols, std::move(px));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Image read_csv(const fs::path& path) {
  const std::string data = slurp(path);
  std::vector<std::vector<double>> rows;
  std::istringstream in(data);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest(line);
    for (;;) {
      size_t comma = rest.find(',');
      std::string_view field = trim(rest.substr(0, comma));
      double v = 0.0;
      auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size() || !std::isfinite(v)) {
        throw ImageFormatError("csv: bad number '" + std::string(field) + "' on line " + std::to_string(line_no));
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ImageFormatError("csv: non-rectangular data at line " + std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ImageFormatError("csv: no data in " + path.string());
  return Image::from_rows(rows);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string encode_pgm(const Image& img, bool binary) {
  std::vector<unsigned> samples;
  samples.reserve(img.pixels().size());
  for (double v : img.pixels()) samples.push_back(static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 65535.0))));
  const unsigned maxval = std::all_of(samples.begin(), samples.end(), [](unsigned s) { return s <= 255; }) ? 255 : 65535;

  std::ostringstream out;
  out << (binary ? "P5" : "P2") << '\n' << img.cols() << ' ' << img.rows() << '\n' << maxval << '\n';
  if (binary) {
    for (unsigned s : samples) {
      if (maxval > 255) out.put(static_cast<char>((s >> 8) & 0xff));
      out.put(static_cast<char>(s & 0xff));
    }
  } else {
    for (size_t x = 0; x < img.rows(); ++x) {
      for (size_t y = 0; y < img.cols(); ++y) out << (y ? " " : "") << samples[x * img.cols() + y];
      out << '\n';
    }
  }
  return out.str();
}

std::string encode_csv(const Image& img) {
  std::string out;
  for (size_t x = 0; x < img.rows(); ++x) {
    for (size_t y = 0; y < img.cols(); ++y) {
      if (y) out += ',';
      out += format_double(img.at(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

ImageFormat format_from_path(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".pgm" || ext == ".pnm") return ImageFormat::pgm;
  if (ext == ".csv") return ImageFormat::csv;
  throw ImageFormatError("unknown image extension '" + ext + "' (expected .pgm or .csv)");
}

Image read_image(const fs::path& path, ImageFormat format) {
  return format == ImageFormat::pgm ? read_pgm(path) : read_csv(path);
}

Image read_image(const fs::path& path) { return read_image(path, format_from_path(path)); }

void write_file_atomic(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_image(const Image& img, const fs::path& path, ImageFormat format, const PgmWriteOptions& pgm) {
  write_file_atomic(path, format == ImageFormat::pgm ? encode_pgm(img, pgm.binary) : encode_csv(img));
}

void write_image(const Image& img, const fs::path& path) { write_image(img, path, format_from_path(path)); }

}  // namespace cedeconv::imagez
