#include "adsi/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace adsi {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

double to_unit(unsigned value, unsigned maxval) {
    return static_cast<double>(value) / static_cast<double>(maxval);
}

unsigned char to_byte(double v) {
    return static_cast<unsigned char>(
        std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

Image load_png(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) throw std::runtime_error("image: cannot open '" + path + "'");

    unsigned char header[8];
    if (std::fread(header, 1, sizeof(header), file.get()) != sizeof(header) ||
        png_sig_cmp(header, 0, sizeof(header)) != 0) {
        throw std::runtime_error("image: '" + path + "' is not a PNG file");
    }

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("image: libpng initialization failed");
    }
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("image: failed to decode '" + path + "'");
    }
    png_init_io(png, file.get());
    png_set_sig_bytes(png, sizeof(header));
    png_read_info(png, info);

    // Normalize every color layout to 8-bit gray or RGB.
    png_set_strip_16(png);
    png_set_packing(png);
    png_set_strip_alpha(png);
    const png_byte color_type = png_get_color_type(png, info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY &&
        png_get_bit_depth(png, info) < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    const int channels = static_cast<int>(png_get_channels(png, info));
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("image: unsupported channel layout in '" + path +
                                 "'");
    }

    std::vector<unsigned char> pixels(static_cast<std::size_t>(height) * width *
                                      channels);
    rows.resize(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * width * channels;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Image image(channels, height, width);
    for (int c = 0; c < channels; ++c) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                image.at(c, y, x) = to_unit(
                    pixels[(static_cast<std::size_t>(y) * width + x) * channels + c],
                    255);
            }
        }
    }
    return image;
}

void save_png(const std::string& path, const Image& image) {
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) throw std::runtime_error("image: cannot write '" + path + "'");

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("image: libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("image: failed to encode '" + path + "'");
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, image.width(), image.height(), 8,
                 image.channels() == 1 ? PNG_COLOR_TYPE_GRAY
                                       : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const int channels = image.channels();
    std::vector<unsigned char> row(static_cast<std::size_t>(image.width()) *
                                   channels);
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            for (int c = 0; c < channels; ++c) {
                row[static_cast<std::size_t>(x) * channels + c] =
                    to_byte(image.at(c, y, x));
            }
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

// PNM helpers: P5 (gray) and P6 (RGB), binary body, maxval up to 255.

int read_pnm_value(std::istream& in, const std::string& path) {
    // Skips whitespace and '#' comments between header tokens.
    while (true) {
        const int c = in.peek();
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    if (!(in >> value) || value < 0) {
        throw std::runtime_error("image: malformed PNM header in '" + path + "'");
    }
    return value;
}

Image load_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("image: cannot open '" + path + "'");

    std::string magic;
    in >> magic;
    int channels = 0;
    if (magic == "P5") channels = 1;
    else if (magic == "P6") channels = 3;
    else {
        throw std::runtime_error("image: '" + path +
                                 "' is not a binary PGM/PPM file");
    }

    const int width = read_pnm_value(in, path);
    const int height = read_pnm_value(in, path);
    const int maxval = read_pnm_value(in, path);
    if (maxval < 1 || maxval > 255) {
        throw std::runtime_error("image: unsupported PNM maxval in '" + path +
                                 "' (8-bit only)");
    }
    in.get(); // single whitespace byte before the raster

    std::vector<unsigned char> pixels(static_cast<std::size_t>(height) * width *
                                      channels);
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != pixels.size()) {
        throw std::runtime_error("image: truncated PNM raster in '" + path + "'");
    }

    Image image(channels, height, width);
    for (int c = 0; c < channels; ++c) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                image.at(c, y, x) = to_unit(
                    pixels[(static_cast<std::size_t>(y) * width + x) * channels + c],
                    maxval);
            }
        }
    }
    return image;
}

void save_pnm(const std::string& path, const Image& image, int channels) {
    if (image.channels() != channels) {
        throw std::invalid_argument("image: " +
                                    std::string(channels == 1 ? "PGM" : "PPM") +
                                    " requires " + std::to_string(channels) +
                                    " channel(s)");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("image: cannot write '" + path + "'");
    out << (channels == 1 ? "P5" : "P6") << "\n"
        << image.width() << " " << image.height() << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(image.width()) *
                                   channels);
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            for (int c = 0; c < channels; ++c) {
                row[static_cast<std::size_t>(x) * channels + c] =
                    to_byte(image.at(c, y, x));
            }
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("image: failed writing '" + path + "'");
}

} // namespace

Image load_image(const std::string& path) {
    const std::string ext = lower_extension(path);
    if (ext == ".png") return load_png(path);
    if (ext == ".ppm" || ext == ".pgm") return load_pnm(path);
    throw std::runtime_error("image: unsupported file type '" + path + "'");
}

void save_image(const std::string& path, const Image& image) {
    require_valid(image);
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        save_png(path, image);
    } else if (ext == ".ppm") {
        save_pnm(path, image, 3);
    } else if (ext == ".pgm") {
        save_pnm(path, image, 1);
    } else {
        throw std::runtime_error("image: unsupported file type '" + path + "'");
    }
}

std::vector<std::filesystem::path> list_image_files(const std::string& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("corpus: '" + dir + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = lower_extension(entry.path());
        if (ext == ".png" || ext == ".ppm" || ext == ".pgm") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const std::filesystem::path& a, const std::filesystem::path& b) {
                  return a.filename().string() < b.filename().string();
              });
    return files;
}

} // namespace adsi
